from sconf.exactlinalg import Matrix, ONE, ZERO
from sconf import centralizer, sampling, twist


def test_zero_twist_centralizer(sl42):
    q = twist.Supercharge4d.zero(2).to_element()
    z = centralizer.z_even(sl42, q)
    b = centralizer.b_even(sl42, q)
    assert z.dim == sl42.even_dim == 19
    assert b.dim == 0


def test_table_dimensions_small():
    for k, r, want_z, want_b in ((2, 1, 14, 5), (2, 2, 11, 8), (3, 1, 18, 6)):
        row = centralizer.table1_report(k, r)
        assert (row["dim_z"], row["dim_b"]) == (want_z, want_b)
    # the diagonal r = k rows agree with the published closed form
    assert centralizer.table1_report(2, 2)["matches_printed_z"]
    assert not centralizer.table1_report(2, 1)["matches_printed_z"]


def test_corrected_forms_cover_every_cell():
    for k in range(1, 9):
        for r in range(1, min(4, k) + 1):
            row = centralizer.table1_report(k, r)
            assert row["dim_z"] == centralizer.corrected_table_z(k, r)
            assert row["dim_b"] == centralizer.corrected_table_b(k, r)
            assert row["dim_quotient"] == row["dim_z"] - row["dim_b"]


def test_chiral_block_pattern():
    for k, r in ((2, 1), (3, 2), (5, 3)):
        res = centralizer.chiral_structure_check(k, r)
        assert res["ok"], res


def test_full_rank_diagonal():
    res = centralizer.full_rank_psl44_check()
    assert res["ok"] and res["dim_z"] == res["dim_b"] == 15


def test_rank11_patterns():
    for k in (2, 3, 5):
        res = centralizer.rank11_check(k)
        assert res["ok"], res
        assert res["dim_b"] == 2 * k + 4
        # the published count is one higher; keep the discrepancy visible
        assert res["published_dim_b"] == res["dim_b"] + 1


def test_rank11_negative_control():
    assert not centralizer.rank11_check(3, corrupt=True)["ok"]


def test_schur_projections():
    pb = centralizer.projection_blocks()
    assert (pb["dim_z"], pb["dim_b"]) == (11, 8)
    assert pb["z_conf_equals_h_pattern"]
    assert pb["b_conf_equals_k_pattern"]
    assert (pb["dim_z_conf"], pb["dim_b_conf"]) == (11, 7)
    assert (pb["dim_translations_closed"], pb["dim_translations_exact"]) == (3, 2)


def test_schur_rejects_other_input():
    import pytest

    q = twist.canonical_rep_4d(2, 1, 0)
    with pytest.raises(ValueError):
        centralizer.projection_blocks(q)


def test_ideal_property(sl43):
    q = twist.canonical_rep_4d(3, 2, 0).to_element()
    rep = centralizer.centralizer_report(q)
    assert centralizer.ideal_check(rep, sl43)
    assert rep.basis_z.contains_subspace(rep.basis_b)


def test_rank_nullity_on_even_part(sl43):
    q = twist.canonical_rep_4d(3, 1, 1).to_element()
    op = centralizer.ad_operator(q)
    z = centralizer.z_even(sl43, op)
    assert z.dim + op.even_to_odd.rank() == sl43.even_dim


def test_conjugation_equivariance(sl43, rng):
    q = twist.canonical_rep_4d(3, 2, 0)
    rep = centralizer.centralizer_report(q.to_element())
    for _ in range(5):
        a, b = sampling.rand_sl(rng, 4), sampling.rand_sl(rng, 3)
        moved = centralizer.centralizer_report(q.conjugate(a, b).to_element())
        rows = [[ZERO] * 7 for _ in range(7)]
        for i in range(4):
            for j in range(4):
                rows[i][j] = a[i, j]
        for i in range(3):
            for j in range(3):
                rows[4 + i][4 + j] = b[i, j]
        g = Matrix(rows)
        assert centralizer.conjugate_even_subspace(sl43, rep.basis_z, g) == moved.basis_z
        assert centralizer.conjugate_even_subspace(sl43, rep.basis_b, g) == moved.basis_b


def test_3d_example_subspaces():
    res = centralizer.centralizer_3d_example()
    assert res["ok"]
    assert (res["dim_z"], res["dim_b"]) == (7, 4)


def test_3d_rank1_dimensions():
    for k in range(2, 9):
        res = centralizer.centralizer_3d_rank1(k)
        assert res["ok"], res
        assert res["dim_b"] == k + 2
        assert res["matches_published_b"] == (k == 2)
