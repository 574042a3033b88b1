import pytest

from sconf.exactlinalg import I, Matrix, ONE, ZERO, qi
from sconf import sampling, twist


def test_canonical_reps_square_zero():
    for k in (1, 2, 3, 4, 5):
        for rp in range(min(4, k) + 1):
            for rm in range(min(4, k) + 1 - rp):
                q = twist.canonical_rep_4d(k, rp, rm)
                assert twist.is_square_zero(q.to_element())
                inv = twist.orbit_invariant_4d(q)
                if k == 4 and (rp, rm) in ((4, 0), (0, 4)):
                    assert inv.extra is not None
                else:
                    assert inv.rank_data == (rp, rm)


def test_4d_characterization_matches_bracket(rng):
    for _ in range(80):
        qp = sampling.rand_matrix(rng, 3, 4)
        qm = sampling.rand_matrix(rng, 4, 3)
        q = twist.Supercharge4d(3, qp, qm)
        assert twist.check_4d_characterization(q) == twist.is_square_zero(
            q.to_element()
        )


def test_rank_pair_invariance(rng):
    for _ in range(30):
        k = rng.choice((2, 3, 5))
        q = sampling.rand_nilpotent_4d(rng, k)
        base = twist.orbit_invariant_4d(q)
        moved = q.conjugate(sampling.rand_sl(rng, 4), sampling.rand_sl(rng, k))
        assert twist.orbit_invariant_4d(moved) == base


def test_rank_bound(rng):
    for _ in range(40):
        k = rng.choice((1, 2, 3, 4, 5))
        q = sampling.rand_nilpotent_4d(rng, k)
        rp, rm = twist.orbit_invariant_4d(q).rank_data
        assert rp + rm <= min(4, k)


def test_pure_tensor_classification(rng):
    seen = set()
    for _ in range(120):
        t = twist.PureTensor4d(
            sampling.rand_vector(rng, 4),
            sampling.rand_vector(rng, 4),
            sampling.rand_vector(rng, 4),
            sampling.rand_vector(rng, 4),
        )
        seen.add(twist.classify_n4_component(t))
    assert None in seen  # generic tensors are not square-zero

    e = lambda i: tuple(ONE if a == i else ZERO for a in range(4))
    # both orthogonality traces vanish, all factors nonzero
    ortho = twist.PureTensor4d(e(0), e(0), e(1), e(1))
    assert twist.classify_n4_component(ortho) == "tr"
    # a vanishing summand lands in both cones after canonicalization
    chiral = twist.PureTensor4d(e(0), e(1), (ZERO,) * 4, e(2))
    assert twist.classify_n4_component(chiral) == "both"


def test_3d_conditions_match_bracket(rng):
    for _ in range(80):
        k = rng.choice((2, 3, 4))
        q = twist.Supercharge3d(k, *(sampling.rand_vector(rng, k) for _ in range(4)))
        assert twist.check_3d_conditions(q) == twist.is_square_zero(q.to_element())


def test_3d_square_zero_off_product_locus():
    # (u, v, v, u) with independent orthogonal nulls: square-zero but not
    # a sum of two pure products
    u = (ONE, I, ZERO, ZERO)
    v = (ZERO, ZERO, ONE, I)
    q = twist.Supercharge3d(4, u, v, v, u)
    assert twist.is_square_zero(q.to_element())
    assert twist.check_3d_conditions(q)
    assert not twist.is_product_form_3d(q)
    assert twist.decompose_3d(q) is None


def test_3d_decomposition_on_product_form():
    w = (ONE, I, ZERO)
    q = twist.Supercharge3d(3, w, tuple(qi(2) * x for x in w), (ZERO,) * 3, (ZERO,) * 3)
    dec = twist.decompose_3d(q)
    assert dec is not None
    assert dec.c == qi(2)


def test_3d_rank_invariance(rng):
    for _ in range(30):
        k = rng.choice((2, 3, 4, 6))
        q = sampling.rand_nilpotent_3d(rng, k)
        base = twist.orbit_rank_3d(q)
        moved = sampling.conjugate_3d(
            q, sampling.rand_so(rng, k), sampling.rand_sp(rng, 4)
        )
        assert twist.orbit_rank_3d(moved) == base


def test_orbit_param_values():
    assert twist.orbit_param_3d((ONE, I, ZERO, ZERO), (ZERO, ZERO, ONE, I)) == ZERO
    assert twist.orbit_param_3d((ONE, I, ZERO, ZERO), (qi(3), qi(0, 3), ONE, I)) == qi(3)


def test_orbit_param_rotation_invariance(rng):
    w = (ONE, I, ZERO, ZERO)
    wp = (qi(3), qi(0, 3), ONE, I)
    x = twist.orbit_param_3d(w, wp)
    for _ in range(15):
        rot = sampling.rand_rotation(rng, 4)
        assert twist.orbit_param_3d(rot.apply(w), rot.apply(wp)) == x


def test_orbit_param_rejects_bad_input():
    with pytest.raises(ValueError):
        twist.orbit_param_3d((ONE, ZERO, ZERO, ZERO), (ZERO, ZERO, ONE, I))


def test_move_null_to_standard(rng):
    for _ in range(20):
        k = rng.choice((3, 4, 6))
        w = sampling.rand_null_vector(rng, k)
        a = twist.move_null_to_standard(w)
        img = a.apply(w)
        assert img[1] == I * img[0] and all(not c for c in img[2:])


def test_5d_conditions_match_bracket(rng):
    hits = 0
    for _ in range(60):
        if rng.randrange(2):
            q = sampling.rand_nilpotent_5d(rng)
        else:
            q = twist.Supercharge5d(
                sampling.rand_vector(rng, 8), sampling.rand_vector(rng, 8)
            )
        sq = twist.is_square_zero(q.to_element())
        assert twist.check_5d_conditions(q) == sq
        hits += sq
    assert hits > 0


def test_6d_rank(rng):
    from sconf.superlie import build_osp

    alg = build_osp(8, 2)
    # single odd basis element: rank 1 coefficient matrix
    idx = alg.odd_indices[0]
    coeffs = [ZERO] * alg.dim
    coeffs[idx] = ONE
    from sconf.superlie import AlgebraElement

    el = AlgebraElement(alg, tuple(coeffs))
    if twist.is_square_zero(el):
        assert twist.orbit_rank_6d(el) == 1


def test_element_roundtrip():
    q = twist.canonical_rep_4d(3, 1, 2)
    back = twist.Supercharge4d.from_element(q.to_element())
    assert back == q
