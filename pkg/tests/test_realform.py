import pytest

from sconf.exactlinalg import I, Matrix, ONE, Subspace, ZERO, qi
from sconf import centralizer, realform, sampling, twist


def test_presets_are_involutive_homomorphisms():
    for name in realform.PRESET_NAMES:
        theta = realform.preset_involution(name)
        assert theta.is_homomorphism()
        assert realform.check_involution(theta, 4)


def test_presets_cut_real_forms():
    for name in realform.PRESET_NAMES:
        assert realform.real_form_dimension_check(realform.preset_involution(name))


def test_involution_json_roundtrip():
    for name in realform.PRESET_NAMES:
        theta = realform.preset_involution(name)
        back = realform.involution_from_json(realform.involution_to_json(theta))
        assert back == theta


def test_split_fixed_locus_is_real_matrices():
    theta = realform.preset_involution("split")
    full = Subspace(
        16, [tuple(ONE if a == 4 * i + j else ZERO for a in range(16))
             for i in range(4) for j in range(4)]
    )
    fixed = realform.fixed_subalgebra(theta, full)
    assert fixed.dim == 16


def test_fixed_subalgebra_stability_flag():
    theta = realform.preset_involution("euclidean")
    # a line theta moves: E01 only
    line = Subspace(16, [tuple(ONE if a == 1 else ZERO for a in range(16))])
    with pytest.raises(ValueError):
        realform.fixed_subalgebra(theta, line, require_stable=True)


def test_schur_signature_reports():
    assert realform.schur_realform_report((4, 0)) == {
        "signature": [4, 0], "involution": "euclidean",
        "dim_z_real": 6, "dim_b_real": 0,
    }
    assert realform.schur_realform_report((3, 1)) == {
        "signature": [3, 1], "involution": "lorentzian",
        "dim_z_real": 7, "dim_b_real": 3,
    }
    rep = realform.schur_realform_report((2, 2))
    assert (rep["dim_z_real"], rep["dim_b_real"]) == (11, 8)
    assert (rep["translations_closed_real"], rep["translations_exact_real"]) == (3, 2)


def test_schur_report_rejects_unknown_signature():
    with pytest.raises(ValueError):
        realform.schur_realform_report((1, 3))


def test_kernel_fiber_of_schur():
    q = centralizer.schur_supercharge()
    ker = realform.kernel_fiber(q).plane
    assert ker == Subspace(4, [(ZERO, ONE, ZERO, ZERO), (ZERO, ZERO, ZERO, ONE)])


def test_kernel_fiber_equivariance(rng):
    q = centralizer.schur_supercharge()
    ker = realform.kernel_fiber(q).plane
    for _ in range(10):
        a, b = sampling.rand_sl(rng, 4), sampling.rand_sl(rng, 2)
        moved = Subspace(4, [a.apply(v) for v in ker.vectors()])
        assert realform.kernel_fiber(q.conjugate(a, b)).plane == moved


def test_kernel_fiber_rejects_nonchiral():
    q = twist.canonical_rep_4d(3, 1, 1)
    with pytest.raises(ValueError):
        realform.kernel_fiber(q)


def test_orbit_label_witnesses():
    wit = realform.orbit_label_witnesses()
    assert set(wit) == set(realform.ORBIT_LABELS)
    for label, point in wit.items():
        assert realform.hermitian_orbit_label(point) == label


def test_orbit_label_basis_invariance(rng):
    wit = realform.orbit_label_witnesses()
    for _ in range(40):
        label = rng.choice(sorted(wit))
        u, v = wit[label].plane.vectors()
        m = sampling.rand_sl(rng, 2)
        mixed = [
            tuple(m[0, 0] * x + m[0, 1] * y for x, y in zip(u, v)),
            tuple(m[1, 0] * x + m[1, 1] * y for x, y in zip(u, v)),
        ]
        point = realform.GrassmannPoint(Subspace(4, mixed))
        assert realform.hermitian_orbit_label(point) == label


def test_random_planes_hit_known_labels(rng):
    count = 0
    while count < 100:
        plane = Subspace(4, [sampling.rand_vector(rng, 4), sampling.rand_vector(rng, 4)])
        if plane.dim != 2:
            continue
        label = realform.hermitian_orbit_label(realform.GrassmannPoint(plane))
        assert label in realform.ORBIT_LABELS
        count += 1


def test_signature_on_degenerate_grams():
    zero = [[ZERO, ZERO], [ZERO, ZERO]]
    assert realform.hermitian_signature(zero) == (0, 0, 2)
    offdiag = [[ZERO, I], [-I, ZERO]]
    assert realform.hermitian_signature(offdiag) == (1, 1, 0)
    mixed = [[ONE, ZERO], [ZERO, ZERO]]
    assert realform.hermitian_signature(mixed) == (1, 0, 1)


def test_orbit_label_rejects_wrong_dimension():
    p = realform.GrassmannPoint(Subspace(4, [(ONE, ZERO, ZERO, ZERO)]))
    with pytest.raises(ValueError):
        realform.hermitian_orbit_label(p)
