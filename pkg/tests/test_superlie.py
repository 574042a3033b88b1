from sconf.exactlinalg import ONE, ZERO
from sconf.sampling import rand_scalar
from sconf.superlie import (
    EVEN,
    ODD,
    build_conf,
    build_osp,
    build_sl_super,
    supercommutator,
    verify_algebra,
)


def test_conf_dimensions():
    # conf(p, q) is so(p+1, q+1) complexified: dim = (n+2)(n+1)/2 for n = p+q
    for (p, q) in ((2, 1), (3, 1), (2, 2), (4, 1)):
        n = p + q + 2
        alg = build_conf(p, q)
        assert alg.dim == n * (n - 1) // 2
        assert alg.odd_dim == 0


def test_sl_super_dimensions(sl42, sl43, psl44):
    assert (sl42.even_dim, sl42.odd_dim) == (19, 16)
    assert (sl43.even_dim, sl43.odd_dim) == (24, 24)
    # gauge-fixed quotient: 15 + 15 even, 32 odd
    assert (psl44.even_dim, psl44.odd_dim) == (30, 32)


def test_osp_dimensions(osp24):
    assert (osp24.even_dim, osp24.odd_dim) == (11, 8)
    alg = build_osp(8, 2)
    assert (alg.even_dim, alg.odd_dim) == (28 + 3, 16)


def test_small_algebras_verify(sl42, osp24):
    for alg in (sl42, osp24, build_conf(2, 1)):
        assert verify_algebra(alg)["ok"]


def test_bracket_matches_supercommutator(sl43, rng):
    alg = sl43
    for _ in range(60):
        par_x, par_y = rng.randrange(2), rng.randrange(2)
        pools = (alg.even_indices, alg.odd_indices)
        x = [ZERO] * alg.dim
        y = [ZERO] * alg.dim
        for _ in range(6):
            x[rng.choice(pools[par_x])] = rand_scalar(rng)
            y[rng.choice(pools[par_y])] = rand_scalar(rng)
        x[pools[par_x][0]] = ONE
        y[pools[par_y][0]] = ONE
        res = alg.bracket_coeffs(tuple(x), tuple(y))
        sc = supercommutator(alg.matrix_of(tuple(x)), alg.matrix_of(tuple(y)))
        want = alg.expand_rep(sc)
        assert {i: c for i, c in enumerate(res) if c} == {
            i: c for i, c in want.items() if c
        }


def test_quotient_rep_projection(psl44):
    # the identity-like direction is gauge-fixed away: expanding a
    # projected supercommutator never produces odd residue on even input
    import sconf.twist as twist

    q = twist.canonical_rep_4d(4, 1, 1)
    el = q.to_element()
    assert el.parity() == ODD
    assert twist.is_square_zero(el)


def test_parity_bookkeeping(sl42):
    for i in sl42.even_indices:
        assert sl42.parity[i] == EVEN
    for i in sl42.odd_indices:
        assert sl42.parity[i] == ODD
    assert len(sl42.even_indices) + len(sl42.odd_indices) == sl42.dim
