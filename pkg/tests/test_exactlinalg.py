import itertools

from hypothesis import given, settings, strategies as st

from sconf.exactlinalg import (
    I,
    Matrix,
    ONE,
    Subspace,
    ZERO,
    kernel_basis,
    qi,
    realify,
)

SCALARS = (ZERO, ONE, -ONE, I, -I, qi(2), qi("1/2"), qi(1, 1))

scalar_st = st.sampled_from(SCALARS)


def matrix_st(rows, cols):
    return st.lists(
        st.lists(scalar_st, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(Matrix)


def minor_rank(m):
    """Rank as the size of the largest nonsingular square submatrix."""
    n = min(m.rows, m.cols)
    for size in range(n, 0, -1):
        for ri in itertools.combinations(range(m.rows), size):
            for ci in itertools.combinations(range(m.cols), size):
                sub = Matrix([[m[i, j] for j in ci] for i in ri])
                if sub.det():
                    return size
    return 0


@settings(max_examples=40, deadline=None)
@given(matrix_st(3, 4))
def test_rank_matches_minor_oracle(m):
    assert m.rank() == minor_rank(m)


@settings(max_examples=40, deadline=None)
@given(matrix_st(4, 3))
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert m.rank() + ker.dim == m.cols
    for v in ker.vectors():
        assert all(not c for c in m.apply(v))


def test_field_arithmetic():
    a = qi("2/3", "-1/5")
    b = qi(0, 1)
    assert a * b / b == a
    assert (a + b) - b == a
    assert b * b == -ONE
    assert a.conjugate().conjugate() == a


def test_inverse_roundtrip(rng):
    from sconf.sampling import rand_sl

    m = rand_sl(rng, 4)
    assert m @ m.inverse() == Matrix.identity(4)


def test_subspace_canonical_form():
    s1 = Subspace(3, [(ONE, ZERO, ONE), (ZERO, ONE, ONE)])
    s2 = Subspace(3, [(ONE, ONE, qi(2)), (ONE, -ONE, ZERO)])
    assert s1 == s2
    assert s1.contains((qi(2), qi(3), qi(5)))
    assert not s1.contains((ONE, ZERO, ZERO))


def test_subspace_intersection():
    a = Subspace(3, [(ONE, ZERO, ZERO), (ZERO, ONE, ZERO)])
    b = Subspace(3, [(ZERO, ONE, ZERO), (ZERO, ZERO, ONE)])
    cap = a.intersect(b)
    assert cap.dim == 1
    assert cap.contains((ZERO, ONE, ZERO))


def test_realify_doubles_dimension():
    s = Subspace(2, [(ONE, I)])
    r = realify(s)
    assert r.ambient_dim == 4
    assert r.dim == 2
