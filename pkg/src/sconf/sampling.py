"""Seeded exact-arithmetic samplers.

Everything here takes a random.Random instance so that callers (tests,
the command-line verifier) stay reproducible.  Group elements are built
from elementary factors with entries in the scalar field: shears for the
special linear groups, Pythagorean rotations / hyperbolic boosts / null
transvections for the orthogonal groups, transvections for the
symplectic group, and rational one-parameter factors for the spin group.
"""

from __future__ import annotations

import random

from sconf.exactlinalg import GaussianRational, I, Matrix, ONE, ZERO, qi
from sconf.superlie import spin7_generators
from sconf import twist

SCALAR_POOL = (
    ZERO,
    ONE,
    -ONE,
    I,
    -I,
    qi(2),
    qi("1/2"),
    qi(0, "1/2"),
    qi(1, 1),
)

NONZERO_POOL = tuple(c for c in SCALAR_POOL if c)


def rand_scalar(rng):
    return rng.choice(SCALAR_POOL)


def rand_nonzero(rng):
    return rng.choice(NONZERO_POOL)


def rand_vector(rng, n):
    return tuple(rand_scalar(rng) for _ in range(n))


def rand_matrix(rng, rows, cols):
    return Matrix([[rand_scalar(rng) for _ in range(cols)] for _ in range(rows)])


def _shear(n, i, j, c):
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    rows[i][j] = c
    return Matrix(rows)


def rand_sl(rng, n, steps=6):
    """Product of elementary shears; determinant 1 by construction."""
    assert n >= 2
    m = Matrix.identity(n)
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        m = m @ _shear(n, i, j, rand_nonzero(rng))
    assert m.det() == ONE
    return m


def pythagorean(rng):
    """Exact (c, s) with c^2 + s^2 = 1 from a rational tangent half-angle."""
    t = rng.choice((qi(1), qi(2), qi(3), qi("1/2"), qi("1/3"), qi("2/3")))
    d = ONE + t * t
    return (ONE - t * t) / d, (t + t) / d


def _plane_rotation(n, i, j, c, s):
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    rows[i][i] = c
    rows[i][j] = -s
    rows[j][i] = s
    rows[j][j] = c
    return rows


def rand_so(rng, n, steps=6):
    """Special orthogonal over the scalar field: Pythagorean plane
    rotations mixed with hyperbolic boosts and null transvections."""
    assert n >= 2
    m = Matrix.identity(n)
    for _ in range(steps):
        kind = rng.randrange(3) if n >= 3 else 0
        if kind == 0:
            i = rng.randrange(n)
            j = rng.randrange(n - 1)
            if j >= i:
                j += 1
            c, s = pythagorean(rng)
            m = m @ Matrix(_plane_rotation(n, i, j, c, s))
        elif kind == 1:
            pivot = rng.randrange(n - 1)
            mu = rng.choice((qi(2), qi("1/2"), qi(3), qi(0, 1)))
            m = m @ twist._boost(n, mu, pivot)
        else:
            v = [ZERO] * n
            for a in range(2, n):
                v[a] = rand_scalar(rng)
            if not any(v):
                v[n - 1] = ONE
            m = m @ twist._null_transvection(n, tuple(v), rand_nonzero(rng), 0)
    assert (m.transpose() @ m) == Matrix.identity(n)
    assert m.det() == ONE
    return m


def rand_rotation(rng, n, steps=6):
    """Product of real Pythagorean plane rotations only.  These preserve
    the Hermitian pairing as well as the bilinear one, so the 3d orbit
    parameter is exactly invariant under them (unlike under the full
    complex orthogonal group, whose null transvections shift it)."""
    m = Matrix.identity(n)
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        c, s = pythagorean(rng)
        m = m @ Matrix(_plane_rotation(n, i, j, c, s))
    assert (m.transpose() @ m) == Matrix.identity(n)
    return m


def rand_sp(rng, two_n, steps=6):
    """Symplectic transvections x -> x + c omega(x, v) v for the form
    [[0, Id], [-Id, 0]]."""
    n = two_n // 2
    assert 2 * n == two_n

    def omega_apply(v):
        # row vector u -> omega(e_a, v) for each a; omega(x, y) = x^T J y
        return [
            v[a + n] if a < n else -v[a - n]
            for a in range(two_n)
        ]

    m = Matrix.identity(two_n)
    for _ in range(steps):
        v = [rand_scalar(rng) for _ in range(two_n)]
        if not any(v):
            v[0] = ONE
        c = rand_nonzero(rng)
        w = omega_apply(v)
        rows = [
            [
                (ONE if a == b else ZERO) + c * w[a] * v[b]
                for b in range(two_n)
            ]
            for a in range(two_n)
        ]
        m = m @ Matrix(rows).transpose()
    jm = Matrix([[ONE if b == a + n else (-ONE if a == b + n else ZERO) for b in range(two_n)] for a in range(two_n)])
    assert (m.transpose() @ jm @ m) == jm
    return m


def rand_spin7(rng, steps=4):
    """Product of exact one-parameter spin factors c + s (2 sigma_ab),
    valid because (2 sigma_ab)^2 = -1."""
    sigmas = spin7_generators()
    keys = sorted(sigmas)
    m = Matrix.identity(8)
    for _ in range(steps):
        a, b = rng.choice(keys)
        c, s = pythagorean(rng)
        factor = Matrix.identity(8).scale(c) + sigmas[(a, b)].scale(s + s)
        m = m @ factor
    return m


# ---------------------------------------------------------------------------
# nilpotent supercharge samples: canonical representatives moved by a
# random even group element


def rand_nilpotent_4d(rng, k):
    ranks = [(rp, rm) for rp in range(min(4, k) + 1) for rm in range(min(4, k) + 1 - rp)]
    rp, rm = rng.choice(ranks)
    q = twist.canonical_rep_4d(k, rp, rm)
    a = rand_sl(rng, 4)
    b = rand_sl(rng, k) if k >= 2 else Matrix.identity(1)
    lam = rng.choice((ONE, -ONE, qi(2), qi("1/2"), I))
    return q.conjugate(a, b, lam)


def conjugate_3d(q, so_k, sp4):
    """Adjoint action of (R, P) in SO(k) x Sp(4) on a 3d supercharge:
    the 4 x k component matrix maps to P_D M R^T, where P_D is P written
    in Darboux coordinates."""
    perm = twist.DARBOUX
    pd = Matrix([[sp4[perm[i], perm[j]] for j in range(4)] for i in range(4)])
    m = pd @ q.matrix() @ so_k.transpose()
    return twist.Supercharge3d(q.k, *(m.row(i) for i in range(4)))


def rand_null_vector(rng, k, allow_zero=False):
    """A null vector for the dot-product pairing: a random isometry
    applied to (1, i, 0, ...)."""
    assert k >= 2
    base = [ZERO] * k
    base[0] = ONE
    base[1] = I
    v = rand_so(rng, k).apply(tuple(base))
    c = rand_scalar(rng) if allow_zero else rand_nonzero(rng)
    return tuple(c * x for x in v)


def rand_nilpotent_3d(rng, k):
    """Square-zero sample: start from a canonical rank <= 2 shape
    (w, c w, w', c' w') with w, w' standard nulls, then move by a random
    SO(k) x Sp(4) pair."""
    assert k >= 2
    w = [ZERO] * k
    w[0] = ONE
    w[1] = I
    wp = [ZERO] * k
    if k >= 4 and rng.randrange(2):
        wp[2] = ONE
        wp[3] = I
    c = rand_scalar(rng)
    cp = rand_scalar(rng)
    q = twist.Supercharge3d(
        k,
        tuple(w),
        tuple(c * x for x in w),
        tuple(wp),
        tuple(cp * x for x in wp),
    )
    return conjugate_3d(q, rand_so(rng, k), rand_sp(rng, 4))


def conjugate_5d(q, spin_r, sl2):
    """(q1, q2) -> components of (R q_w) (x) (g e_w)."""
    imgs = []
    for u in range(2):
        vec = tuple(
            sl2[u, 0] * a + sl2[u, 1] * b for a, b in zip(q.q1, q.q2)
        )
        imgs.append(spin_r.apply(vec))
    return twist.Supercharge5d(imgs[0], imgs[1])


def null_spinor_5d():
    """A fixed nonzero spinor with B(q, q) = 0, found once by inspecting
    the pairing matrix."""
    from sconf.superlie import spinor_pairing

    c = spinor_pairing()
    for s in range(8):
        e = [ZERO] * 8
        e[s] = ONE
        if not c[s, s]:
            return tuple(e)
    # no isotropic basis vector: combine the first two
    e = [ZERO] * 8
    e[0] = c[1, 1]
    disc = c[0, 1] * c[0, 1] - c[0, 0] * c[1, 1]
    # fall back to e0 + t e1 with c00 + 2 t c01 + t^2 c11 = 0 if disc is square
    raise AssertionError("no isotropic coordinate spinor; need a different seed vector")


def rand_nilpotent_5d(rng):
    q1 = null_spinor_5d()
    q = twist.Supercharge5d(q1, (ZERO,) * 8)
    return conjugate_5d(q, rand_spin7(rng), rand_sl(rng, 2))
