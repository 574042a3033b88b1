"""Square-zero odd elements and their orbit invariants.

Supercharges come in three presentations matching the three families of
algebras: a 4d matrix pair (q_plus, q_minus), a 3d quadruple of vectors
against a Darboux basis of the symplectic four-dimensional module, and a
5d spinor pair.  Each closed-form nilpotence test asserts agreement with
the structure-constant bracket on the embedded element.
"""

from __future__ import annotations

from dataclasses import dataclass

from sconf.exactlinalg import (
    GaussianRational,
    I,
    Matrix,
    ONE,
    Subspace,
    ZERO,
    qi,
    red_part,
)
from sconf.superlie import (
    AlgebraElement,
    EVEN,
    ODD,
    bracket,
    build_f4_5d,
    build_osp,
    build_psl44,
    build_sl_super,
    spin7_project,
    spinor_pair,
)

# Darboux ordering of the symplectic coordinates: with the form
# [[0, Id], [-Id, 0]] on C^4, the pairs (e0, e2) and (e1, e3) satisfy
# omega(a, b) = 1, so the Darboux basis (Q1, Q2, Q3, Q4) is (e0, e2, e1, e3).
DARBOUX = (0, 2, 1, 3)


def algebra_4d(k):
    return build_psl44() if k == 4 else build_sl_super(4, k)


def is_square_zero(q):
    """[q, q] = 0, for an odd-homogeneous element."""
    if q.is_zero():
        return True
    if q.parity() != ODD:
        raise ValueError("square-zero test needs an odd-homogeneous element")
    return bracket(q, q).is_zero()


# ---------------------------------------------------------------------------
# 4d


@dataclass(frozen=True)
class Supercharge4d:
    """q_plus: k x 4 (lower-left supermatrix block), q_minus: 4 x k."""

    k: int
    q_plus: Matrix
    q_minus: Matrix

    def __post_init__(self):
        assert (self.q_plus.rows, self.q_plus.cols) == (self.k, 4)
        assert (self.q_minus.rows, self.q_minus.cols) == (4, self.k)

    @staticmethod
    def zero(k):
        return Supercharge4d(k, Matrix.zeros(k, 4), Matrix.zeros(4, k))

    def to_element(self):
        alg = algebra_4d(self.k)
        coeffs = [ZERO] * alg.dim
        for a in range(self.k):
            for i in range(4):
                coeffs[alg.label_index[f"Q+({a},{i})"]] = self.q_plus[a, i]
                coeffs[alg.label_index[f"Q-({i},{a})"]] = self.q_minus[i, a]
        return AlgebraElement(alg, coeffs)

    @staticmethod
    def from_element(q):
        alg = q.algebra
        k = alg.odd_dim // 8
        qp = [[ZERO] * 4 for _ in range(k)]
        qm = [[ZERO] * k for _ in range(4)]
        for idx in alg.even_indices:
            assert not q.coeffs[idx], "element has an even component"
        for a in range(k):
            for i in range(4):
                qp[a][i] = q.coeffs[alg.label_index[f"Q+({a},{i})"]]
                qm[i][a] = q.coeffs[alg.label_index[f"Q-({i},{a})"]]
        return Supercharge4d(k, Matrix(qp), Matrix(qm))

    def is_square_zero(self):
        return is_square_zero(self.to_element())

    def conjugate(self, a, b, lam=None):
        """Adjoint action of the even group element (a, b, lam):
        q_plus -> lam^-2 b q_plus a^-1, q_minus -> lam^2 a q_minus b^-1."""
        lam = ONE if lam is None else lam
        il2 = ONE / (lam * lam)
        return Supercharge4d(
            self.k,
            (b @ self.q_plus @ a.inverse()).scale(il2),
            (a @ self.q_minus @ b.inverse()).scale(lam * lam),
        )


def check_4d_characterization(q):
    """Vanishing of both compositions q_plus q_minus and q_minus q_plus;
    agreement with the bracket is asserted, not assumed."""
    if q.k == 4:
        raise ValueError("use classify_n4_component for k = 4")
    cond = (q.q_plus @ q.q_minus).is_zero() and (q.q_minus @ q.q_plus).is_zero()
    assert cond == q.is_square_zero(), "composition test disagrees with the bracket"
    return cond


@dataclass(frozen=True)
class PureTensor4d:
    """Rank <= 1 supercharge Q+ (x) w+ + Q- (x) w- in the k = 4 algebra;
    spinors are length-4 columns, w's are length-4 R-symmetry vectors."""

    spinor_plus: tuple
    w_plus: tuple
    spinor_minus: tuple
    w_minus: tuple

    def matrices(self):
        qp = Matrix([[self.w_plus[a] * self.spinor_plus[i] for i in range(4)] for a in range(4)])
        qm = Matrix([[self.spinor_minus[i] * self.w_minus[a] for a in range(4)] for i in range(4)])
        return qp, qm

    def supercharge(self):
        qp, qm = self.matrices()
        return Supercharge4d(4, qp, qm)


def classify_n4_component(t):
    """Cone membership for a pure-tensor odd element of the k = 4 algebra.

    Returns one of "both", "tr", "red", None; membership in at least one
    cone is asserted to coincide with the bracket vanishing.  The
    parametrization is not injective (a vanishing factor kills its whole
    summand), so the representative is canonicalized first: a summand
    that is zero as a tensor has both of its factors set to zero.
    """
    z4 = (ZERO,) * 4
    if not any(t.spinor_plus) or not any(t.w_plus):
        t = PureTensor4d(z4, z4, t.spinor_minus, t.w_minus)
    if not any(t.spinor_minus) or not any(t.w_minus):
        t = PureTensor4d(t.spinor_plus, t.w_plus, z4, z4)
    qp, qm = t.matrices()
    tr_q = sum((a * b for a, b in zip(t.spinor_plus, t.spinor_minus)), ZERO)
    tr_w = sum((a * b for a, b in zip(t.w_plus, t.w_minus)), ZERO)
    outer_q = Matrix([[t.spinor_plus[i] * t.spinor_minus[j] for j in range(4)] for i in range(4)])
    outer_w = Matrix([[t.w_plus[a] * t.w_minus[b] for b in range(4)] for a in range(4)])
    in_tr = (not tr_q) and (not tr_w)
    in_red = red_part(outer_q).is_zero() and red_part(outer_w).is_zero()
    nilp = Supercharge4d(4, qp, qm).is_square_zero()
    assert (in_tr or in_red) == nilp, "cone classifier disagrees with the bracket"
    if in_tr and in_red:
        return "both"
    if in_tr:
        return "tr"
    if in_red:
        return "red"
    return None


@dataclass(frozen=True)
class OrbitClass:
    family: str
    rank_data: tuple
    extra: GaussianRational | None = None


def orbit_invariant_4d(q):
    """Rank pair, plus the determinant parameter for full-rank chiral
    supercharges when k = 4."""
    if not q.is_square_zero():
        raise ValueError("orbit invariants are defined for square-zero elements only")
    rp, rm = q.q_plus.rank(), q.q_minus.rank()
    assert rp + rm <= min(4, q.k)
    extra = None
    family = "psl44" if q.k == 4 else "sl4k"
    if q.k == 4 and (rp, rm) == (4, 0):
        extra = q.q_plus.det()
    if q.k == 4 and (rp, rm) == (0, 4):
        extra = q.q_minus.det()
    return OrbitClass(family, (rp, rm), extra)


def canonical_rep_4d(k, r_plus, r_minus):
    """Block representative: identity blocks placed so both compositions
    vanish (leading block in q_plus, trailing block in q_minus)."""
    if r_plus + r_minus > min(4, k):
        raise ValueError("infeasible rank pair")
    qp = [[ZERO] * 4 for _ in range(k)]
    for i in range(r_plus):
        qp[i][i] = ONE
    qm = [[ZERO] * k for _ in range(4)]
    for i in range(r_minus):
        qm[3 - i][k - 1 - i] = ONE
    return Supercharge4d(k, Matrix(qp), Matrix(qm))


# ---------------------------------------------------------------------------
# 3d


def g_pair(u, v):
    """The symmetric pairing on the orthogonal module: plain dot product."""
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


@dataclass(frozen=True)
class Supercharge3d:
    """Components (w1, w2, w3, w4) against the Darboux basis of the
    symplectic module, each a length-k vector."""

    k: int
    w1: tuple
    w2: tuple
    w3: tuple
    w4: tuple

    def __post_init__(self):
        for w in (self.w1, self.w2, self.w3, self.w4):
            assert len(w) == self.k

    @staticmethod
    def zero(k):
        z = (ZERO,) * k
        return Supercharge3d(k, z, z, z, z)

    def components(self):
        return (self.w1, self.w2, self.w3, self.w4)

    def to_element(self):
        alg = build_osp(self.k, 4)
        coeffs = [ZERO] * alg.dim
        for di, w in zip(DARBOUX, self.components()):
            for a in range(self.k):
                coeffs[alg.label_index[f"S({a},{di})"]] = w[a]
        return AlgebraElement(alg, coeffs)

    @staticmethod
    def from_element(q):
        alg = q.algebra
        k = alg.odd_dim // 4
        ws = []
        for di in DARBOUX:
            ws.append(tuple(q.coeffs[alg.label_index[f"S({a},{di})"]] for a in range(k)))
        return Supercharge3d(k, *ws)

    def is_square_zero(self):
        return is_square_zero(self.to_element())

    def matrix(self):
        """The supercharge as a 4 x k matrix (Darboux coordinates of the
        image of each orthogonal basis vector)."""
        return Matrix([list(w) for w in self.components()])


def _wedge_zero(u, v):
    n = len(u)
    for a in range(n):
        for b in range(a + 1, n):
            if u[a] * v[b] - u[b] * v[a]:
                return False
    return True


def _wedge_sum_zero(w1, w2, w3, w4):
    n = len(w1)
    for a in range(n):
        for b in range(a + 1, n):
            if (w1[a] * w2[b] - w1[b] * w2[a]) + (w3[a] * w4[b] - w3[b] * w4[a]):
                return False
    return True


def check_3d_conditions(q):
    """All pairings g(w_i, w_j) vanish and w1 ^ w2 + w3 ^ w4 = 0.

    Note the wedge condition couples the two Darboux pairs: only the sum
    of the two wedges is forced to vanish, not each one separately
    (example: (u, v, v, u) for independent orthogonal null u, v).  The
    product-form locus w2 || w1, w4 || w3 is a proper subset.
    """
    ws = q.components()
    cond = all(
        not g_pair(ws[i], ws[j]) for i in range(4) for j in range(i, 4)
    ) and _wedge_sum_zero(ws[0], ws[1], ws[2], ws[3])
    assert cond == q.is_square_zero(), "3d conditions disagree with the bracket"
    return cond


def is_product_form_3d(q):
    """Whether w2 || w1 and w4 || w3 (the decomposable locus)."""
    ws = q.components()
    return _wedge_zero(ws[0], ws[1]) and _wedge_zero(ws[2], ws[3])


@dataclass(frozen=True)
class Decomposition3d:
    w: tuple
    w_prime: tuple
    c: GaussianRational | None
    c_prime: GaussianRational | None
    w_degenerate: bool
    w_prime_degenerate: bool


def decompose_3d(q):
    """Write a square-zero element as (w, c w, w', c' w'); degenerate
    flags replace c (resp. c') when w (resp. w') vanishes.  Returns None
    for square-zero elements outside the product-form locus."""
    assert check_3d_conditions(q)
    if not is_product_form_3d(q):
        return None

    def ratio(base, mult):
        if all(not x for x in base):
            assert all(not x for x in mult), "proportionality failed on zero base"
            return None, True
        j = next(i for i, x in enumerate(base) if x)
        c = mult[j] / base[j]
        return c, False

    c, deg = ratio(q.w1, q.w2)
    cp, degp = ratio(q.w3, q.w4)
    return Decomposition3d(q.w1, q.w3, c, cp, deg, degp)


def _darboux_omega(x, y):
    """omega in Darboux coordinates: (1,2) and (3,4) pair to 1."""
    return x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]


def orbit_rank_3d(q):
    if not q.is_square_zero():
        raise ValueError("rank invariant is defined for square-zero elements only")
    m = q.matrix()
    r = m.rank()
    # image isotropy: omega vanishes on the column space
    cols = [m.col(j) for j in range(q.k)]
    for x in cols:
        for y in cols:
            assert not _darboux_omega(x, y), "image is not isotropic"
    return r


# -- exact null-vector reduction in the orthogonal group -------------------


def _null_transvection(k, v, a, pivot):
    """Isometry fixing the null vector n = e_{pivot} + i e_{pivot+1}:
    x -> x + a g(x,n) v - a g(x,v) n - (a^2 g(v,v)/2) g(x,n) n, v _|_ n."""
    n = [ZERO] * k
    n[pivot] = ONE
    n[pivot + 1] = I
    assert not g_pair(n, v)
    gvv = g_pair(v, v)
    half = ONE / qi(2)
    cols = []
    for j in range(k):
        e = [ZERO] * k
        e[j] = ONE
        gxn = n[j]
        gxv = v[j]
        col = list(e)
        for t in range(k):
            col[t] = col[t] + a * gxn * v[t] - a * gxv * n[t] - a * a * gvv * half * gxn * n[t]
        cols.append(col)
    return Matrix(cols).transpose()


def _boost(k, mu, pivot=0):
    """Isometry scaling n = e_pivot + i e_{pivot+1} by mu and the opposite
    null direction by 1/mu."""
    c = (mu + ONE / mu) / qi(2)
    s = (mu - ONE / mu) * I / qi(2)
    rows = [[ONE if i == j else ZERO for j in range(k)] for i in range(k)]
    rows[pivot][pivot] = c
    rows[pivot][pivot + 1] = -s
    rows[pivot + 1][pivot] = s
    rows[pivot + 1][pivot + 1] = c
    return Matrix(rows)


def _conj_swap(k):
    """n <-> nbar in the leading plane, with a sign in coordinate 2 to
    keep the determinant 1 (needs k >= 3)."""
    assert k >= 3
    d = [ONE] * k
    d[1] = -ONE
    d[2] = -ONE
    return Matrix.diag(d)


def move_null_to_standard(w):
    """Return an exact special-orthogonal matrix A with A w = (1, i, 0, ...).

    Requires w nonzero and null.  The construction composes null
    transvections, a conjugation swap, and a hyperbolic boost, all with
    entries in the scalar field.
    """
    k = len(w)
    assert k >= 3
    w = tuple(w)
    assert any(w), "zero vector"
    assert not g_pair(w, w), "vector is not null"
    n = [ZERO] * k
    n[0] = ONE
    n[1] = I
    nbar = [ZERO] * k
    nbar[0] = ONE
    nbar[1] = -I
    total = Matrix.identity(k)
    cur = list(w)

    def apply(m):
        nonlocal total, cur
        total = m @ total
        cur = list(m.apply(tuple(cur)))

    def alpha():
        return g_pair(cur, nbar) / qi(2)

    def beta():
        return g_pair(cur, n) / qi(2)

    def tail():
        return [ZERO, ZERO] + cur[2:]

    # ensure the nbar-coefficient (beta) is nonzero
    if not beta():
        if alpha():
            # create beta via a transvection fixing nbar; equivalently,
            # conjugate-swap, fix beta' = alpha, then swap roles below
            apply(_conj_swap(k))
        if not beta():
            # pure tail vector: transvect to generate a leading component,
            # then swap
            y = tail()
            j = next(i for i, x in enumerate(y) if x)
            v = [ZERO] * k
            v[j] = ONE
            apply(_null_transvection(k, tuple(v), ONE, 0))
            if not beta():
                apply(_conj_swap(k))
    assert beta()
    # transvect away the tail; nullness then forces alpha to cancel too
    y = tail()
    if any(y):
        b = beta()
        v = tuple(-x / (qi(2) * b) for x in y)
        apply(_null_transvection(k, v, ONE, 0))
    assert not any(tail()) and not alpha(), "reduction failed"
    # cur = beta * nbar: swap to the n-direction and normalize
    apply(_conj_swap(k))
    apply(_boost(k, ONE / alpha()))
    assert cur == list(n), "reduction failed"
    assert (total.transpose() @ total) == Matrix.identity(k)
    assert total.det() == ONE
    return total


def hermitian_ratio(w, w_prime):
    """<w, w'> / <w, w> for the standard Hermitian pairing.  Preserved by
    real orthogonal matrices, which fix both the bilinear and the
    Hermitian form."""
    num = ZERO
    den = ZERO
    for a, b in zip(w, w_prime):
        num = num + a.conjugate() * b
    for a in w:
        den = den + a.conjugate() * a
    return num / den


def orbit_param_3d(w, w_prime):
    """The residual parameter for a pair of orthogonal nonzero null
    vectors: move w to (1, i, 0, ...) by an explicit exact
    special-orthogonal element and read off the w-component x of the
    image of w_prime, so that the pair lands on ((1,i,0,...),
    (x, ix, 1, i, 0, ...)) up to normalizing the tail.

    The reduction leaves a residual stabilizer freedom: null
    transvections fixing (1, i, 0, ...) shift x, so x labels orbits of
    the real rotation subgroup, not of the full complex orthogonal
    group.  We fix the freedom canonically by calibrating x to the
    rotation-invariant Hermitian ratio <w, w'> / <w, w>, which is what
    the reduction produces on already-canonical pairs.
    """
    k = len(w)
    if k < 4:
        raise ValueError("parameter needs at least four orthogonal directions")
    if not any(w) or not any(w_prime):
        raise ValueError("vectors must be nonzero")
    if g_pair(w, w) or g_pair(w_prime, w_prime) or g_pair(w, w_prime):
        raise ValueError("vectors must be null and orthogonal")
    x = hermitian_ratio(w, w_prime)
    a = move_null_to_standard(w)
    img = list(a.apply(tuple(w_prime)))
    assert img[1] == I * img[0], "orthogonality should force the second coordinate"
    tail = [ZERO, ZERO] + img[2:]
    assert any(tail), "pair is degenerate (second vector proportional to the first)"
    delta = x - img[0]
    if delta:
        # stabilizer transvection fixing (1, i, 0, ...): shifts the
        # w-component of img by -a g(tail, v)
        j = next(i for i in range(2, k) if tail[i])
        v = [ZERO] * k
        v[j] = ONE / tail[j]
        a = _null_transvection(k, tuple(v), -delta, 0) @ a
        img = list(a.apply(tuple(w_prime)))
    assert a.apply(tuple(w)) == tuple([ONE, I] + [ZERO] * (k - 2))
    assert img[0] == x and img[1] == I * x
    return x


# ---------------------------------------------------------------------------
# 5d


@dataclass(frozen=True)
class Supercharge5d:
    q1: tuple
    q2: tuple

    def __post_init__(self):
        assert len(self.q1) == 8 and len(self.q2) == 8

    def to_element(self):
        alg = build_f4_5d()
        coeffs = [ZERO] * alg.dim
        for s in range(8):
            coeffs[alg.label_index[f"S({s},0)"]] = self.q1[s]
            coeffs[alg.label_index[f"S({s},1)"]] = self.q2[s]
        return AlgebraElement(alg, coeffs)

    def is_square_zero(self):
        return is_square_zero(self.to_element())


def check_5d_conditions(q):
    """F(q1 x q2) = 0 and all three spinor pairings vanish."""
    cond = (
        not spin7_project(q.q1, q.q2)
        and not spinor_pair(q.q1, q.q1)
        and not spinor_pair(q.q2, q.q2)
        and not spinor_pair(q.q1, q.q2)
    )
    assert cond == q.is_square_zero(), "5d conditions disagree with the bracket"
    return cond


# ---------------------------------------------------------------------------
# 6d (generic: bracket-based nilpotence, rank via the matrix view)


def odd_matrix_view_osp(q):
    """For an element of osp(m|2n), the odd part as a 2n x m coefficient
    matrix (lower-left supermatrix block)."""
    alg = q.algebra
    m = alg.rep[0].m
    two_n = alg.rep[0].n
    rows = [[ZERO] * m for _ in range(two_n)]
    for a in range(m):
        for b in range(two_n):
            rows[b][a] = q.coeffs[alg.label_index[f"S({a},{b})"]]
    return Matrix(rows)


def orbit_rank_6d(q):
    if not is_square_zero(q):
        raise ValueError("rank invariant is defined for square-zero elements only")
    return odd_matrix_view_osp(q).rank()
