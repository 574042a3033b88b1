"""Real forms via (anti)linear involutions, and the geometry of the
chiral kernel fibration.

An involution theta(X) = sign * M * op(X) * M^-1 (op = optional
entrywise conjugation and/or transpose) cuts out a real subalgebra as
its fixed locus.  All fixed-locus dimensions are reported over the
reals, via explicit realification; complex dimensions never mix in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from sconf.exactlinalg import (
    GaussianRational,
    I,
    Matrix,
    ONE,
    Subspace,
    ZERO,
    format_scalar,
    kernel_basis,
    parse_scalar,
    qi,
    realify,
    realify_vector,
)
from sconf import centralizer as centralizer_mod
from sconf import twist as twist_mod


@dataclass(frozen=True)
class Involution:
    conjugate: bool
    transpose: bool
    conjugator: Matrix
    sign: int
    name: str = ""

    def __post_init__(self):
        assert self.sign in (1, -1)
        assert self.conjugator.rows == self.conjugator.cols
        assert self.conjugator.det() != ZERO, "conjugator must be invertible"

    def apply(self, x):
        if self.conjugate:
            x = x.conjugate()
        if self.transpose:
            x = x.transpose()
        y = self.conjugator @ x @ self.conjugator.inverse()
        return y if self.sign == 1 else y.scale(-ONE)

    def is_homomorphism(self):
        """theta[X,Y] = [theta X, theta Y]; otherwise the bracket flips
        sign.  Decided by the flags: a transpose flips it, a -1 sign
        flips it back."""
        return (self.sign == -1) == self.transpose

    def to_json_dict(self):
        return {
            "schema_version": "1",
            "name": self.name,
            "conjugate": self.conjugate,
            "transpose": self.transpose,
            "sign": self.sign,
            "conjugator": [
                [format_scalar(self.conjugator[i, j]) for j in range(self.conjugator.cols)]
                for i in range(self.conjugator.rows)
            ],
        }

    @staticmethod
    def from_json_dict(d):
        conj = Matrix([[parse_scalar(e) for e in row] for row in d["conjugator"]])
        return Involution(
            bool(d["conjugate"]),
            bool(d["transpose"]),
            conj,
            int(d["sign"]),
            d.get("name", ""),
        )


_J_ROWS = [
    [ZERO, ONE, ZERO, ZERO],
    [-ONE, ZERO, ZERO, ZERO],
    [ZERO, ZERO, ZERO, ONE],
    [ZERO, ZERO, -ONE, ZERO],
]

K_FORM = Matrix.diag([ONE, ONE, -ONE, -ONE])


def preset_involution(name):
    """The three standard real structures on sl(4, C):
    euclidean X -> -J conj(X) J, lorentzian X -> -K X^dagger K,
    split X -> conj(X)."""
    if name == "euclidean":
        # J^-1 = -J, so sign +1 gives -J conj(X) J
        return Involution(True, False, Matrix(_J_ROWS), 1, "euclidean")
    if name == "lorentzian":
        return Involution(True, True, K_FORM, -1, "lorentzian")
    if name == "split":
        return Involution(True, False, Matrix.identity(4), 1, "split")
    raise ValueError(f"unknown involution preset {name!r}")


PRESET_NAMES = ("euclidean", "lorentzian", "split")


def check_involution(theta, n):
    """theta squared is the identity and theta respects the bracket with
    the sign its flags dictate, on all unit-matrix basis pairs."""
    units = []
    for i in range(n):
        for j in range(n):
            rows = [[ZERO] * n for _ in range(n)]
            rows[i][j] = ONE
            units.append(Matrix(rows))
    for e in units:
        if theta.apply(theta.apply(e)) != e:
            return False
    want_homo = theta.is_homomorphism()
    for x in units:
        for y in units:
            lhs = theta.apply(x @ y - y @ x)
            tx, ty = theta.apply(x), theta.apply(y)
            rhs = tx @ ty - ty @ tx
            if want_homo:
                if lhs != rhs:
                    return False
            else:
                if lhs != rhs.scale(-ONE):
                    return False
    return True


def _flatten(m):
    return tuple(m[i, j] for i in range(m.rows) for j in range(m.cols))


def _unflatten(v, n):
    return Matrix([[v[n * i + j] for j in range(n)] for i in range(n)])


def realified_operator(theta, n):
    """theta on n x n matrices as an exact rational operator on the
    realified coordinate space R^(2 n^2)."""
    dim = n * n
    cols = []
    for j in range(dim):
        for mult in (ONE, I):
            e = [ZERO] * dim
            e[j] = mult
            img = theta.apply(_unflatten(tuple(e), n))
            cols.append(realify_vector(_flatten(img)))
    return Matrix(cols).transpose()


def is_stable(theta, s):
    """Does theta map the subspace into itself?"""
    dim = s.ambient_dim
    n = 1
    while n * n < dim:
        n += 1
    assert n * n == dim
    for v in s.vectors():
        img = _flatten(theta.apply(_unflatten(v, n)))
        if not s.contains(img):
            return False
    return True


def fixed_subalgebra(theta, s, require_stable=False):
    """Real points of a complex subspace of n x n matrices under theta:
    the fixed locus of the realified operator intersected with the
    realification of the subspace.

    When the subspace is theta-stable this is the +1 eigenspace of theta
    restricted to it; the intersection form also makes sense for spaces
    that theta moves, and is what the case-study reports use.
    """
    dim = s.ambient_dim
    n = 1
    while n * n < dim:
        n += 1
    if n * n != dim:
        raise ValueError("ambient space is not a square matrix space")
    if require_stable and not is_stable(theta, s):
        raise ValueError("subspace is not stable under the involution")
    op = realified_operator(theta, n)
    fixed = kernel_basis(op - Matrix.identity(2 * dim))
    fixed = Subspace(2 * dim, fixed.vectors())
    return fixed.intersect(realify(s))


def real_form_dimension_check(theta, n=4):
    """A real structure on sl(n, C): its fixed locus has real dimension
    equal to the complex dimension of sl(n, C)."""
    vecs = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            e = [ZERO] * (n * n)
            e[n * i + j] = ONE
            vecs.append(tuple(e))
    for i in range(n - 1):
        e = [ZERO] * (n * n)
        e[n * i + i] = ONE
        e[n * (i + 1) + (i + 1)] = -ONE
        vecs.append(tuple(e))
    sl = Subspace(n * n, vecs)
    fixed = fixed_subalgebra(theta, sl)
    return fixed.dim == n * n - 1


# ---------------------------------------------------------------------------
# the Schur twist under the three real structures


SIGNATURE_TO_PRESET = {(4, 0): "euclidean", (3, 1): "lorentzian", (2, 2): "split"}


def schur_realform_report(signature):
    """Real dimensions of the fixed loci of the signature's involution on
    the closed and exact conformal blocks of the Schur twist.

    Euclidean (6, 0) and Lorentzian (7, 3) act on the traceless slices;
    the split case fixes the real-coefficient matrices of the full block
    patterns (11, 8) and of the translation blocks (3 closed, 2 exact).
    """
    if signature not in SIGNATURE_TO_PRESET:
        raise ValueError(f"unsupported signature {signature!r}")
    name = SIGNATURE_TO_PRESET[signature]
    theta = preset_involution(name)
    pb = centralizer_mod.projection_blocks()
    alg = twist_mod.algebra_4d(2)
    z_blocks = centralizer_mod._a_block_subspace(alg, pb["report"].basis_z)
    b_blocks = centralizer_mod._a_block_subspace(alg, pb["report"].basis_b)
    out = {"signature": list(signature), "involution": name}
    if name == "split":
        out["dim_z_real"] = fixed_subalgebra(theta, z_blocks).dim
        out["dim_b_real"] = fixed_subalgebra(theta, b_blocks).dim
        # translation blocks live in the upper-right 2x2, ambient dim 4;
        # entrywise conjugation there is just the 2x2 split involution
        closed = pb["z_conf"].project([2, 3, 6, 7])
        exact = pb["b_conf"].project([2, 3, 6, 7])
        out["translations_closed_real"] = _real_coefficient_dim(closed)
        out["translations_exact_real"] = _real_coefficient_dim(exact)
    else:
        # z over its full conformal block image, b over the traceless
        # slice: the pair of readings consistent with both case studies
        out["dim_z_real"] = fixed_subalgebra(theta, z_blocks).dim
        out["dim_b_real"] = fixed_subalgebra(theta, pb["b_conf"]).dim
    return out


def _real_coefficient_dim(s):
    """Real dimension of the fixed locus of entrywise conjugation on a
    complex subspace, i.e. of its real points."""
    dim = s.ambient_dim
    cols = []
    for j in range(dim):
        for mult in (ONE, I):
            e = [ZERO] * dim
            e[j] = mult
            cols.append(realify_vector(tuple(z.conjugate() for z in e)))
    op = Matrix(cols).transpose()
    fixed = Subspace(2 * dim, kernel_basis(op - Matrix.identity(2 * dim)).vectors())
    return fixed.intersect(realify(s)).dim


# ---------------------------------------------------------------------------
# kernel fibration over the Grassmannian and Hermitian orbit labels


@dataclass(frozen=True)
class HermitianForm:
    gram: Matrix

    def __post_init__(self):
        assert self.gram == self.gram.conj_transpose(), "form must be Hermitian"

    def pair(self, u, v):
        acc = ZERO
        for a in range(self.gram.rows):
            for b in range(self.gram.cols):
                acc = acc + u[a].conjugate() * self.gram[a, b] * v[b]
        return acc


SPLIT_FORM = HermitianForm(K_FORM)


@dataclass(frozen=True)
class GrassmannPoint:
    plane: Subspace

    def __post_init__(self):
        assert self.plane.ambient_dim == 4


def kernel_fiber(q):
    """ker(Q+) in C^4 for a chiral supercharge; equivariant in the sense
    that conjugating the supercharge by (a, b, lam) moves the kernel by
    a."""
    if not q.q_minus.is_zero():
        raise ValueError("kernel fibration is defined for chiral supercharges")
    ker = kernel_basis(q.q_plus)
    return GrassmannPoint(Subspace(4, ker.vectors()))


def _restricted_gram(p, h):
    basis = p.plane.vectors()
    return [[h.pair(u, v) for v in basis] for u in basis]


def hermitian_signature(gram):
    """Exact signature (pos, neg, null) of a Hermitian matrix given as
    nested lists, by symmetric pivoting: pivot on a nonzero diagonal
    entry, or manufacture one from a nonzero off-diagonal pair."""
    n = len(gram)
    if n == 0:
        return (0, 0, 0)
    g = [row[:] for row in gram]
    pivot = None
    for i in range(n):
        assert not g[i][i].im, "diagonal of a Hermitian matrix is real"
        if g[i][i]:
            pivot = i
            break
    if pivot is None:
        off = None
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j]:
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            return (0, 0, n)
        i, j = off
        # basis change u_i -> u_i + c u_j puts 2 Re(c* g_ij) on the diagonal
        c = ONE if g[i][j].re else I
        for a in range(n):
            g[i][a] = g[i][a] + c.conjugate() * g[j][a]
        for a in range(n):
            g[a][i] = g[a][i] + c * g[a][j]
        pivot = i
    d = g[pivot][pivot]
    rest = []
    for a in range(n):
        if a == pivot:
            continue
        row = []
        for b in range(n):
            if b == pivot:
                continue
            row.append(g[a][b] - g[a][pivot] * g[pivot][b] / d)
        rest.append(row)
    pos, neg, null = hermitian_signature(rest)
    if d.re > 0:
        return (pos + 1, neg, null)
    return (pos, neg + 1, null)


ORBIT_LABELS = ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2))


def hermitian_orbit_label(p, h=SPLIT_FORM):
    """Signature triple of the form restricted to a 2-plane; the orbit
    invariant of the plane under the isometry group of the form."""
    if p.plane.dim != 2:
        raise ValueError("orbit labels are defined for 2-planes")
    sig = hermitian_signature(_restricted_gram(p, h))
    assert sum(sig) == 2
    assert sig in ORBIT_LABELS
    return sig


def orbit_label_witnesses():
    """One explicit plane per label, for the split form."""
    e = lambda i: tuple(ONE if a == i else ZERO for a in range(4))

    def plus(i, j):
        return tuple(x + y for x, y in zip(e(i), e(j)))

    planes = {
        (2, 0, 0): (e(0), e(1)),
        (1, 1, 0): (e(0), e(2)),
        (0, 2, 0): (e(2), e(3)),
        (1, 0, 1): (e(0), plus(1, 3)),
        (0, 1, 1): (e(2), plus(1, 3)),
        (0, 0, 2): (plus(0, 2), plus(1, 3)),
    }
    return {
        label: GrassmannPoint(Subspace(4, vecs)) for label, vecs in planes.items()
    }


def involution_to_json(theta):
    return json.dumps(theta.to_json_dict(), indent=2, sort_keys=True)


def involution_from_json(text):
    return Involution.from_json_dict(json.loads(text))
