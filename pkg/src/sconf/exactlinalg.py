"""Exact linear algebra over Q and Q(i).

Scalars are Gaussian rationals a + b*i with arbitrary-precision rational
parts, so no operation ever rounds.  Matrices are dense and immutable;
row reduction uses a deterministic pivot rule (first nonzero in column
order) so every output is reproducible byte for byte.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as _Q

_Q0 = _Q(0)
_Q1 = _Q(1)


def _fmt_rat(q):
    return str(q)


class GaussianRational:
    """An element of Q(i), stored as exact rational real/imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _Q(re) if not isinstance(re, type(_Q0)) else re)
        object.__setattr__(self, "im", _Q(im) if not isinstance(im, type(_Q0)) else im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure --------------------------------------------------------

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, type(_Q0))):
            return self.re == other and self.im == 0
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self!s})"

    def __str__(self):
        if self.im == 0:
            return _fmt_rat(self.re)
        if self.re == 0:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{_fmt_rat(self.re)}{sign}{_imag_str(abs(self.im))}"


def _imag_str(im):
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{_fmt_rat(im)}*i"


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, type(_Q0))):
        return GaussianRational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def qi(re=0, im=0):
    """Shorthand constructor; accepts ints, Fractions, or 'a/b' strings."""
    if isinstance(re, str):
        return parse_scalar(re)
    return GaussianRational(_Q(re), _Q(im))


def parse_scalar(text):
    """Parse a scalar literal: 'a/b', 'c/d*i', 'a/b+c/d*i', 'i', '-i', ...

    Zero parts may be omitted.  Whitespace is ignored.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    # split into at most two signed terms
    terms, start = [], 0
    for pos in range(1, len(s)):
        if s[pos] in "+-" and s[pos - 1] not in "+-*/":
            terms.append(s[start:pos])
            start = pos
    terms.append(s[start:])
    re, im = _Q0, _Q0
    for term in terms:
        if term in ("i", "+i"):
            im += 1
        elif term == "-i":
            im -= 1
        elif term.endswith("*i"):
            im += _Q(term[:-2])
        elif term.endswith("i"):
            im += _Q(term[:-1])
        else:
            re += _Q(term)
    return GaussianRational(re, im)


def format_scalar(x):
    """Inverse of parse_scalar, canonical form."""
    return str(x)


class Matrix:
    """Immutable dense matrix over Q(i)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(_coerce(e) for e in row) for row in entries)
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        assert all(len(row) == cols for row in entries), "ragged rows"
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zeros(rows, cols):
        return Matrix([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n):
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def diag(values):
        values = [_coerce(v) for v in values]
        n = len(values)
        return Matrix([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def unit(rows, cols, i, j, value=ONE):
        """Elementary matrix with a single entry at (i, j), zero-indexed."""
        m = [[ZERO] * cols for _ in range(rows)]
        m[i][j] = _coerce(value)
        return Matrix(m)

    # -- basics -----------------------------------------------------------

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.entries])

    def scale(self, c):
        c = _coerce(c)
        return Matrix([[c * a for a in row] for row in self.entries])

    def __matmul__(self, other):
        assert self.cols == other.rows, "shape mismatch"
        ot = other.entries
        out = []
        for row in self.entries:
            nz = [(j, a) for j, a in enumerate(row) if a]
            acc = [ZERO] * other.cols
            for j, a in nz:
                orow = ot[j]
                for l in range(other.cols):
                    b = orow[l]
                    if b:
                        acc[l] = acc[l] + a * b
            out.append(acc)
        return Matrix(out)

    def apply(self, vec):
        """Matrix times a column vector given as a tuple."""
        assert len(vec) == self.cols
        out = []
        for row in self.entries:
            s = ZERO
            for a, v in zip(row, vec):
                if a and v:
                    s = s + a * v
            out.append(s)
        return tuple(out)

    def transpose(self):
        return Matrix(list(zip(*self.entries))) if self.rows else Matrix([[]])

    def conjugate(self):
        return Matrix([[a.conjugate() for a in row] for row in self.entries])

    def conj_transpose(self):
        return self.transpose().conjugate()

    def trace(self):
        assert self.rows == self.cols, "trace of non-square matrix"
        t = ZERO
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def is_zero(self):
        return all(not a for row in self.entries for a in row)

    def is_square(self):
        return self.rows == self.cols

    def flatten(self):
        return tuple(a for row in self.entries for a in row)

    def submatrix(self, row_idx, col_idx):
        return Matrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}: {format_matrix(self)})"

    # -- elimination ------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column list)."""
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            # first nonzero at or below row r
            pr = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = ONE / m[r][c]
            m[r] = [inv * a for a in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(m), pivots

    def rank(self):
        return len(self.rref()[1])

    def det(self):
        assert self.is_square()
        m = [list(row) for row in self.entries]
        n = self.rows
        d = ONE
        for c in range(n):
            pr = next((i for i in range(c, n) if m[i][c]), None)
            if pr is None:
                return ZERO
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                d = -d
            d = d * m[c][c]
            inv = ONE / m[c][c]
            for i in range(c + 1, n):
                if m[i][c]:
                    f = inv * m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return d

    def inverse(self):
        assert self.is_square()
        n = self.rows
        aug = Matrix([list(row) + list(Matrix.identity(n).row(i)) for i, row in enumerate(self.entries)])
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))

    def solve(self, rhs):
        """Solve self @ x = rhs (rhs a tuple); None if inconsistent."""
        assert len(rhs) == self.rows
        aug = Matrix([list(row) + [rhs[i]] for i, row in enumerate(self.entries)])
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for r, c in enumerate(pivots):
            x[c] = red[r, self.cols]
        return tuple(x)


def rank(m):
    return m.rank()


def kernel_basis(m):
    """Right null space of m as a Subspace of the column space."""
    red, pivots = m.rref()
    free = [c for c in range(m.cols) if c not in pivots]
    vecs = []
    for fc in free:
        v = [ZERO] * m.cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r, fc]
        vecs.append(v)
    return Subspace(m.cols, vecs)


def trace_part(m):
    return m.trace()


def red_part(m):
    """m minus its trace part: red(m) = m - (tr m / n) Id."""
    assert m.is_square() and m.rows > 0
    shift = m.trace() / qi(m.rows)
    return m - Matrix.identity(m.rows).scale(shift)


class Subspace:
    """A linear subspace given by a basis matrix, one vector per row.

    The basis is canonicalized to RREF on construction, so equality of
    subspaces reduces to equality of the stored bases (equivalent to the
    mutual-membership test, but cheaper).
    """

    __slots__ = ("ambient_dim", "basis", "parity")

    def __init__(self, ambient_dim, vectors, parity="mixed"):
        assert parity in ("even", "odd", "mixed")
        rows = [list(v) for v in vectors]
        if rows:
            red, pivots = Matrix(rows).rref()
            basis = Matrix([red.row(i) for i in range(len(pivots))]) if pivots else Matrix.zeros(0, ambient_dim)
        else:
            basis = Matrix.zeros(0, ambient_dim)
        assert basis.cols == ambient_dim or basis.rows == 0
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "parity", parity)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self):
        return self.basis.rows

    def vectors(self):
        return [self.basis.row(i) for i in range(self.dim)]

    def contains(self, vec):
        vec = tuple(_coerce(v) for v in vec)
        assert len(vec) == self.ambient_dim
        if self.dim == 0:
            return all(not v for v in vec)
        return self.basis.transpose().solve(vec) is not None

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.vectors())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} in C^{self.ambient_dim}, {self.parity})"

    def intersect(self, other):
        """Intersection via the kernel of the stacked-basis relation."""
        assert self.ambient_dim == other.ambient_dim
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.ambient_dim, [], self.parity)
        stacked = Matrix(
            [list(v) for v in self.vectors()] + [list(v) for v in other.vectors()]
        ).transpose()
        ker = kernel_basis(stacked)
        vecs = []
        for v in ker.vectors():
            coeffs = v[: self.dim]
            vec = [ZERO] * self.ambient_dim
            for c, b in zip(coeffs, self.vectors()):
                if c:
                    vec = [x + c * y for x, y in zip(vec, b)]
            vecs.append(vec)
        return Subspace(self.ambient_dim, vecs, self.parity)

    def project(self, coord_idx):
        """Image of the coordinate projection onto the given indices."""
        return Subspace(len(coord_idx), [[v[j] for j in coord_idx] for v in self.vectors()])


def realify_vector(vec):
    """(z_1,...,z_n) -> (re z_1, im z_1, ..., re z_n, im z_n) over Q."""
    out = []
    for z in vec:
        z = _coerce(z)
        out.append(GaussianRational(z.re))
        out.append(GaussianRational(z.im))
    return tuple(out)


def realify(s):
    """Realification of a complex subspace: ambient dimension doubles.

    Each complex basis vector v contributes v and i*v, expanded into
    interleaved (re, im) coordinates.
    """
    vecs = []
    for v in s.vectors():
        vecs.append(realify_vector(v))
        vecs.append(realify_vector([I * z for z in v]))
    return Subspace(2 * s.ambient_dim, vecs, s.parity)


def parse_matrix(text):
    """Matrix literal: rows separated by ';', entries by ','."""
    rows = [r for r in text.strip().split(";")]
    return Matrix([[parse_scalar(e) for e in row.split(",")] for row in rows])


def format_matrix(m):
    return ";".join(",".join(format_scalar(a) for a in row) for row in m.entries)
