"""Exact scalars over Q(i) and dense exact linear algebra.

Everything here is immutable.  Row reduction is Gauss-Jordan with the pivot
taken in the leftmost nonzero column and the topmost available row, so every
result (rref, kernel bases, particular solutions) is reproducible bit for bit.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "GaussianRational",
    "Matrix",
    "Subspace",
    "ZERO",
    "ONE",
    "gr",
    "as_vector",
    "rref",
    "kernel",
    "solve",
    "inverse",
    "rank",
    "parse_rational",
    "format_rational",
    "parse_scalar",
    "format_scalar",
]


class GaussianRational:
    """Complex number ``re + im*i`` with rational parts.

    ``Fraction`` keeps both parts in lowest terms with a positive denominator,
    so structural equality is value equality.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("cannot combine a GaussianRational real part with an imaginary part")
            re, im = re.re, re.im
        object.__setattr__(self, "re", _to_fraction(re))
        object.__setattr__(self, "im", _to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("binary floats are not exact; pass rationals")
        return cls(x)

    def __repr__(self):
        if not self.im:
            return f"GR({self.re})"
        return f"GR({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return _mk(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if type(other) is not GaussianRational:
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return _mk(self.re + other, self.im)
        return _mk(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return _mk(self.re - other, self.im)
        return _mk(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return _mk(self.re * other, self.im * other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return _mk(a * c, _F0)
        return _mk(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return _mk(a / c, _F0)
        den = c * c + d * d
        return _mk((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def conjugate(self) -> "GaussianRational":
        return _mk(self.re, -self.im)

    def abs_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_canonical(self) -> bool:
        """Both parts have positive denominators coprime to their numerators."""
        for part in (self.re, self.im):
            if part.denominator <= 0:
                return False
            if gcd(abs(part.numerator), part.denominator) != 1:
                return False
        return True


_F0 = Fraction(0)
_set_re = GaussianRational.re.__set__
_set_im = GaussianRational.im.__set__


def _mk(re: Fraction, im: Fraction) -> GaussianRational:
    # internal constructor for values already known to be Fractions
    z = object.__new__(GaussianRational)
    _set_re(z, re)
    _set_im(z, im)
    return z


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not an exact rational: {x!r}")


def gr(re=0, im=0) -> GaussianRational:
    return GaussianRational(re, im)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def as_vector(values: Iterable) -> tuple[GaussianRational, ...]:
    if type(values) is tuple and all(type(v) is GaussianRational for v in values):
        return values
    return tuple(v if type(v) is GaussianRational else GaussianRational.coerce(v) for v in values)


# text forms ----------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; the result is canonicalized."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_scalar(pair: Sequence[str]) -> GaussianRational:
    if isinstance(pair, str) or len(pair) != 2:
        raise ValueError(f"scalar must be a [re, im] pair of strings, got {pair!r}")
    return GaussianRational(parse_rational(pair[0]), parse_rational(pair[1]))


def format_scalar(z: GaussianRational) -> list[str]:
    z = GaussianRational.coerce(z)
    return [format_rational(z.re), format_rational(z.im)]


# matrices ------------------------------------------------------------------


class Matrix:
    """Dense immutable matrix of Gaussian rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_sparse")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence] = ()):
        entries = tuple(as_vector(r) for r in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError(f"entries do not form a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_sparse", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def sparse_rows(self) -> tuple[tuple[tuple[int, GaussianRational], ...], ...]:
        """Per row, the (column, value) pairs of the nonzero entries."""
        if self._sparse is None:
            object.__setattr__(self, "_sparse", tuple(
                tuple((j, x) for j, x in enumerate(r) if x) for r in self.entries))
        return self._sparse

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = list(rows)
        if cols is None:
            if not rows:
                raise ValueError("column count needed for an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = list(columns)
        return cls(rows, len(columns), [[c[i] for c in columns] for i in range(rows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[GaussianRational, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[GaussianRational, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self.column(j) for j in range(self.cols)])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            ocols = other.columns()
            return Matrix(self.rows, other.cols, [[_dot(r, c) for c in ocols] for r in self.entries])
        vec = as_vector(other)
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} does not fit {self.rows}x{self.cols}")
        out = []
        for r in self.sparse_rows():
            acc = ZERO
            for j, x in r:
                v = vec[j]
                if v:
                    acc = acc + x * v
            out.append(acc)
        return tuple(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [[-a for a in r] for r in self.entries])

    def scale(self, c) -> "Matrix":
        c = GaussianRational.coerce(c)
        return Matrix(self.rows, self.cols, [[c * a for a in r] for r in self.entries])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def vectorize(self) -> tuple[GaussianRational, ...]:
        """Row-major flattening; index ``i*cols + j`` holds entry (i, j)."""
        return tuple(x for r in self.entries for x in r)

    @classmethod
    def unvectorize(cls, vec: Sequence, rows: int, cols: int) -> "Matrix":
        vec = as_vector(vec)
        if len(vec) != rows * cols:
            raise ValueError("vector length does not match the requested shape")
        return cls(rows, cols, [vec[i * cols:(i + 1) * cols] for i in range(rows)])

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


def _dot(u, v) -> GaussianRational:
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def _rref_rows(rows: list[list[GaussianRational]], ncols: int) -> list[int]:
    """In-place Gauss-Jordan reduction of ``rows``; returns the pivot columns."""
    pivots = []
    piv_r = 0
    nrows = len(rows)
    for c in range(ncols):
        if piv_r == nrows:
            break
        for r in range(piv_r, nrows):
            if rows[r][c]:
                break
        else:
            continue
        if r != piv_r:
            rows[piv_r], rows[r] = rows[r], rows[piv_r]
        prow = rows[piv_r]
        p = prow[c]
        if p != ONE:
            inv = ONE / p
            prow = [x * inv if x else x for x in prow]
            rows[piv_r] = prow
        support = [j for j in range(c, ncols) if prow[j]]
        for r in range(nrows):
            if r == piv_r:
                continue
            row = rows[r]
            f = row[c]
            if not f:
                continue
            for j in support:
                row[j] = row[j] - f * prow[j]
        pivots.append(c)
        piv_r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form (same shape, zero rows at the bottom) and pivot columns."""
    rows = [list(r) for r in m.entries]
    pivots = _rref_rows(rows, m.cols)
    return Matrix(m.rows, m.cols, rows), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel(m: Matrix) -> "Subspace":
    """Null space ``{v : m v = 0}`` as a canonical subspace of dimension ``cols - rank``."""
    rows = [list(r) for r in m.entries]
    pivots = _rref_rows(rows, m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            if rows[r][f]:
                v[p] = -rows[r][f]
        basis.append(v)
    return Subspace.span(basis, m.cols)


def solve(m: Matrix, rhs: Matrix | Sequence) -> Matrix | tuple | None:
    """Particular solution of ``m x = rhs`` with all free variables zero.

    ``rhs`` may be a Matrix (several right-hand sides at once) or a plain
    vector, in which case a vector comes back.  Returns ``None`` when the
    system is inconsistent.
    """
    vector_rhs = not isinstance(rhs, Matrix)
    if vector_rhs:
        rhs = Matrix.from_columns([as_vector(rhs)], m.rows)
    if rhs.rows != m.rows:
        raise ValueError("right-hand side must have as many rows as the matrix")
    aug = [list(a) + list(b) for a, b in zip(m.entries, rhs.entries)]
    pivots = _rref_rows(aug, m.cols + rhs.cols)
    if pivots and pivots[-1] >= m.cols:
        return None
    x = [[ZERO] * rhs.cols for _ in range(m.cols)]
    for r, p in enumerate(pivots):
        x[p] = aug[r][m.cols:]
    sol = Matrix(m.cols, rhs.cols, x)
    if vector_rhs:
        return sol.column(0)
    return sol


def inverse(m: Matrix) -> Matrix | None:
    if m.rows != m.cols:
        raise ValueError("only square matrices have inverses")
    if rank(m) != m.rows:
        return None
    return solve(m, Matrix.identity(m.rows))


# subspaces -----------------------------------------------------------------


class Subspace:
    """Subspace of Q(i)^n held by its reduced row-echelon basis (rows are basis vectors)."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: tuple[int, ...]):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [list(as_vector(v)) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError(f"vector of length {len(r)} in ambient dimension {ambient_dim}")
        pivots = _rref_rows(rows, ambient_dim)
        basis = Matrix(len(pivots), ambient_dim, rows[:len(pivots)])
        return cls(ambient_dim, basis, tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls.span([], ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[tuple[GaussianRational, ...]]:
        return list(self.basis.entries)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={list(map(list, self.basis.entries))})"

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def contains(self, v: Sequence) -> bool:
        v = list(as_vector(v))
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        for row, p in zip(self.basis.entries, self.pivots):
            f = v[p]
            if f:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] = v[j] - f * row[j]
        return not any(v)

    __contains__ = contains

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis.entries)

    def __le__(self, other):
        return self.is_subspace_of(other)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.vectors() + other.vectors(), self.ambient_dim)

    def __add__(self, other):
        return self.sum(other)

    def annihilator(self) -> "Subspace":
        """Coefficient vectors ``w`` with ``sum_j u_j w_j = 0`` for every ``u`` in the subspace."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return kernel(self.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        constraints = self.annihilator().vectors() + other.annihilator().vectors()
        if not constraints:
            return Subspace.full(self.ambient_dim)
        return kernel(Matrix.from_rows(constraints, self.ambient_dim))

    def __and__(self, other):
        return self.intersect(other)

    def equals(self, other: "Subspace") -> bool:
        self._check(other)
        return self == other
