"""Finite-dimensional algebras given by structure constants, and phi-algebras.

A phi-algebra is a vector space with product ``a . b = phi(a) b`` for a fixed
nonzero functional ``phi``.  Its structure tensor is ``c[i][j][k] = phi[i] * delta(j, k)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exactnum import (
    ONE,
    ZERO,
    GaussianRational,
    Matrix,
    Subspace,
    as_vector,
    kernel,
    solve,
)

Vector = tuple  # tuple[GaussianRational, ...] in the fixed basis
DualVector = tuple  # coordinates in the dual basis
Tensor3 = tuple  # c[i][j][k]

__all__ = [
    "Algebra",
    "AffineSet",
    "LeftIdentities",
    "IdempotentSet",
    "NormReport",
    "make_phi_algebra",
    "make_algebra",
    "zero_algebra",
    "matrix_algebra",
    "diagonal_algebra",
    "multiply",
    "pair",
    "left_identities",
    "canonical_left_identity",
    "is_idempotent",
    "idempotent_set",
    "is_minimal_idempotent",
    "unitize",
    "radical",
    "norm_check",
    "phi_kernel",
    "phi_form_tensor",
]


def _freeze_tensor(c, n: int) -> Tensor3:
    t = tuple(tuple(as_vector(c[i][j]) for j in range(n)) for i in range(n))
    if len(c) != n or any(len(c[i]) != n for i in range(n)) or any(len(t[i][j]) != n for i in range(n) for j in range(n)):
        raise ValueError(f"structure tensor must have shape {n}x{n}x{n}")
    return t


def _tensor_product(c: Tensor3, a: Sequence, b: Sequence) -> Vector:
    n = len(c)
    out = [ZERO] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        ci = c[i]
        for j, bj in enumerate(b):
            if not bj:
                continue
            s = ai * bj
            for k, x in enumerate(ci[j]):
                if x:
                    out[k] = out[k] + s * x
    return tuple(out)


def associativity_defect(c: Tensor3) -> Optional[tuple[int, int, int]]:
    """First basis triple where ``(ei ej) ek != ei (ej ek)``, or None."""
    n = len(c)
    basis = [tuple(ONE if t == s else ZERO for t in range(n)) for s in range(n)]
    for i in range(n):
        for j in range(n):
            eij = c[i][j]
            for k in range(n):
                lhs = _tensor_product(c, eij, basis[k])
                rhs = _tensor_product(c, basis[i], c[j][k])
                if lhs != rhs:
                    return (i, j, k)
    return None


@dataclass(frozen=True)
class Algebra:
    """Associative algebra on Q(i)^dim with ``e_i e_j = sum_k mult[i][j][k] e_k``.

    ``phi`` is set exactly when the algebra was built as a phi-algebra; the
    constructor then also checks that the tensor has the phi-form.
    """

    dim: int
    mult: Tensor3
    phi: Optional[DualVector] = None
    label: str = ""

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("algebra dimension must be at least 1")
        object.__setattr__(self, "mult", _freeze_tensor(self.mult, self.dim))
        if self.phi is not None:
            phi = as_vector(self.phi)
            if len(phi) != self.dim:
                raise ValueError(f"functional has length {len(phi)}, expected {self.dim}")
            if not any(phi):
                raise ValueError("functional must be nonzero")
            object.__setattr__(self, "phi", phi)
            if self.mult != phi_form_tensor(phi):
                raise ValueError("structure tensor is not of the form c[i][j][k] = phi[i] delta(j,k)")
        bad = associativity_defect(self.mult)
        if bad is not None:
            raise ValueError(f"structure tensor is not associative at basis triple {bad}")

    def __repr__(self):
        phi = "" if self.phi is None else f", phi=[{', '.join(map(str, self.phi))}]"
        return f"Algebra({self.label!r}, dim={self.dim}{phi})"

    @property
    def is_phi_algebra(self) -> bool:
        return self.phi is not None

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if t == i else ZERO for t in range(self.dim))

    def basis(self) -> list[Vector]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def multiply(self, a: Sequence, b: Sequence) -> Vector:
        a, b = as_vector(a), as_vector(b)
        if len(a) != self.dim or len(b) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        return _tensor_product(self.mult, a, b)

    def left_matrix(self, a: Sequence) -> Matrix:
        """Matrix of ``x -> a x``."""
        return Matrix.from_columns([self.multiply(a, e) for e in self.basis()], self.dim)

    def right_matrix(self, a: Sequence) -> Matrix:
        """Matrix of ``x -> x a``."""
        return Matrix.from_columns([self.multiply(e, a) for e in self.basis()], self.dim)


def phi_form_tensor(phi: Sequence) -> Tensor3:
    phi = as_vector(phi)
    n = len(phi)
    return tuple(
        tuple(tuple(phi[i] if j == k else ZERO for k in range(n)) for j in range(n))
        for i in range(n)
    )


def make_phi_algebra(n: int, phi: Sequence, label: str = "") -> Algebra:
    """The algebra ``a . b = phi(a) b`` on Q(i)^n."""
    phi = as_vector(phi)
    if n < 1:
        raise ValueError("algebra dimension must be at least 1")
    if len(phi) != n:
        raise ValueError(f"functional has length {len(phi)}, expected {n}")
    if not any(phi):
        raise ValueError("functional must be nonzero")
    return Algebra(n, phi_form_tensor(phi), phi, label or f"phi-algebra({n})")


def make_algebra(mult, label: str = "") -> Algebra:
    return Algebra(len(mult), mult, None, label)


def zero_algebra(n: int) -> Algebra:
    return make_algebra([[[ZERO] * n for _ in range(n)] for _ in range(n)], f"zero({n})")


def matrix_algebra(d: int = 2) -> Algebra:
    """Full matrix algebra M_d with basis E_rs ordered row-major."""
    n = d * d
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for r in range(d):
        for s in range(d):
            for t in range(d):
                # E_rs E_st = E_rt
                c[r * d + s][s * d + t][r * d + t] = ONE
    return make_algebra(c, f"M{d}")


def diagonal_algebra(n: int) -> Algebra:
    """Commutative algebra Q(i)^n with coordinatewise product."""
    c = [[[ONE if i == j == k else ZERO for k in range(n)] for j in range(n)] for i in range(n)]
    return make_algebra(c, f"diag({n})")


def multiply(A: Algebra, a: Sequence, b: Sequence) -> Vector:
    return A.multiply(a, b)


def pair(f: Sequence, x: Sequence) -> GaussianRational:
    """Bilinear pairing of a dual vector with a vector (no conjugation)."""
    f, x = as_vector(f), as_vector(x)
    if len(f) != len(x):
        raise ValueError("pairing of vectors of different lengths")
    acc = ZERO
    for a, b in zip(f, x):
        if a and b:
            acc = acc + a * b
    return acc


def phi_kernel(A: Algebra) -> Subspace:
    _require_phi(A)
    return kernel(Matrix.from_rows([A.phi]))


def _require_phi(A: Algebra):
    if not A.is_phi_algebra:
        raise ValueError(f"{A.label or 'algebra'} is not a phi-algebra")


@dataclass(frozen=True)
class AffineSet:
    point: Vector
    direction: Subspace

    def contains(self, v: Sequence) -> bool:
        v = as_vector(v)
        return self.direction.contains(tuple(a - b for a, b in zip(v, self.point)))


@dataclass(frozen=True)
class LeftIdentities(AffineSet):
    two_sided: Optional[Vector] = None


def _identity_system(A: Algebra, left: bool = True, right: bool = False) -> tuple[Matrix, list]:
    # unknown e; equations e e_j = e_j and/or e_j e = e_j
    n = A.dim
    rows, rhs = [], []
    for j in range(n):
        ej = A.basis_vector(j)
        if left:
            M = A.right_matrix(ej)  # e -> e e_j
            rows.extend(M.entries)
            rhs.extend(ej)
        if right:
            M = A.left_matrix(ej)  # e -> e_j e
            rows.extend(M.entries)
            rhs.extend(ej)
    return Matrix.from_rows(rows, n), rhs


def left_identities(A: Algebra) -> Optional[LeftIdentities]:
    """All ``e`` with ``e a = a`` for every ``a``, as particular point plus direction.

    Returns None if the algebra has no left identity.  ``two_sided`` holds a
    two-sided identity when one exists.
    """
    M, rhs = _identity_system(A, left=True)
    e = solve(M, rhs)
    if e is None:
        return None
    M2, rhs2 = _identity_system(A, left=True, right=True)
    unit = solve(M2, rhs2)
    return LeftIdentities(e, kernel(M), unit)


def canonical_left_identity(A: Algebra) -> Vector:
    """``e_i / phi_i`` for the lowest index i with ``phi_i != 0``."""
    _require_phi(A)
    i0 = next(i for i, p in enumerate(A.phi) if p)
    return tuple(ONE / A.phi[i0] if t == i0 else ZERO for t in range(A.dim))


def is_idempotent(A: Algebra, a: Sequence) -> bool:
    a = as_vector(a)
    return A.multiply(a, a) == a


@dataclass(frozen=True)
class IdempotentSet:
    """``{0}`` together with the affine hyperplane ``{a : phi(a) = 1}``."""

    zero: Vector
    nonzero: AffineSet

    def contains(self, v: Sequence) -> bool:
        v = as_vector(v)
        return v == self.zero or self.nonzero.contains(v)


def idempotent_set(A: Algebra) -> IdempotentSet:
    _require_phi(A)
    point = solve(Matrix.from_rows([A.phi]), [ONE])
    return IdempotentSet(tuple([ZERO] * A.dim), AffineSet(point, phi_kernel(A)))


def is_minimal_idempotent(A: Algebra, p: Sequence) -> bool:
    """True iff ``p A p`` is the line through ``p``."""
    p = as_vector(p)
    if not any(p) or not is_idempotent(A, p):
        raise ValueError("minimality is only defined for nonzero idempotents")
    corner = Subspace.span([A.multiply(A.multiply(p, e), p) for e in A.basis()], A.dim)
    return corner.dim == 1 and corner.contains(p)


def unitize(A: Algebra) -> Algebra:
    """``A + C1`` with an adjoined identity as the last basis vector."""
    n = A.dim
    N = n + 1
    c = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            c[i][j][:n] = A.mult[i][j]
    for i in range(N):
        c[n][i][i] = ONE
        c[i][n][i] = ONE
    return Algebra(N, c, None, f"unitization({A.label})")


def _trace(M: Matrix) -> GaussianRational:
    acc = ZERO
    for i in range(M.rows):
        acc = acc + M[i, i]
    return acc


def radical(A: Algebra) -> Subspace:
    """Jacobson radical by the characteristic-zero trace-form criterion.

    In the unitization U, rad(U) = {x : tr L(x y) = 0 for all y in U}, and
    rad(A) = rad(U) which lies inside A.
    """
    U = unitize(A)
    N, n = U.dim, A.dim
    traces = [_trace(U.left_matrix(U.basis_vector(k))) for k in range(N)]
    # form[i][j] = tr L(u_i u_j) = sum_k c[i][j][k] tr L(u_k)
    form = [
        [sum((U.mult[i][j][k] * traces[k] for k in range(N) if U.mult[i][j][k]), ZERO) for i in range(N)]
        for j in range(N)
    ]
    rad_u = kernel(Matrix.from_rows(form, N))
    in_a = Subspace.span([tuple(ONE if t == i else ZERO for t in range(N)) for i in range(n)], N)
    rad = rad_u.intersect(in_a)
    return Subspace.span([v[:n] for v in rad.vectors()], n)


@dataclass(frozen=True)
class NormReport:
    phi_sup_squared: Fraction  # max_i |phi_i|^2
    admissible: bool  # ||phi||_inf <= 1, hence ||ab||_1 <= ||a||_1 ||b||_1


def norm_check(A: Algebra) -> NormReport:
    """Sup norm of phi against the l1 norm on coordinates."""
    _require_phi(A)
    sup_sq = max(p.abs_squared() for p in A.phi)
    return NormReport(sup_sq, sup_sq <= 1)
