"""First Hochschild cohomology of an algebra with coefficients in a bimodule.

A linear map D: A -> X is stored as an m x n matrix whose column j is D(e_j).
Spaces of maps are subspaces of Q(i)^(m n) through row-major vectorization,
so Z1 and B1 can be compared as sets, not only by dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Algebra, Vector, canonical_left_identity, phi_kernel
from .bimodule import Bimodule, nth_dual
from .exactnum import ONE, ZERO, Matrix, Subspace, kernel, solve

__all__ = [
    "DerivationMatrix",
    "CohomologySummary",
    "NonInnerWitness",
    "CyclicReport",
    "leibniz_operator",
    "leibniz_residual",
    "is_derivation",
    "derivation_space",
    "inner_map",
    "inner_derivation",
    "inner_derivations",
    "h1",
    "n_weak_amenability_profile",
    "phi_h1_dim_closed_form",
    "maps_into",
    "even_dual_derivations_closed_form",
    "inner_witness_odd",
    "make_noninner_even",
    "is_cyclic",
    "cyclic_derivations",
    "cyclic_equivalence",
    "cyclic_equivalence_report",
]

MAX_PROFILE_LEVEL = 6


class DerivationError(ValueError):
    pass


@dataclass(frozen=True)
class DerivationMatrix:
    """Linear map D: A -> X; ``map`` is dim(X) x dim(A)."""

    map: Matrix
    module: Bimodule

    def __post_init__(self):
        if (self.map.rows, self.map.cols) != (self.module.dim, self.module.algebra.dim):
            raise ValueError("map shape does not match (module dim) x (algebra dim)")

    @classmethod
    def from_vector(cls, vec, module: Bimodule) -> "DerivationMatrix":
        return cls(Matrix.unvectorize(vec, module.dim, module.algebra.dim), module)

    def __call__(self, a) -> Vector:
        return self.map @ a

    def vectorize(self) -> Vector:
        return self.map.vectorize()


def leibniz_operator(A: Algebra, X: Bimodule) -> Matrix:
    """Matrix of D -> [D(e_i e_j) - D(e_i).e_j - e_i.D(e_j)]_{i,j}.

    Rows are indexed by (i, j, q), columns by vec index q'*n + j'.
    """
    n, m = A.dim, X.dim
    rows = []
    for i in range(n):
        for j in range(n):
            cij = A.mult[i][j]
            for q in range(m):
                row = [ZERO] * (m * n)
                # D(e_i e_j)_q = sum_k c[i][j][k] D[q][k]
                for k, c in enumerate(cij):
                    if c:
                        row[q * n + k] = row[q * n + k] + c
                # (D(e_i).e_j)_q = sum_p D[p][i] right[p][j][q]
                for p in range(m):
                    r = X.right[p][j][q]
                    if r:
                        row[p * n + i] = row[p * n + i] - r
                # (e_i.D(e_j))_q = sum_p D[p][j] left[i][p][q]
                for p in range(m):
                    l = X.left[i][p][q]
                    if l:
                        row[p * n + j] = row[p * n + j] - l
                rows.append(row)
    return Matrix.from_rows(rows, m * n)


def leibniz_residual(D: DerivationMatrix) -> Vector:
    return leibniz_operator(D.module.algebra, D.module) @ D.vectorize()


def is_derivation(D: DerivationMatrix) -> bool:
    return not any(leibniz_residual(D))


def derivation_space(A: Algebra, X: Bimodule) -> Subspace:
    """Z1(A, X) as a subspace of vectorized maps."""
    return kernel(leibniz_operator(A, X))


def inner_map(A: Algebra, X: Bimodule) -> Matrix:
    """The (m n) x m matrix of x -> vec(delta_x), delta_x(a) = a.x - x.a."""
    n, m = A.dim, X.dim
    cols = []
    for p in range(m):
        col = [ZERO] * (m * n)
        for i in range(n):
            for q in range(m):
                v = X.left[i][p][q] - X.right[p][i][q]
                if v:
                    col[q * n + i] = v
        cols.append(col)
    return Matrix.from_columns(cols, m * n)


def inner_derivation(X: Bimodule, x) -> DerivationMatrix:
    vec = inner_map(X.algebra, X) @ x
    return DerivationMatrix.from_vector(vec, X)


def inner_derivations(A: Algebra, X: Bimodule, _leibniz: Optional[Matrix] = None) -> Subspace:
    """B1(A, X); every generator is checked against the Leibniz rule."""
    M = inner_map(A, X)
    L = leibniz_operator(A, X) if _leibniz is None else _leibniz
    gens = M.columns()
    for p, g in enumerate(gens):
        if any(L @ g):
            raise DerivationError(f"delta of basis vector {p} violates the Leibniz rule")
    return Subspace.span(gens, M.rows)


@dataclass(frozen=True)
class CohomologySummary:
    z1: Subspace
    b1: Subspace
    h1_dim: int
    inner: bool  # every derivation is inner


def h1(A: Algebra, X: Bimodule) -> CohomologySummary:
    L = leibniz_operator(A, X)
    z1 = kernel(L)
    b1 = inner_derivations(A, X, L)
    if not b1.is_subspace_of(z1):
        raise DerivationError("inner derivations are not contained in the derivation space")
    d = z1.dim - b1.dim
    return CohomologySummary(z1, b1, d, d == 0)


def n_weak_amenability_profile(A: Algebra, max_k: int) -> list[tuple[int, int]]:
    """``[(k, dim H1(A, A^(k))) for k = 0..max_k]``."""
    if not 0 <= max_k <= MAX_PROFILE_LEVEL:
        raise ValueError(f"max_k must be between 0 and {MAX_PROFILE_LEVEL}")
    return [(k, h1(A, nth_dual(A, k)).h1_dim) for k in range(max_k + 1)]


def phi_h1_dim_closed_form(n: int, k: int) -> int:
    """Expected dim H1(phiA, phiA^(k)): 0 for odd k, n(n-2) for even k (0 when n = 1)."""
    if k % 2 or n < 2:
        return 0
    return n * (n - 2)


def maps_into(target: Subspace, source_dim: int) -> Subspace:
    """Vectorized maps Q(i)^source_dim -> Q(i)^m whose image lies in ``target``."""
    m, n = target.ambient_dim, source_dim
    vecs = []
    for v in target.vectors():
        for j in range(n):
            vec = [ZERO] * (m * n)
            for q, x in enumerate(v):
                vec[q * n + j] = x
            vecs.append(vec)
    return Subspace.span(vecs, m * n)


def inner_witness_odd(A: Algebra, D: DerivationMatrix, k: Optional[int] = None) -> Vector:
    """``x = -D(e)`` for the canonical left identity e; checks delta_x = D.

    ``k`` only guards against being used on an even dual.
    """
    level = D.module.dual_level if k is None else k
    if level % 2 == 0:
        raise ValueError("the inner witness construction applies to odd duals")
    if not is_derivation(D):
        raise DerivationError("map is not a derivation")
    e = canonical_left_identity(A)
    x = tuple(-v for v in D(e))
    if inner_derivation(D.module, x).map != D.map:
        raise AssertionError("delta_{-D(e)} differs from D; internal inconsistency")
    return x


@dataclass(frozen=True)
class NonInnerWitness:
    f: Vector
    a0: Vector
    b0: Vector
    derivation: DerivationMatrix
    is_inner: bool


def make_noninner_even(A: Algebra, X: Optional[Bimodule] = None) -> NonInnerWitness:
    """D(a) = <f - phi, a> b0 into the second dual (or another even dual ``X``).

    f is the first dual basis vector independent of phi; a0 and b0 solve
    <f,a0> = <phi,b0> = 0, <f,b0> = <phi,a0> = 1 with free variables zeroed.
    """
    if not A.is_phi_algebra:
        raise ValueError("construction needs a phi-algebra")
    n, phi = A.dim, A.phi
    f = None
    for j in range(n):
        cand = tuple(ONE if t == j else ZERO for t in range(n))
        if Subspace.span([phi, cand], n).dim == 2:
            f = cand
            break
    if f is None:
        raise ValueError("no functional independent of phi")
    M = Matrix.from_rows([f, phi])
    a0 = solve(M, [ZERO, ONE])
    b0 = solve(M, [ONE, ZERO])
    if X is None:
        X = nth_dual(A, 2)
    fm = tuple(a - b for a, b in zip(f, phi))
    D = DerivationMatrix(Matrix.from_rows([[bq * fj for fj in fm] for bq in b0], n), X)
    if not is_derivation(D):
        raise DerivationError("constructed map is not a derivation")
    inner = inner_derivations(A, X).contains(D.vectorize())
    return NonInnerWitness(f, a0, b0, D, inner)


def _check_first_dual(D: DerivationMatrix):
    A = D.module.algebra
    if not D.module.same_actions(nth_dual(A, 1)):
        raise ValueError("cyclicity is defined for maps into the first dual")


def is_cyclic(A: Algebra, D: DerivationMatrix) -> bool:
    """Antisymmetry of (a, b) -> <D(a), b>; the form's matrix is D itself."""
    if D.module.algebra.mult != A.mult:
        raise ValueError("derivation belongs to a different algebra")
    _check_first_dual(D)
    M = D.map
    return (M + M.T).is_zero()


def _antisymmetric_maps(n: int) -> Subspace:
    rows = []
    for a in range(n):
        for b in range(a, n):
            row = [ZERO] * (n * n)
            row[a * n + b] = row[a * n + b] + ONE
            row[b * n + a] = row[b * n + a] + ONE
            rows.append(row)
    return kernel(Matrix.from_rows(rows, n * n))


def cyclic_derivations(A: Algebra) -> Subspace:
    X = nth_dual(A, 1)
    return derivation_space(A, X).intersect(_antisymmetric_maps(A.dim))


@dataclass(frozen=True)
class CyclicReport:
    derivations_all_cyclic: bool
    cyclic_equals_inner: bool

    @property
    def ok(self) -> bool:
        return self.derivations_all_cyclic and self.cyclic_equals_inner


def cyclic_equivalence(A: Algebra) -> CyclicReport:
    X = nth_dual(A, 1)
    z1 = derivation_space(A, X)
    all_cyclic = all(is_cyclic(A, DerivationMatrix.from_vector(v, X)) for v in z1.vectors())
    return CyclicReport(all_cyclic, cyclic_derivations(A) == inner_derivations(A, X))


def cyclic_equivalence_report(A: Algebra) -> bool:
    return cyclic_equivalence(A).ok


def even_dual_derivations_closed_form(A: Algebra) -> Subspace:
    """Maps A -> A^(2j) with image in ker phi."""
    return maps_into(phi_kernel(A), A.dim)
