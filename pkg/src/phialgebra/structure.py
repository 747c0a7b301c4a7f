"""Isomorphism certificates and multiplier spaces."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Literal

from .algebra import Algebra
from .exactnum import ZERO, Matrix, Subspace, inverse, kernel, rank

__all__ = [
    "LinearMapWitness",
    "MultiplierSpace",
    "check_isomorphism",
    "isomorphism_witness",
    "inverse_witness",
    "multipliers",
    "is_multiplier",
]


@dataclass(frozen=True)
class LinearMapWitness:
    map: Matrix
    source: Algebra
    target: Algebra


def _is_multiplicative(T: Matrix, A: Algebra, B: Algebra) -> bool:
    images = [T.column(j) for j in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            if T @ A.mult[i][j] != B.multiply(images[i], images[j]):
                return False
    return True


def check_isomorphism(T: Matrix, A: Algebra, B: Algebra) -> bool:
    """True iff T is invertible and T(ab) = T(a)T(b) on basis pairs."""
    if (T.rows, T.cols) != (B.dim, A.dim) or A.dim != B.dim:
        raise ValueError("isomorphism candidate must be square and match both algebras")
    return rank(T) == A.dim and _is_multiplicative(T, A, B)


def isomorphism_witness(T: Matrix, A: Algebra, B: Algebra) -> LinearMapWitness | None:
    if not check_isomorphism(T, A, B):
        return None
    return LinearMapWitness(T, A, B)


def inverse_witness(w: LinearMapWitness) -> LinearMapWitness:
    return LinearMapWitness(inverse(w.map), w.target, w.source)


Side = Literal["left", "right"]


@dataclass(frozen=True)
class MultiplierSpace:
    side: Side
    basis: Subspace  # vectorized n x n maps, row-major

    @property
    def dim(self) -> int:
        return self.basis.dim

    def maps(self) -> list[Matrix]:
        n = isqrt(self.basis.ambient_dim)
        return [Matrix.unvectorize(v, n, n) for v in self.basis.vectors()]


def _multiplier_constraints(A: Algebra, side: Side) -> Matrix:
    # left:  T(e_i e_j) - T(e_i) e_j = 0
    # right: T(e_i e_j) - e_i T(e_j) = 0
    n = A.dim
    Rj = [A.right_matrix(A.basis_vector(j)) for j in range(n)]
    Li = [A.left_matrix(A.basis_vector(i)) for i in range(n)]
    rows = []
    for i in range(n):
        for j in range(n):
            cij = A.mult[i][j]
            for q in range(n):
                row = [ZERO] * (n * n)
                for k, c in enumerate(cij):
                    if c:
                        row[q * n + k] = row[q * n + k] + c
                if side == "left":
                    # (T e_i) e_j at coordinate q = sum_p T[p][i] Rj[q][p]
                    for p in range(n):
                        v = Rj[j][q, p]
                        if v:
                            row[p * n + i] = row[p * n + i] - v
                else:
                    for p in range(n):
                        v = Li[i][q, p]
                        if v:
                            row[p * n + j] = row[p * n + j] - v
                rows.append(row)
    return Matrix.from_rows(rows, n * n)


def multipliers(A: Algebra, side: Side) -> MultiplierSpace:
    """Left multipliers T(ab) = T(a)b or right multipliers T(ab) = aT(b)."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return MultiplierSpace(side, kernel(_multiplier_constraints(A, side)))


def is_multiplier(A: Algebra, T: Matrix, side: Side) -> bool:
    return not any(_multiplier_constraints(A, side) @ T.vectorize())
