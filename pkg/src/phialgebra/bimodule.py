"""Bimodules as pairs of action tensors, the dual functor, and ideal tests.

Dual coordinates always use the dual basis, so dualizing a bimodule is a
transposition of its action tensors.  Under that convention the even duals
of an algebra sit on the same coordinates as the algebra and the odd duals on
the coordinates of its first dual.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Optional, Sequence

from .algebra import Algebra, Vector
from .exactnum import ONE, ZERO, Matrix, Subspace, as_vector, solve

Side = Literal["left", "right"]

__all__ = [
    "Bimodule",
    "regular_bimodule",
    "dual_bimodule",
    "nth_dual",
    "phi_closed_form_dual",
    "action_span",
    "is_left_ideal",
    "is_right_ideal",
    "modular_left_ideal_witness",
    "is_modular_left_ideal",
]


def _act(t, i: int, x: Sequence, m: int, left: bool) -> Vector:
    out = [ZERO] * m
    for p, xp in enumerate(x):
        if not xp:
            continue
        row = t[i][p] if left else t[p][i]
        for q, v in enumerate(row):
            if v:
                out[q] = out[q] + xp * v
    return tuple(out)


@dataclass(frozen=True)
class Bimodule:
    """Bimodule of dimension ``dim`` over ``algebra``.

    ``left[i][p][q]``: coefficient of x_q in e_i . x_p.
    ``right[p][i][q]``: coefficient of x_q in x_p . e_i.
    ``dual_level`` is bookkeeping only (k for the k-th dual of the regular bimodule).
    """

    algebra: Algebra
    dim: int
    left: tuple
    right: tuple
    dual_level: int = 0
    label: str = ""

    def __post_init__(self):
        n, m = self.algebra.dim, self.dim
        left = tuple(tuple(as_vector(self.left[i][p]) for p in range(m)) for i in range(n))
        right = tuple(tuple(as_vector(self.right[p][i]) for i in range(n)) for p in range(m))
        if any(len(v) != m for r in left for v in r) or any(len(v) != m for r in right for v in r):
            raise ValueError("action tensors have the wrong shape")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        bad = self.axiom_defect()
        if bad is not None:
            raise ValueError(f"bimodule axiom {bad[0]} fails at basis triple {bad[1:]}")

    def __repr__(self):
        return f"Bimodule({self.label!r}, dim={self.dim}, dual_level={self.dual_level})"

    def basis_vector(self, p: int) -> Vector:
        return tuple(ONE if t == p else ZERO for t in range(self.dim))

    def act_left(self, a: Sequence, x: Sequence) -> Vector:
        """``a . x`` for an algebra element a."""
        a, x = as_vector(a), as_vector(x)
        out = [ZERO] * self.dim
        for i, ai in enumerate(a):
            if ai:
                for q, v in enumerate(_act(self.left, i, x, self.dim, True)):
                    if v:
                        out[q] = out[q] + ai * v
        return tuple(out)

    def act_right(self, x: Sequence, a: Sequence) -> Vector:
        """``x . a`` for an algebra element a."""
        a, x = as_vector(a), as_vector(x)
        out = [ZERO] * self.dim
        for i, ai in enumerate(a):
            if ai:
                for q, v in enumerate(_act(self.right, i, x, self.dim, False)):
                    if v:
                        out[q] = out[q] + ai * v
        return tuple(out)

    def left_matrix(self, i: int) -> Matrix:
        """Matrix of ``x -> e_i . x``."""
        return Matrix.from_columns(self.left[i], self.dim)

    def right_matrix(self, i: int) -> Matrix:
        """Matrix of ``x -> x . e_i``."""
        return Matrix.from_columns([self.right[p][i] for p in range(self.dim)], self.dim)

    def axiom_defect(self):
        A = self.algebra
        n, m = A.dim, self.dim
        L, R = self.left, self.right

        def combo(t, coeffs, p, left):
            # sum_k coeffs[k] * (e_k . x_p) or (x_p . e_k)
            out = [ZERO] * m
            for k, c in enumerate(coeffs):
                if c:
                    for q, v in enumerate(t[k][p] if left else t[p][k]):
                        if v:
                            out[q] = out[q] + c * v
            return tuple(out)

        for i in range(n):
            for j in range(n):
                cij = A.mult[i][j]
                for p in range(m):
                    if _act(L, i, L[j][p], m, True) != combo(L, cij, p, True):
                        return ("a.(b.x) = (ab).x", i, j, p)
                    if _act(R, j, R[p][i], m, False) != combo(R, cij, p, False):
                        return ("(x.a).b = x.(ab)", p, i, j)
                    if _act(R, j, L[i][p], m, False) != _act(L, i, R[p][j], m, True):
                        return ("(a.x).b = a.(x.b)", i, p, j)
        return None

    def same_actions(self, other: "Bimodule") -> bool:
        return (self.algebra.mult == other.algebra.mult and self.dim == other.dim
                and self.left == other.left and self.right == other.right)


def regular_bimodule(A: Algebra) -> Bimodule:
    n = A.dim
    left = A.mult
    right = tuple(tuple(A.mult[p][i] for i in range(n)) for p in range(n))
    return Bimodule(A, n, left, right, 0, f"{A.label}^(0)")


def dual_bimodule(X: Bimodule) -> Bimodule:
    """Dual module with ``(f.a)(x) = f(a.x)`` and ``(a.f)(x) = f(x.a)``.

    In dual-basis coordinates: left'[i][p][q] = right[q][i][p] and
    right'[p][i][q] = left[i][q][p].
    """
    n, m = X.algebra.dim, X.dim
    left = tuple(tuple(tuple(X.right[q][i][p] for q in range(m)) for p in range(m)) for i in range(n))
    right = tuple(tuple(tuple(X.left[i][q][p] for q in range(m)) for i in range(n)) for p in range(m))
    k = X.dual_level + 1
    return Bimodule(X.algebra, m, left, right, k, f"{X.algebra.label}^({k})")


@lru_cache(maxsize=64)
def nth_dual(A: Algebra, k: int) -> Bimodule:
    """k-fold dual of the regular bimodule (cached; bimodules are immutable)."""
    if k < 0:
        raise ValueError("dual level must be nonnegative")
    if k == 0:
        return regular_bimodule(A)
    return dual_bimodule(nth_dual(A, k - 1))


def phi_closed_form_dual(A: Algebra, k: int) -> Bimodule:
    """The k-th dual of a phi-algebra written down directly.

    odd k:  F.a = phi(a) F,   a.F = <F, a> phi
    even k: G.a = <G, phi> a, a.G = phi(a) G
    """
    if not A.is_phi_algebra:
        raise ValueError("closed forms exist only for phi-algebras")
    n, phi = A.dim, A.phi
    if k % 2:
        # e_i . f_p = <f_p, e_i> phi = delta(i,p) phi ; f_p . e_i = phi_i f_p
        left = [[[phi[q] if i == p else ZERO for q in range(n)] for p in range(n)] for i in range(n)]
        right = [[[phi[i] if q == p else ZERO for q in range(n)] for i in range(n)] for p in range(n)]
    else:
        # e_i . g_p = phi_i g_p ; g_p . e_i = <g_p, phi> e_i = phi_p e_i
        left = [[[phi[i] if q == p else ZERO for q in range(n)] for p in range(n)] for i in range(n)]
        right = [[[phi[p] if q == i else ZERO for q in range(n)] for i in range(n)] for p in range(n)]
    return Bimodule(A, n, left, right, k, f"{A.label}^({k}) closed form")


def action_span(X: Bimodule, side: Side) -> Subspace:
    """Span of ``a . x`` (left) or ``x . a`` (right) over basis pairs."""
    n, m = X.algebra.dim, X.dim
    if side == "left":
        vecs = [X.left[i][p] for i in range(n) for p in range(m)]
    elif side == "right":
        vecs = [X.right[p][i] for i in range(n) for p in range(m)]
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return Subspace.span(vecs, m)


def _check_ambient(A: Algebra, I: Subspace):
    if I.ambient_dim != A.dim:
        raise ValueError(f"subspace lives in dimension {I.ambient_dim}, algebra has dimension {A.dim}")


def is_left_ideal(A: Algebra, I: Subspace) -> bool:
    _check_ambient(A, I)
    return all(I.contains(A.multiply(a, x)) for a in A.basis() for x in I.vectors())


def is_right_ideal(A: Algebra, I: Subspace) -> bool:
    _check_ambient(A, I)
    return all(I.contains(A.multiply(x, a)) for a in A.basis() for x in I.vectors())


def modular_left_ideal_witness(A: Algebra, I: Subspace) -> Optional[Vector]:
    """A right modular unit ``e`` (``a - a e`` in I for all a) or None.

    Solves ``P(a_i - a_i e) = 0`` for e, where P is the quotient map by I
    (rows spanning the annihilator of I).  Free variables are zeroed.
    """
    _check_ambient(A, I)
    P = I.annihilator()
    if P.dim == 0:
        return tuple([ZERO] * A.dim)
    Pm = P.basis
    rows, rhs = [], []
    for a in A.basis():
        R = A.left_matrix(a)  # e -> a e
        rows.extend((Pm @ R).entries)
        rhs.extend(Pm @ a)
    return solve(Matrix.from_rows(rows, A.dim), rhs)


def is_modular_left_ideal(A: Algebra, I: Subspace) -> bool:
    return is_left_ideal(A, I) and modular_left_ideal_witness(A, I) is not None
