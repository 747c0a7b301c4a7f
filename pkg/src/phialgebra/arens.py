"""The two Arens products on the bidual, built step by step from pairings.

Coordinates: A in the basis e_i, A* in the dual basis f_p, and A** in the
basis dual to f_p, which is the canonical image of e_i.  Each step below is
the defining pairing identity evaluated on basis vectors; the reflexive
identification A** = A only enters when the final tensors are read off.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Algebra, Tensor3, Vector, pair, phi_form_tensor

__all__ = [
    "ArensResult",
    "f_dot_a",
    "a_dot_f",
    "n_dot_f",
    "f_dot_n",
    "first_arens",
    "second_arens",
    "arens_products",
    "bidual_tower",
    "bidual_tower_regularity",
]

MAX_TOWER_DEPTH = 4


def f_dot_a(A: Algebra, f, a) -> Vector:
    """<f.a, b> = <f, ab>"""
    return tuple(pair(f, A.multiply(a, e)) for e in A.basis())


def a_dot_f(A: Algebra, a, f) -> Vector:
    """<a.f, b> = <f, ba>"""
    return tuple(pair(f, A.multiply(e, a)) for e in A.basis())


def n_dot_f(A: Algebra, n, f) -> Vector:
    """<n.f, a> = <n, f.a> for n in A**."""
    return tuple(pair(f_dot_a(A, f, e), n) for e in A.basis())


def f_dot_n(A: Algebra, f, n) -> Vector:
    """<f.n, a> = <n, a.f> for n in A**."""
    return tuple(pair(a_dot_f(A, e, f), n) for e in A.basis())


def first_arens(A: Algebra, m, n) -> Vector:
    """<m [] n, f> = <m, n.f>"""
    return tuple(pair(n_dot_f(A, n, f), m) for f in A.basis())


def second_arens(A: Algebra, m, n) -> Vector:
    """<m <> n, f> = <n, f.m>"""
    return tuple(pair(f_dot_n(A, f, m), n) for f in A.basis())


@dataclass(frozen=True)
class ArensResult:
    square: Tensor3
    lozenge: Tensor3
    regular: bool
    matches_phi_form: Optional[bool] = None  # None for algebras without phi
    stable: bool = True  # square equals the tensor of the level-0 algebra


def _step_tables(A: Algebra) -> dict[str, tuple]:
    """Each step of the construction tabulated on basis elements.

    Later steps read earlier tables instead of recomputing them, which keeps
    the whole construction at O(n^4) pairings.
    """
    basis = A.basis()  # e_i, and also f_p and the canonical image of e_s
    n = A.dim
    fa = tuple(tuple(tuple(pair(f, A.mult[i][q]) for q in range(n)) for i in range(n)) for f in basis)
    af = tuple(tuple(tuple(pair(f, A.mult[q][i]) for q in range(n)) for f in basis) for i in range(n))
    nf = tuple(tuple(tuple(pair(fa[p][q], m) for q in range(n)) for p in range(n)) for m in basis)
    fn = tuple(tuple(tuple(pair(af[q][p], m) for q in range(n)) for m in basis) for p in range(n))
    square = tuple(tuple(tuple(pair(nf[s][t], m) for t in range(n)) for s in range(n)) for m in basis)
    lozenge = tuple(tuple(tuple(pair(fn[t][r], m) for t in range(n)) for m in basis) for r in range(n))
    return {"f.a": fa, "a.f": af, "n.f": nf, "f.n": fn, "square": square, "lozenge": lozenge}


def arens_products(A: Algebra, phi=None) -> ArensResult:
    """Structure tensors of (A**, first Arens) and (A**, second Arens).

    ``phi`` overrides the functional used for the phi-form comparison; by
    default the algebra's own.
    """
    steps = _step_tables(A)
    square, lozenge = steps["square"], steps["lozenge"]
    phi = A.phi if phi is None else phi
    matches = None
    if phi is not None:
        target = phi_form_tensor(phi)
        matches = square == target and lozenge == target
    return ArensResult(square, lozenge, square == lozenge, matches, square == A.mult)


def bidual_tower(A: Algebra, depth: int) -> list[ArensResult]:
    """Arens products of A, A**, A****, ... ; one result per level."""
    if not 1 <= depth <= MAX_TOWER_DEPTH:
        raise ValueError(f"tower depth must be between 1 and {MAX_TOWER_DEPTH}")
    results = []
    B = A
    for level in range(depth):
        r = arens_products(B, A.phi)
        if B is not A:
            r = ArensResult(r.square, r.lozenge, r.regular, r.matches_phi_form, r.square == A.mult)
        results.append(r)
        # bidual carries the first Arens product; constructor re-checks associativity
        B = Algebra(B.dim, r.square, None, f"{A.label}^({2 * (level + 1)})")
    return results


def bidual_tower_regularity(A: Algebra, depth: int) -> list[bool]:
    return [r.regular for r in bidual_tower(A, depth)]
