"""Spec files and the full verification report for one phi-algebra.

A spec file is a JSON object::

    {"dim": 3, "phi": [["1","0"], ["0","0"], ["0","0"]], "name": "zhang-3"}

with every scalar an ``[re, im]`` pair of rational strings.  The report is a
JSON object with sorted keys whose ``claims`` array holds one entry per
checked statement; the same input always gives the same bytes.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional, Union

from . import __version__
from .algebra import (
    Algebra,
    canonical_left_identity,
    idempotent_set,
    is_idempotent,
    is_minimal_idempotent,
    left_identities,
    make_phi_algebra,
    norm_check,
    phi_kernel,
    radical,
)
from .arens import bidual_tower
from .bimodule import (
    action_span,
    is_left_ideal,
    is_modular_left_ideal,
    is_right_ideal,
    nth_dual,
    regular_bimodule,
)
from .cohomology import (
    DerivationMatrix,
    cyclic_equivalence,
    derivation_space,
    even_dual_derivations_closed_form,
    h1,
    inner_witness_odd,
    make_noninner_even,
    n_weak_amenability_profile,
    phi_h1_dim_closed_form,
)
from .exactnum import (
    ONE,
    ZERO,
    GaussianRational,
    Matrix,
    Subspace,
    format_scalar,
    parse_scalar,
)
from .structure import check_isomorphism, multipliers

__all__ = [
    "SpecError",
    "ResourceCapError",
    "AlgebraSpec",
    "ClaimResult",
    "Report",
    "parse_spec",
    "parse_spec_data",
    "serialize_spec",
    "run_report",
    "DEFAULT_MAX_DIM",
]

DEFAULT_MAX_DIM = 12
PROFILE_DEPTH = 4
TOWER_DEPTH = 3
SAMPLE_SEED = 0


class SpecError(ValueError):
    """Malformed or out-of-domain spec input."""


class ResourceCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class AlgebraSpec:
    dim: int
    phi: tuple[GaussianRational, ...]
    name: str = ""
    norm_check: Optional[bool] = None

    def algebra(self) -> Algebra:
        return make_phi_algebra(self.dim, self.phi, self.name or f"phi-algebra({self.dim})")


_SPEC_KEYS = {"dim", "phi", "name", "norm_check"}


def parse_spec_data(data: Any) -> AlgebraSpec:
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    unknown = sorted(set(data) - _SPEC_KEYS)
    if unknown:
        raise SpecError(f"unknown field(s): {', '.join(unknown)}")
    if "dim" not in data or "phi" not in data:
        raise SpecError("spec needs both 'dim' and 'phi'")
    dim = data["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise SpecError(f"field 'dim': expected an integer, got {dim!r}")
    if dim < 1:
        raise SpecError("field 'dim': dimension must be at least 1")
    raw = data["phi"]
    if not isinstance(raw, list):
        raise SpecError("field 'phi': expected a list of [re, im] pairs")
    if len(raw) != dim:
        raise SpecError(f"field 'phi': has {len(raw)} entries, expected {dim}")
    phi = []
    for i, pair in enumerate(raw):
        try:
            phi.append(parse_scalar(pair))
        except (ValueError, TypeError) as exc:
            raise SpecError(f"field 'phi[{i}]': {exc}") from None
    if not any(phi):
        raise SpecError("functional must be nonzero")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise SpecError("field 'name': expected a string")
    nc = data.get("norm_check")
    if nc is not None and not isinstance(nc, bool):
        raise SpecError("field 'norm_check': expected a boolean")
    return AlgebraSpec(dim, tuple(phi), name, nc)


def parse_spec(source: Union[str, Path, bytes]) -> AlgebraSpec:
    """Read a spec from a file path, or from raw bytes of JSON text."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    else:
        text = Path(source).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_spec_data(data)


def spec_to_data(spec: AlgebraSpec) -> dict:
    data = {"dim": spec.dim, "phi": [format_scalar(p) for p in spec.phi]}
    if spec.name:
        data["name"] = spec.name
    if spec.norm_check is not None:
        data["norm_check"] = spec.norm_check
    return data


def serialize_spec(spec: AlgebraSpec) -> str:
    return json.dumps(spec_to_data(spec), sort_keys=True)


# report --------------------------------------------------------------------

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    paper_ref: str
    status: str
    details: dict = field(default_factory=dict)

    def to_data(self) -> dict:
        return {"claim_id": self.claim_id, "paper_ref": self.paper_ref,
                "status": self.status, "details": self.details}


@dataclass(frozen=True)
class Report:
    spec: AlgebraSpec
    claims: tuple[ClaimResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.claims)

    def counts(self) -> dict:
        return {s: sum(c.status == s for c in self.claims) for s in (PASS, FAIL, SKIPPED)}

    def to_data(self) -> dict:
        return {
            "tool": "phialgebra",
            "version": __version__,
            "input": spec_to_data(self.spec),
            "claims": [c.to_data() for c in self.claims],
            "summary": self.counts(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_data(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"phialgebra {__version__} report for {self.spec.name or 'unnamed'} (dim {self.spec.dim})"]
        width = max(len(c.claim_id) for c in self.claims)
        for c in self.claims:
            lines.append(f"{c.status.upper():7s} {c.claim_id:{width}s}  {c.paper_ref}")
        n = self.counts()
        lines.append(f"{n[PASS]} pass, {n[FAIL]} fail, {n[SKIPPED]} skipped")
        return "\n".join(lines) + "\n"


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _vec(v) -> list:
    return [format_scalar(x) for x in v]


def _claim_arens(A: Algebra) -> ClaimResult:
    levels = bidual_tower(A, TOWER_DEPTH)
    ok = all(r.regular and r.matches_phi_form and r.stable for r in levels)
    return ClaimResult(
        "arens.regular_tower",
        "m[]n = <m,phi>n = m<>n on every even dual; A Arens regular",
        _status(ok),
        {"depth": TOWER_DEPTH,
         "regular": [r.regular for r in levels],
         "matches_phi_form": [r.matches_phi_form for r in levels],
         "tensor_stable": [r.stable for r in levels]},
    )


def _claim_spans(A: Algebra) -> ClaimResult:
    n = A.dim
    X1, X2 = nth_dual(A, 1), nth_dual(A, 2)
    a_f = action_span(X1, "left")
    f_a = action_span(X1, "right")
    m_a = action_span(X2, "right")
    a_m = action_span(X2, "left")
    phi_line = Subspace.span([A.phi], n)
    ok = a_f == phi_line and f_a.dim == n and m_a.dim == n and a_m.dim == n
    return ClaimResult(
        "actions.spans",
        "A.A* = C phi, A*.A = A*, A**.A = A, A.A** = A**",
        _status(ok),
        {"A.A*": a_f.dim, "A*.A": f_a.dim, "A**.A": m_a.dim, "A.A**": a_m.dim,
         "A.A* equals C phi": a_f == phi_line},
    )


def _claim_profile(A: Algebra) -> ClaimResult:
    prof = n_weak_amenability_profile(A, PROFILE_DEPTH)
    expected = [(k, phi_h1_dim_closed_form(A.dim, k)) for k in range(PROFILE_DEPTH + 1)]
    return ClaimResult(
        "cohomology.weak_amenability_profile",
        "H1(A, A^(k)) = 0 for odd k; dim n(n-2) for even k",
        _status(prof == expected),
        {"profile": [list(p) for p in prof], "expected": [list(p) for p in expected]},
    )


def _claim_odd_inner(A: Algebra) -> ClaimResult:
    equal = {}
    for k in (1, 3):
        s = h1(A, nth_dual(A, k))
        equal[str(k)] = s.z1 == s.b1
    X1 = nth_dual(A, 1)
    witnesses_ok = True
    for v in derivation_space(A, X1).vectors():
        try:
            inner_witness_odd(A, DerivationMatrix.from_vector(v, X1), 1)
        except (AssertionError, ValueError):
            witnesses_ok = False
    return ClaimResult(
        "cohomology.odd_inner",
        "every D: A -> A^(2n-1) equals delta_{-D(e)}",
        _status(all(equal.values()) and witnesses_ok),
        {"z1_equals_b1": equal, "witness_reproduces_basis": witnesses_ok,
         "left_identity": _vec(canonical_left_identity(A))},
    )


def _claim_even_characterization(A: Algebra) -> ClaimResult:
    z1 = derivation_space(A, nth_dual(A, 2))
    target = even_dual_derivations_closed_form(A)
    return ClaimResult(
        "cohomology.even_derivations",
        "D: A -> A^(2n) is a derivation iff D(A) in ker phi",
        _status(z1 == target),
        {"z1_dim": z1.dim, "expected_dim": A.dim * (A.dim - 1)},
    )


def _claim_noninner(A: Algebra) -> ClaimResult:
    ref = "D(a) = <f - phi, a> b0 is not inner iff dim ker phi >= 2"
    cid = "cohomology.noninner_even"
    if A.dim < 2:
        return ClaimResult(cid, ref, SKIPPED, {"reason": "needs dim >= 2"})
    w = make_noninner_even(A)
    wr = make_noninner_even(A, regular_bimodule(A))
    expect_inner = A.dim == 2
    ker = phi_kernel(A)
    in_ker = all(ker.contains(c) for c in w.derivation.map.columns())
    ok = w.is_inner == expect_inner and wr.is_inner == expect_inner and in_ker
    return ClaimResult(cid, ref, _status(ok), {
        "f": _vec(w.f), "a0": _vec(w.a0), "b0": _vec(w.b0),
        "inner_in_second_dual": w.is_inner,
        "inner_in_regular_module": wr.is_inner,
        "range_in_ker_phi": in_ker,
    })


def _claim_cyclic(A: Algebra) -> ClaimResult:
    rep = cyclic_equivalence(A)
    return ClaimResult(
        "cyclic.amenable",
        "D: A -> A* is a derivation iff cyclic; cyclic derivations are inner",
        _status(rep.ok),
        {"all_derivations_cyclic": rep.derivations_all_cyclic,
         "cyclic_equals_inner": rep.cyclic_equals_inner},
    )


def _claim_radical(A: Algebra) -> ClaimResult:
    ref = "rad(A) = ker phi; A not semisimple"
    if A.dim < 2:
        return ClaimResult("structure.radical", ref, SKIPPED,
                           {"reason": "statement assumes dim >= 2", "radical_dim": radical(A).dim})
    rad = radical(A)
    ok = rad == phi_kernel(A)
    return ClaimResult("structure.radical", ref, _status(ok),
                       {"radical_dim": rad.dim, "semisimple": rad.dim == 0,
                        "radical_basis": [_vec(v) for v in rad.vectors()]})


def _claim_identities(A: Algebra) -> ClaimResult:
    li = left_identities(A)
    ker = phi_kernel(A)
    ok = li is not None and li.direction == ker and sum(
        (p * x for p, x in zip(A.phi, li.point)), ZERO) == ONE
    two_sided = li is not None and li.two_sided is not None
    ok = ok and two_sided == (A.dim == 1)
    return ClaimResult(
        "structure.left_identities",
        "left identities are {e : phi(e) = 1}; no identity when dim >= 2",
        _status(ok),
        {"particular": _vec(li.point) if li else None, "direction_dim": li.direction.dim if li else None,
         "two_sided_identity": two_sided},
    )


def _random_vector(rng: random.Random, n: int) -> tuple:
    return tuple(GaussianRational(rng.randint(-4, 4), rng.randint(-1, 1)) for _ in range(n))


def _claim_idempotents(A: Algebra, samples: int = 100) -> ClaimResult:
    rng = random.Random(SAMPLE_SEED)
    iset = idempotent_set(A)
    ker = phi_kernel(A).vectors()
    agree = 0
    minimal_ok = True
    positives = 0
    for s in range(samples):
        if s % 2:
            # land on phi(a) = 1 half of the time
            v = list(iset.nonzero.point)
            for b in ker:
                c = rng.randint(-3, 3)
                v = [x + c * y for x, y in zip(v, b)]
            v = tuple(v)
        else:
            v = _random_vector(rng, A.dim)
        idem = is_idempotent(A, v)
        agree += idem == iset.contains(v)
        if idem and any(v):
            positives += 1
            minimal_ok = minimal_ok and is_minimal_idempotent(A, v)
    ok = agree == samples and minimal_ok and is_idempotent(A, [ZERO] * A.dim)
    return ClaimResult(
        "structure.idempotents",
        "idempotents are {0} u {a : phi(a) = 1}, all nonzero ones minimal",
        _status(ok),
        {"samples": samples, "agreements": agree, "nonzero_idempotents_seen": positives,
         "all_minimal": minimal_ok},
    )


def _coordinate_subspaces(n: int, rng: random.Random, limit: int = 64):
    if 2 ** n <= limit:
        subsets = [c for r in range(n + 1) for c in itertools.combinations(range(n), r)]
    else:
        subsets = sorted({tuple(sorted(rng.sample(range(n), rng.randint(0, n)))) for _ in range(limit)})
    for idx in subsets:
        yield Subspace.span([tuple(ONE if t == i else ZERO for t in range(n)) for i in idx], n)


def _claim_ideals(A: Algebra) -> ClaimResult:
    rng = random.Random(SAMPLE_SEED)
    n = A.dim
    ker = phi_kernel(A)
    full = Subspace.full(n)
    cases = list(_coordinate_subspaces(n, rng))
    cases.append(ker)
    for _ in range(8):
        cases.append(Subspace.span([_random_vector(rng, n) for _ in range(rng.randint(1, n))], n))
    mismatches = []
    for I in cases:
        left = is_left_ideal(A, I)
        right = is_right_ideal(A, I)
        modular = is_modular_left_ideal(A, I)
        exp_right = I == full or I.is_subspace_of(ker)
        exp_modular = I == full or I == ker
        if not (left and right == exp_right and modular == exp_modular):
            mismatches.append([_vec(v) for v in I.vectors()])
    return ClaimResult(
        "structure.ideals",
        "every subspace is a left ideal; right ideal iff I = A or I in ker phi; "
        "modular left ideal iff I = A or I = ker phi",
        _status(not mismatches),
        {"subspaces_checked": len(cases), "mismatches": mismatches},
    )


def _claim_multipliers(A: Algebra) -> ClaimResult:
    n = A.dim
    lm, rm = multipliers(A, "left"), multipliers(A, "right")
    ident = Subspace.span([Matrix.identity(n).vectorize()], n * n)
    ok = lm.basis == ident and rm.dim == n * n
    return ClaimResult(
        "structure.multipliers",
        "LM(A) = C I, RM(A) = B(A)",
        _status(ok),
        {"left_dim": lm.dim, "right_dim": rm.dim},
    )


def _claim_scaling_isomorphism(A: Algebra) -> ClaimResult:
    lam = GaussianRational(2)
    B = make_phi_algebra(A.dim, [p / lam for p in A.phi])
    T = Matrix.identity(A.dim).scale(lam)
    forward = check_isomorphism(T, A, B)
    backward = check_isomorphism(Matrix.identity(A.dim).scale(ONE / lam), B, A)
    return ClaimResult(
        "structure.isomorphism_scaling",
        "phi = lam psi: a -> lam a maps phiA onto psiA",
        _status(forward and backward),
        {"lambda": format_scalar(lam), "forward": forward, "inverse": backward},
    )


def _claim_swap_isomorphism(A: Algebra) -> ClaimResult:
    cid = "structure.isomorphism_swap"
    ref = "isomorphic phi-algebras need not have proportional functionals"
    n = A.dim
    if n < 2:
        return ClaimResult(cid, ref, SKIPPED, {"reason": "needs dim >= 2"})
    perm = [1, 0] + list(range(2, n))
    T = Matrix.from_rows([[ONE if perm[j] == i else ZERO for j in range(n)] for i in range(n)])
    psi = tuple(A.phi[perm[i]] for i in range(n))
    B = make_phi_algebra(n, psi)
    iso = check_isomorphism(T, A, B)
    independent = Subspace.span([A.phi, psi], n).dim == 2
    identity_iso = check_isomorphism(Matrix.identity(n), A, B)
    ok = iso and (identity_iso == (psi == A.phi))
    return ClaimResult(cid, ref, _status(ok), {
        "psi": _vec(psi), "swap_is_isomorphism": iso, "phi_psi_independent": independent,
        "identity_is_isomorphism": identity_iso,
    })


def _claim_norm(spec: AlgebraSpec, A: Algebra) -> ClaimResult:
    ref = "||phi|| <= 1 gives ||ab||_1 <= ||a||_1 ||b||_1"
    if not spec.norm_check:
        return ClaimResult("structure.norm", ref, SKIPPED, {"reason": "norm_check not requested"})
    rep = norm_check(A)
    return ClaimResult("structure.norm", ref, _status(rep.admissible), {
        "phi_sup_squared": format_scalar(GaussianRational(rep.phi_sup_squared))[0],
        "admissible": rep.admissible,
    })


def run_report(spec: AlgebraSpec, max_dim: int = DEFAULT_MAX_DIM) -> Report:
    if spec.dim > max_dim:
        raise ResourceCapError(f"dimension {spec.dim} exceeds the configured maximum {max_dim}")
    A = spec.algebra()
    sections: list[Callable[[], ClaimResult]] = [
        lambda: _claim_arens(A),
        lambda: _claim_spans(A),
        lambda: _claim_profile(A),
        lambda: _claim_odd_inner(A),
        lambda: _claim_even_characterization(A),
        lambda: _claim_noninner(A),
        lambda: _claim_cyclic(A),
        lambda: _claim_radical(A),
        lambda: _claim_identities(A),
        lambda: _claim_idempotents(A),
        lambda: _claim_ideals(A),
        lambda: _claim_multipliers(A),
        lambda: _claim_scaling_isomorphism(A),
        lambda: _claim_swap_isomorphism(A),
        lambda: _claim_norm(spec, A),
    ]
    return Report(spec, tuple(section() for section in sections))
