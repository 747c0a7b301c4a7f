"""Command line front end.

    phialgebra report --input zhang3.json
    phialgebra h1 --dual 2 --input zhang3.json --format text
    phialgebra derivations --module dual:1 --input zhang3.json
    phialgebra arens --depth 3 --input zhang3.json
    phialgebra radical --input zhang3.json
    phialgebra multipliers --side left --input zhang3.json
    phialgebra ideals --subspace sub.json --input zhang3.json

Exit codes: 0 success (all claims pass), 1 some claim failed, 2 bad input,
3 dimension above --max-dim.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .algebra import phi_kernel, radical
from .arens import MAX_TOWER_DEPTH, bidual_tower
from .bimodule import (
    is_left_ideal,
    is_right_ideal,
    modular_left_ideal_witness,
    nth_dual,
    regular_bimodule,
)
from .cohomology import MAX_PROFILE_LEVEL, derivation_space, h1, phi_h1_dim_closed_form
from .exactnum import Matrix, Subspace, format_scalar, parse_scalar
from .report import (
    DEFAULT_MAX_DIM,
    ResourceCapError,
    SpecError,
    parse_spec,
    run_report,
)
from .structure import multipliers

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _vec(v) -> list:
    return [format_scalar(x) for x in v]


def _matrix(M: Matrix) -> list:
    return [_vec(r) for r in M.entries]


def _dump(data, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    return _as_text(data) + "\n"


def _fmt_scalar_pair(x) -> str:
    re, im = x
    if im == "0":
        return re
    return f"{re}{'' if im.startswith('-') else '+'}{im}i"


def _as_text(data, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for k in sorted(data):
            v = data[k]
            if isinstance(v, (dict, list)) and v and not _is_scalar_pair(v) and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_as_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(lines)
    if isinstance(data, list):
        return "\n".join(f"{pad}- {_inline(v)}" if not isinstance(v, dict) else _as_text(v, indent + 1)
                         for v in data)
    return f"{pad}{_inline(data)}"


def _is_scalar_pair(v) -> bool:
    return isinstance(v, list) and len(v) == 2 and all(isinstance(x, str) for x in v)


def _is_flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (list, dict)) for x in v)


def _inline(v) -> str:
    if _is_scalar_pair(v):
        return _fmt_scalar_pair(v)
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


def _module(A, spec_text: str):
    if spec_text == "regular":
        return regular_bimodule(A)
    if spec_text.startswith("dual:"):
        try:
            k = int(spec_text[5:])
        except ValueError:
            raise SpecError(f"bad module {spec_text!r}; use regular or dual:K") from None
        if not 0 <= k <= MAX_PROFILE_LEVEL:
            raise SpecError(f"dual level must be between 0 and {MAX_PROFILE_LEVEL}")
        return nth_dual(A, k)
    raise SpecError(f"bad module {spec_text!r}; use regular or dual:K")


def _load_subspace(path: str, n: int) -> Subspace:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read subspace file: {exc}") from None
    if isinstance(data, dict):
        data = data.get("basis")
    if not isinstance(data, list):
        raise SpecError("subspace file must be a list of vectors or an object with 'basis'")
    vecs = []
    for r, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            raise SpecError(f"subspace vector {r} must have {n} entries")
        try:
            vecs.append([parse_scalar(x) for x in row])
        except (ValueError, TypeError) as exc:
            raise SpecError(f"subspace vector {r}: {exc}") from None
    return Subspace.span(vecs, n)


def cmd_report(A, spec, args) -> tuple[dict | str, int]:
    rep = run_report(spec, args.max_dim)
    out = rep.to_json() if args.format == "json" else rep.to_text()
    return out, EXIT_OK if rep.ok else EXIT_FAIL


def cmd_h1(A, spec, args):
    if not 0 <= args.dual <= MAX_PROFILE_LEVEL:
        raise SpecError(f"--dual must be between 0 and {MAX_PROFILE_LEVEL}")
    s = h1(A, nth_dual(A, args.dual))
    return {
        "dual": args.dual,
        "z1_dim": s.z1.dim,
        "b1_dim": s.b1.dim,
        "h1_dim": s.h1_dim,
        "inner": s.inner,
        "closed_form_h1_dim": phi_h1_dim_closed_form(A.dim, args.dual),
    }, EXIT_OK


def cmd_derivations(A, spec, args):
    X = _module(A, args.module)
    z1 = derivation_space(A, X)
    basis = [_matrix(Matrix.unvectorize(v, X.dim, A.dim)) for v in z1.vectors()]
    return {"module": args.module, "dim": z1.dim, "basis": basis}, EXIT_OK


def cmd_arens(A, spec, args):
    if not 1 <= args.depth <= MAX_TOWER_DEPTH:
        raise SpecError(f"--depth must be between 1 and {MAX_TOWER_DEPTH}")
    levels = bidual_tower(A, args.depth)
    return {
        "depth": args.depth,
        "levels": [
            {"level": 2 * i, "regular": r.regular, "matches_phi_form": r.matches_phi_form,
             "tensor_stable": r.stable}
            for i, r in enumerate(levels)
        ],
    }, EXIT_OK


def cmd_radical(A, spec, args):
    rad = radical(A)
    return {
        "dim": rad.dim,
        "basis": [_vec(v) for v in rad.vectors()],
        "equals_ker_phi": rad == phi_kernel(A),
        "semisimple": rad.dim == 0,
    }, EXIT_OK


def cmd_multipliers(A, spec, args):
    ms = multipliers(A, args.side)
    return {"side": args.side, "dim": ms.dim, "basis": [_matrix(M) for M in ms.maps()]}, EXIT_OK


def cmd_ideals(A, spec, args):
    I = _load_subspace(args.subspace, A.dim)
    w = modular_left_ideal_witness(A, I)
    left = is_left_ideal(A, I)
    return {
        "dim": I.dim,
        "basis": [_vec(v) for v in I.vectors()],
        "left_ideal": left,
        "right_ideal": is_right_ideal(A, I),
        "modular_left_ideal": left and w is not None,
        "modular_unit": _vec(w) if (left and w is not None) else None,
    }, EXIT_OK


COMMANDS = {
    "report": cmd_report,
    "h1": cmd_h1,
    "derivations": cmd_derivations,
    "arens": cmd_arens,
    "radical": cmd_radical,
    "multipliers": cmd_multipliers,
    "ideals": cmd_ideals,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default=argparse.SUPPRESS,
                        help="algebra spec file (JSON); '-' reads stdin")
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--max-dim", type=int, default=argparse.SUPPRESS,
                        help=f"refuse inputs above this dimension (default {DEFAULT_MAX_DIM})")

    parser = argparse.ArgumentParser(prog="phialgebra", parents=[common],
                                     description="Exact checks for phi-algebras a.b = phi(a) b.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("report", parents=[common], help="run every check and emit a claim report")
    p = sub.add_parser("h1", parents=[common], help="first cohomology with values in the K-th dual")
    p.add_argument("--dual", type=int, required=True, metavar="K")
    p = sub.add_parser("derivations", parents=[common], help="basis of the derivation space")
    p.add_argument("--module", default="regular", help="regular or dual:K")
    p = sub.add_parser("arens", parents=[common], help="Arens products along the bidual tower")
    p.add_argument("--depth", type=int, default=1)
    sub.add_parser("radical", parents=[common], help="Jacobson radical via the trace form")
    p = sub.add_parser("multipliers", parents=[common], help="left or right multiplier space")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p = sub.add_parser("ideals", parents=[common], help="classify a subspace as an ideal")
    p.add_argument("--subspace", required=True, help="JSON list of basis vectors")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.format = getattr(args, "format", "json")
    args.max_dim = getattr(args, "max_dim", DEFAULT_MAX_DIM)
    source = getattr(args, "input", None)
    if source is None:
        print("error: --input is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        spec = parse_spec(sys.stdin.buffer.read() if source == "-" else source)
    except OSError as exc:
        print(f"error: cannot read {source}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if spec.dim > args.max_dim:
        print(f"error: dimension {spec.dim} exceeds --max-dim {args.max_dim}", file=sys.stderr)
        return EXIT_CAP
    A = spec.algebra()
    try:
        out, code = COMMANDS[args.command](A, spec, args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if not isinstance(out, str):
        out = _dump(out, args.format)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
