"""Command-line front-end.

Usage::

    lcfhom homology --input rp2.json --ring z
    lcfhom compare --input d8.json --atom-order random:7
    lcfhom euler --input d8.json
    lcfhom free-objects --input d8.json --table
    lcfhom validate --input tampered.json

Exit codes: 0 ok, 1 validation failure, 2 comparison mismatch, 3 input error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import complexes
from .analysis import free_bound_check, free_objects, size_report
from .builders import (DEFAULT_ELEMENT_CAP, SimplicialComplex, face_poset,
                       group_from_generators, quillen_poset)
from .errors import (CycleDetected, GradingViolation, HasMinimum, InputError, InvalidFamily,
                     LcfError, NotAtomModular, NotDownClosed)
from .family import LocalCoveringFamily, build_atom_modular_lcf, require_valid, validate_lcf
from .homology import CoefficientRing, homology, quillen_euler
from .poset import GradedPoset, LocalKind, build_poset, classify_local_type, is_atom_modular

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2, 3

_VALIDATION_ERRORS = (GradingViolation, HasMinimum, CycleDetected, NotDownClosed,
                      NotAtomModular, InvalidFamily)


@dataclass
class RunConfig:
    command: str
    input: str
    ring: CoefficientRing
    atom_order: str = "default"
    reduced: bool = False
    output: str | None = None
    table: bool = False
    element_cap: int = DEFAULT_ELEMENT_CAP


@dataclass
class Loaded:
    kind: str
    poset: GradedPoset
    family: LocalCoveringFamily | None
    family_from_file: bool = False
    group: object = None
    prime: int | None = None


def _atom_order(P: GradedPoset, choice: str) -> list[int] | None:
    atoms = list(P.atoms)
    if choice == "default":
        return None
    if choice.startswith("random:"):
        try:
            seed = int(choice.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad seed in {choice!r}") from None
        random.Random(seed).shuffle(atoms)
        return atoms
    try:
        perm = [int(x) for x in choice.split(",")]
    except ValueError:
        raise InputError(f"bad atom order {choice!r}") from None
    if sorted(perm) != list(range(len(atoms))):
        raise InputError(f"atom order must permute 0..{len(atoms) - 1}")
    return [atoms[i] for i in perm]


def load_input(cfg: RunConfig) -> Loaded:
    try:
        with open(cfg.input) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {cfg.input}: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    kind = data.get("kind")
    try:
        if kind == "poset":
            P = build_poset(data["dims"], data.get("covers", []), data.get("labels"))
            if "family" in data:
                return Loaded(kind, P, LocalCoveringFamily.from_json(P, data["family"]), True)
            return Loaded(kind, P, None)
        if kind == "complex":
            D = SimplicialComplex.from_facets(data["vertices"], data.get("facets", []))
            P, K = face_poset(D)
            return Loaded(kind, P, K)
        if kind == "group":
            G = group_from_generators(int(data["degree"]), data["generators"], cfg.element_cap)
            prime = int(data["prime"])
            P, K = quillen_poset(G, prime)
            return Loaded(kind, P, K, group=G, prime=prime)
    except KeyError as exc:
        raise InputError(f"missing field {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, LcfError):
            raise
        raise InputError(str(exc)) from None
    raise InputError(f"unknown input kind {kind!r}; expected poset, complex or group")


def family_for(cfg: RunConfig, L: Loaded) -> LocalCoveringFamily:
    """The covering family to use: from file, from the atom order, or canonical."""
    if L.family_from_file:
        return L.family
    order = _atom_order(L.poset, cfg.atom_order)
    if order is None and L.family is not None:
        return L.family
    if L.kind == "group" and order is not None:
        return quillen_poset(L.group, L.prime, order)[1]
    return build_atom_modular_lcf(L.poset, order)


def _sizes(C) -> dict:
    return {str(n): r for n, r in sorted(C.ranks.items())}


def cmd_homology(cfg: RunConfig) -> tuple[dict, int]:
    L = load_input(cfg)
    K = family_for(cfg, L)
    require_valid(L.poset, K)
    C = complexes.reduced_complex(L.poset, K, cfg.reduced)
    H = homology(C, cfg.ring)
    oracle_sizes = size_report(L.poset, K).oracle
    return {
        "command": "homology",
        "ring": str(cfg.ring),
        "reduced": cfg.reduced,
        "homology": H.to_json(),
        "complex_sizes": _sizes(C),
        "oracle_sizes": {str(k): v for k, v in oracle_sizes.items()},
    }, EXIT_OK


def cmd_compare(cfg: RunConfig) -> tuple[dict, int]:
    L = load_input(cfg)
    K = family_for(cfg, L)
    require_valid(L.poset, K)
    C = complexes.reduced_complex(L.poset, K, cfg.reduced)
    O = complexes.oracle_complex(L.poset, cfg.reduced)
    H_small, H_oracle = homology(C, cfg.ring), homology(O, cfg.ring)
    equal = H_small == H_oracle
    return {
        "command": "compare",
        "ring": str(cfg.ring),
        "reduced": cfg.reduced,
        "homology": H_small.to_json(),
        "oracle_homology": H_oracle.to_json(),
        "verdict": "equal" if equal else "unequal",
        "complex_sizes": _sizes(C),
        "oracle_sizes": _sizes(O),
        "size_report": size_report(L.poset, K).to_json(),
    }, EXIT_OK if equal else EXIT_MISMATCH


def cmd_euler(cfg: RunConfig) -> tuple[dict, int]:
    L = load_input(cfg)
    if L.kind != "group":
        raise InputError("euler needs a group input")
    formula, oracle = quillen_euler(L.group, L.prime)
    return {
        "command": "euler",
        "prime": L.prime,
        "group_order": L.group.order,
        "formula": formula,
        "oracle": oracle,
        "agree": formula == oracle,
    }, EXIT_OK if formula == oracle else EXIT_MISMATCH


def cmd_free_objects(cfg: RunConfig) -> tuple[dict, int]:
    L = load_input(cfg)
    P = L.poset
    local = classify_local_type(P, p_hint=L.prime)
    if local.kind is LocalKind.P_QUILLEN:
        K = family_for(cfg, L)
        report = free_bound_check(P, local.prime, cfg.ring, K)
    else:
        _, report = free_objects(P)
        report.applicable = False
    out = {"command": "free-objects", "local_type": str(local), "ring": str(cfg.ring)}
    out.update(report.to_json())
    failed = report.top_homology_zero and report.bound_holds is False
    return out, EXIT_INVALID if failed else EXIT_OK


def cmd_validate(cfg: RunConfig) -> tuple[dict, int]:
    try:
        L = load_input(cfg)
    except _VALIDATION_ERRORS as exc:
        return {"command": "validate", "ok": False,
                "violations": [{"error": type(exc).__name__, "message": str(exc)}]}, EXIT_INVALID
    P = L.poset
    violations = []
    am = is_atom_modular(P)
    for p, a, q, why in am.violations:
        violations.append({"check": "atom-modular", "element": P.labels[p],
                           "atom": P.labels[a], "other": P.labels[q], "reason": why})
    try:
        K = family_for(cfg, L)
    except NotAtomModular as exc:
        violations.append({"check": "family", "error": "NotAtomModular", "message": str(exc)})
    else:
        for cond, wit in validate_lcf(P, K).violations:
            violations.append({"check": "family", "condition": cond, "witnesses": list(map(str, wit))})
    return {
        "command": "validate",
        "n_elements": len(P),
        "dimension": P.dimension,
        "local_type": str(classify_local_type(P, p_hint=L.prime)),
        "ok": not violations,
        "violations": violations,
    }, EXIT_OK if not violations else EXIT_INVALID


COMMANDS = {
    "homology": cmd_homology,
    "compare": cmd_compare,
    "euler": cmd_euler,
    "free-objects": cmd_free_objects,
    "validate": cmd_validate,
}


def render_table(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict) and value and all(isinstance(v, dict) for v in value.values()):
            cols = sorted({c for v in value.values() for c in v})
            lines.append(f"{key}:")
            lines.append("  " + "\t".join(["degree"] + cols))
            for k, v in value.items():
                lines.append("  " + "\t".join([str(k)] + [str(v.get(c, "")) for c in cols]))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for v in value:
                lines.append("  " + ", ".join(f"{a}={b}" for a, b in v.items()))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcfhom", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="poset, complex or group JSON file")
        p.add_argument("--ring", default="z", help="z | q | fp:<p> | zmod:<m>")
        p.add_argument("--atom-order", default="default",
                       help='"default", "random:<seed>" or a comma-separated permutation')
        p.add_argument("--reduced", action="store_true", help="augment with degree -1")
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--table", action="store_true", help="human-readable output")
        p.add_argument("--element-cap", type=int, default=DEFAULT_ELEMENT_CAP)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.command, args.input, CoefficientRing.parse(args.ring),
                        args.atom_order, args.reduced, args.output, args.table, args.element_cap)
        report, code = COMMANDS[args.command](cfg)
    except _VALIDATION_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except LcfError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = render_table(report) if cfg.table else json.dumps(report, indent=2, sort_keys=True) + "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
