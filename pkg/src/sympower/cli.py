"""Command-line interface.

Targets are ``fermat:<n>``, ``klein``, ``star3`` or a path to an ideal file::

    field: GF(7)
    # one generator per line
    x*(y^3 - z^3)
    y*(z^3 - x^3)
    z*(x^3 - y^3)

Exit codes: 0 success, 3 criterion/oracle disagreement, 4 characteristic
refusal, 5 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from pathlib import Path

from . import __version__
from .configs import (ConfigurationError, PointConfiguration, builtin, incidence, pair_count_identity,
                      product_of_lines)
from .criterion import (CHAR3_NOTE, CharacteristicError, DecompositionError, oracle_check, prop6_check,
                        thm_main_check, witness_check)
from .fields import FieldError, is_prime, make_field
from .groebner import Ideal
from .poly import PolyRing
from .resolve import ResolutionError, check_last_map_equivalence, resolve_power
from .syzygy import HilbertBurchError, hilbert_burch

EXIT_OK = 0
EXIT_DISAGREE = 3
EXIT_CHAR = 4
EXIT_INPUT = 5

REPORT_SCHEMA = {
    "type": "object",
    "required": ["target", "field", "m", "r", "results", "timings_ms"],
    "properties": {
        "target": {"type": "string"},
        "field": {"type": "string"},
        "m": {"type": "integer"},
        "r": {"type": "integer"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["method", "contained"],
                "properties": {
                    "method": {"type": "string"},
                    "contained": {"type": ["boolean", "null"]},
                    "witness": {"type": "string"},
                    "certificate": {"type": "array", "items": {"type": "string"}},
                    "note": {"type": "string"},
                },
            },
        },
        "betti": {"type": "object"},
        "timings_ms": {"type": "object", "additionalProperties": {"type": "number"}},
        "notes": {"type": "array", "items": {"type": "string"}},
        "engine_version": {"type": "string"},
    },
}


class InputError(ValueError):
    pass


def _default_field(target: str) -> str:
    if target == "star3":
        return "Q"
    if target == "klein":
        return "GF(11)"
    if target.startswith("fermat:"):
        try:
            n = int(target.split(":", 1)[1])
        except ValueError as exc:
            raise InputError(f"bad Fermat target {target!r}") from exc
        p = n + 1
        while not (is_prime(p) and p % n == 1 and p > 3):
            p += 1
        return f"GF({p})"
    raise InputError(f"no default field for {target!r}")


def read_ideal_file(path: str | Path) -> tuple[str, Ideal]:
    lines = Path(path).read_text().splitlines()
    spec = None
    gens = []
    ring = None
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        if spec is None:
            if not text.lower().startswith("field:"):
                raise InputError(f"{path}:{lineno}: expected 'field: <spec>' header")
            spec = text.split(":", 1)[1].strip()
            ring = PolyRing(make_field(spec))
            continue
        try:
            gens.append(ring.parse(text))
        except (ValueError, FieldError) as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from exc
    if spec is None or not gens:
        raise InputError(f"{path}: needs a field header and at least one generator")
    return spec, Ideal(gens, ring)


def load_target(target: str, field: str | None) -> tuple[str, Ideal, PointConfiguration | None]:
    """(field string, ideal, configuration or None)."""
    if target in ("star3", "klein") or target.startswith("fermat:"):
        spec = field or _default_field(target)
        cfg = builtin(target, spec)
        return str(cfg.field), cfg.ideal, cfg
    path = Path(target)
    if not path.exists():
        raise InputError(f"unknown target {target!r} (not a builtin and no such file)")
    spec, ideal = read_ideal_file(path)
    if field is not None and make_field(field) != ideal.ring.field:
        raise InputError("--field disagrees with the field declared in the file")
    return str(ideal.ring.field), ideal, None


def _emit(report: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


# ----------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    field, ideal, _ = load_target(args.target, args.field)
    methods = {"both": ["criterion", "oracle"]}.get(args.method, [args.method])
    if "criterion" in methods or "prop6" in methods:
        if (args.m, args.r) != (3, 2):
            raise InputError("the Y^T criterion and prop6 apply only to (m, r) = (3, 2)")
    report = {"target": args.target, "field": field, "m": args.m, "r": args.r, "results": [],
              "timings_ms": {}, "notes": [], "engine_version": __version__}
    lines = [f"target {args.target} over {field}, (m, r) = ({args.m}, {args.r})"]
    code = EXIT_OK
    verdicts = {}
    for method in methods:
        t0 = time.perf_counter()
        try:
            if method == "criterion":
                v = thm_main_check(ideal)
                entry = {"method": "theorem-main", "contained": v.contained}
                if v.certificate is not None:
                    entry["certificate"] = [str(c) for c in v.certificate]
                if v.characteristic_note:
                    entry["note"] = v.characteristic_note
                report["betti"] = v.betti
                verdicts[method] = v.contained
            elif method == "oracle":
                v = oracle_check(ideal, args.m, args.r)
                entry = {"method": "oracle", "contained": v.contained}
                if v.witness is not None:
                    entry["witness"] = str(v.witness)
                if v.characteristic_note:
                    entry["note"] = v.characteristic_note
                verdicts[method] = v.contained
            else:
                rep = prop6_check(ideal)
                decided = rep.condition1 and rep.condition2
                entry = {"method": "prop6", "contained": False if decided else None,
                         "note": (f"condition1={rep.condition1} condition2={rep.condition2} "
                                  f"nine_independent={rep.nine_independent} "
                                  f"decomposition={rep.decomposition} dims={list(rep.decomposition_dims)}")}
                if not decided:
                    entry["note"] += " (inconclusive)"
        except CharacteristicError as exc:
            report["notes"].append(f"{method} refused: {exc}")
            lines.append(f"  {method}: refused ({exc})")
            if exc.characteristic == 3:
                report["notes"].append(CHAR3_NOTE)
            code = max(code, EXIT_CHAR)
            continue
        report["timings_ms"][method] = round((time.perf_counter() - t0) * 1000, 3)
        report["results"].append(entry)
        word = {True: "CONTAINED", False: "NOT contained", None: "undecided"}[entry["contained"]]
        lines.append(f"  {entry['method']}: {word}" + (f"  [{entry['note']}]" if "note" in entry else ""))
        if "witness" in entry:
            lines.append(f"    witness (degree {v.witness.degree()}): {entry['witness']}")
    if len(verdicts) == 2:
        agree = verdicts["criterion"] == verdicts["oracle"]
        lines.append("  methods agree" if agree else "  DISAGREEMENT between criterion and oracle")
        if not agree:
            report["notes"].append("criterion and oracle disagree")
            code = EXIT_DISAGREE
    _emit(report, args.json, lines)
    return code


def cmd_resolve(args) -> int:
    field, ideal, _ = load_target(args.target, args.field)
    res = resolve_power(ideal, args.power)
    table = res.shape.betti_table()
    report = {"target": args.target, "field": field, "power": args.power,
              "ranks": res.shape.ranks,
              "twists": {str(i): {str(a): n for a, n in t.items()} for i, t in table.items()}}
    lines = [f"minimal resolution of I^{args.power} for {args.target} over {field}",
             f"  ranks: {', '.join(map(str, res.shape.ranks))}"]
    for i, t in table.items():
        lines.append(f"  F{i}: " + " + ".join(f"R({a})^{n}" for a, n in t.items()))
    if args.power == 3:
        ok = check_last_map_equivalence(res.hb, res)
        report["last_map_matches_Y"] = ok
        lines.append(f"  constructed Y matches the computed last map: {ok}")
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_syzygy(args) -> int:
    field, ideal, _ = load_target(args.target, args.field)
    hb = hilbert_burch(ideal)
    report = {"target": args.target, "field": field, "d": hb.d, "d0": hb.d0, "d1": hb.d1,
              "P": [str(p) for p in hb.P], "Q": [str(q) for q in hb.Q]}
    lines = [f"Hilbert-Burch columns for {args.target} over {field}",
             f"  generator degree d = {hb.d}; column degrees {hb.d0} and {hb.d1}"]
    lines += [f"  P{i + 1} = {p}" for i, p in enumerate(hb.P)]
    lines += [f"  Q{i + 1} = {q}" for i, q in enumerate(hb.Q)]
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_points(args) -> int:
    field, ideal, cfg = load_target(args.target, args.field)
    if cfg is None:
        raise InputError("points are only available for builtin configurations")
    inc = incidence(cfg)
    hist = dict(sorted(Counter(inc.values()).items()))
    pairs = pair_count_identity(cfg)
    F = cfg.field
    report = {"target": args.target, "field": field, "points": len(cfg.points), "lines": len(cfg.lines),
              "incidence": {str(k): v for k, v in hist.items()},
              "pair_count": list(pairs),
              "coordinates": [[F.raw_str(a) for a in p] for p in cfg.points]}
    lines = [f"{args.target} over {field}: {len(cfg.points)} points, {len(cfg.lines)} lines",
             "  lines through a point: " + ", ".join(f"{v} points on {k}" for k, v in hist.items()),
             f"  pair count: {pairs[0]} (C(#lines, 2) = {pairs[1]})"]
    if args.list:
        lines += ["  (" + " : ".join(F.raw_str(a) for a in p) + ")" for p in cfg.points]
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_witness(args) -> int:
    field, ideal, cfg = load_target(args.target, args.field)
    if cfg is None:
        raise InputError("witnesses are only available for builtin configurations")
    cands = [("all configuration lines", product_of_lines(cfg))]
    if "witness" in cfg.extra and cfg.name.startswith("fermat"):
        cands.append(("lines other than the coordinate axes", cfg.extra["witness"]))
    report = {"target": args.target, "field": field, "m": args.m, "r": args.r, "witnesses": []}
    lines = [f"witness candidates for {args.target} over {field}, (m, r) = ({args.m}, {args.r})"]
    for label, F in cands:
        sym, ordinary = witness_check(F, ideal, args.m, args.r)
        report["witnesses"].append({"label": label, "degree": F.degree(), "in_symbolic": sym,
                                    "in_ordinary": ordinary})
        lines.append(f"  {label} (degree {F.degree()}): in I^({args.m}) = {sym}, in I^{args.r} = {ordinary}")
    _emit(report, args.json, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sympower", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("target", help="fermat:<n>, klein, star3, or an ideal file")
        p.add_argument("--field", help="Q, GF(p) or GF(p)[c] (builtins only)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check", help="decide I^(m) ⊆ I^r")
    common(p)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--method", choices=["criterion", "oracle", "both", "prop6"], default="both")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("resolve", help="minimal resolution of I^2 or I^3")
    common(p)
    p.add_argument("--power", type=int, choices=[2, 3], default=3)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("syzygy", help="Hilbert-Burch columns")
    common(p)
    p.set_defaults(func=cmd_syzygy)

    p = sub.add_parser("points", help="points, lines and incidence counts")
    common(p)
    p.add_argument("--list", action="store_true", help="print coordinates")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("witness", help="test products of lines against I^(m) and I^r")
    common(p)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FieldError, ConfigurationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CharacteristicError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CHAR
    except (HilbertBurchError, ResolutionError, DecompositionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
