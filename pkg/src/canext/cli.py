"""Command line entry point.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad usage
or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import bal, boolean, generate, lalg, mutants, normal, serialize, suite
from .order import FinBoolAlg, FinPoset, ValidationError
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _print_checks(reports: Sequence[Report], out) -> None:
    out.write(suite.checks_csv(list(reports)))


def _emit(reports: Sequence[Report], args: argparse.Namespace) -> int:
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2)
                         + "\n")
    else:
        _print_checks(reports, sys.stdout)
    if getattr(args, "output", None):
        Path(args.output).write_text(
            json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def _read_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _write(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------------

def cmd_ba(args: argparse.Namespace) -> int:
    ext = boolean.canonical_extension_ba(FinBoolAlg.of_size(args.atoms))
    reps = [boolean.verify_canonical_ba(ext, seed=args.seed), boolean.ro_iso(ext).check()]
    return _emit(reps, args)


def cmd_bal(args: argparse.Namespace) -> int:
    ctx = bal.context(args.dim)
    reps = [bal.verify_canext_bal(ctx, args.samples, seed=args.seed)]
    if args.appendix:
        reps.append(bal.appendix_suite(ctx, args.samples, args.seed))
    return _emit(reps, args)


def cmd_poset(args: argparse.Namespace) -> int:
    data = _read_json(args.file)
    inst = serialize.load_instance(data)
    if args.op == "regular-opens":
        P = inst.poset if isinstance(inst, normal.NormalFn) else inst
        if not isinstance(P, FinPoset):
            raise UsageError("regular-opens needs a poset or a function on one")
        from .order import regular_opens
        ro = regular_opens(P)
        _write(json.dumps({"poset": serialize.poset_to_json(P),
                           "regularOpens": [P.labels(u) for u in ro]}, indent=2) + "\n",
               args.output)
        return EXIT_OK
    if not isinstance(inst, normal.NormalFn):
        raise UsageError('normalize needs {"poset": ..., "values": ...}')
    f = inst.sharp()
    if args.format == "csv":
        _write(normal.to_csv(inst), args.output)
    else:
        doc = f.to_json()
        doc["normal"] = inst.is_normal()
        _write(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_suite(args: argparse.Namespace) -> int:
    cfg = suite.SuiteConfig.load(args.config) if args.config else suite.SuiteConfig.from_dict({})
    if args.output:
        cfg.outputPath = args.output
    if args.mutant and args.mutant not in mutants.MUTANTS:
        raise UsageError(f"unknown mutant {args.mutant!r}; choose from {sorted(mutants.MUTANTS)}")
    res = suite.run_suite(cfg, mutant=args.mutant, figures=not args.no_figures)
    _print_checks(res.reports, sys.stdout)
    for f in res.files:
        sys.stderr.write(f"wrote {f}\n")
    return res.exit_code


def _export_csv(inst: Any) -> str:
    if isinstance(inst, normal.NormalFn):
        return normal.to_csv(inst)
    if isinstance(inst, lalg.LVec):
        # the function I_Z -> min a[Z] on the proper ideals of Q^n
        S = normal.ideal_space(inst.dim)
        g = normal.gamma(S, inst)
        return serialize.csv_table(["ideal", "value"], zip(S.X.elements, g.values))
    if isinstance(inst, dict) and {"instance", "checks"} <= set(inst):
        rows = [[json.dumps(inst["instance"], sort_keys=True), c["name"],
                 "pass" if c["pass"] else "fail"] for c in inst["checks"]]
        return serialize.csv_table(["instance", "check", "result"], rows)
    raise UsageError("csv export handles functions, vectors and reports")


def _export_dot(inst: Any) -> str:
    if isinstance(inst, normal.NormalFn):
        return serialize.to_dot(inst.poset)
    if isinstance(inst, FinPoset):
        return serialize.to_dot(inst)
    if isinstance(inst, FinBoolAlg):
        B = inst
        elems = B.elements()
        P = FinPoset([B.label(b) for b in elems],
                     [(i, j) for i, a in enumerate(elems) for j, b in enumerate(elems) if a <= b])
        return serialize.to_dot(P, "boolean")
    raise UsageError("dot export handles posets, functions on posets and boolean algebras")


def cmd_export(args: argparse.Namespace) -> int:
    inst = serialize.load_instance(_read_json(args.input))
    if args.format == "json":
        if isinstance(inst, dict):
            text = json.dumps(inst, sort_keys=True, indent=2) + "\n"
        elif isinstance(inst, list):
            text = serialize.dumps({"dim": inst[0].dim if inst else 0, "vectors": inst})
        else:
            text = serialize.dumps(inst)
    elif args.format == "dot":
        text = _export_dot(inst)
    else:
        text = _export_csv(inst)
    _write(text, args.output)
    return EXIT_OK


def _parse_params(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not key=value")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_generate(args: argparse.Namespace) -> int:
    params = _parse_params(args.param)
    for key in ("n", "atoms", "dim", "count"):
        if getattr(args, key, None) is not None:
            params[key] = getattr(args, key)
    doc = generate.generate_instance(args.kind, params, args.seed)
    _write(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_replay(args: argparse.Namespace) -> int:
    doc = _read_json(args.file)
    if args.mutant and args.mutant not in mutants.MUTANTS:
        raise UsageError(f"unknown mutant {args.mutant!r}; choose from {sorted(mutants.MUTANTS)}")
    results = suite.replay_document(doc, args.mutant)
    still_failing = 0
    for cx, res in results:
        state = "fails" if res is False else ("vacuous" if res is None else "holds")
        still_failing += res is False
        sys.stdout.write(f"{cx['check']},{state}\n")
    return EXIT_FAIL if still_failing else EXIT_OK


# -- parser -------------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="canext",
                                description="Canonical extensions checked on finite instances.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("ba", help="canonical extension of the boolean algebra with N atoms")
    q.add_argument("--atoms", type=_positive, required=True)
    q.add_argument("--seed", type=_seed, default=0)
    q.add_argument("--json", action="store_true", help="print JSON instead of CSV")
    q.add_argument("--output", help="also write the JSON reports here")
    q.set_defaults(func=cmd_ba)

    q = sub.add_parser("bal", help="canonical extension of Q^N")
    q.add_argument("--dim", type=_positive, required=True)
    q.add_argument("--samples", type=_positive, default=1000)
    q.add_argument("--seed", type=_seed, default=0)
    q.add_argument("--appendix", action="store_true", help="run the supporting lemmas too")
    q.add_argument("--json", action="store_true")
    q.add_argument("--output")
    q.set_defaults(func=cmd_bal)

    q = sub.add_parser("poset", help="regular opens of a poset or normalization of a function")
    q.add_argument("--file", required=True)
    q.add_argument("--op", choices=["regular-opens", "normalize"], required=True)
    q.add_argument("--format", choices=["json", "csv"], default="json")
    q.add_argument("--output")
    q.set_defaults(func=cmd_poset)

    q = sub.add_parser("suite", help="run every suite and write report, CSV and figures")
    q.add_argument("--config", help="JSON config; defaults apply when omitted")
    q.add_argument("--output", help="output folder (overrides outputPath)")
    q.add_argument("--mutant", help=f"inject one of: {', '.join(sorted(mutants.MUTANTS))}")
    q.add_argument("--no-figures", action="store_true")
    q.set_defaults(func=cmd_suite)

    q = sub.add_parser("export", help="convert an instance or report to json, dot or csv")
    q.add_argument("--format", choices=["json", "dot", "csv"], required=True)
    q.add_argument("--input", required=True, help="JSON file, or - for stdin")
    q.add_argument("--output")
    q.set_defaults(func=cmd_export)

    q = sub.add_parser("generate", help="seeded random instance")
    q.add_argument("--kind", choices=list(generate.KINDS), required=True)
    q.add_argument("--n", type=_positive)
    q.add_argument("--atoms", type=_positive)
    q.add_argument("--dim", type=_positive)
    q.add_argument("--count", type=int)
    q.add_argument("--param", action="append", default=[], help="extra key=value")
    q.add_argument("--seed", type=_seed, default=0)
    q.add_argument("--output")
    q.set_defaults(func=cmd_generate)

    q = sub.add_parser("replay", help="re-run stored counterexamples")
    q.add_argument("--file", required=True)
    q.add_argument("--mutant")
    q.set_defaults(func=cmd_replay)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValidationError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        sys.stderr.write(f"canext: error: {msg}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
