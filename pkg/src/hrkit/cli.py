"""Command-line front end (``hrk``)."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, weyl
from .engine import EmbeddingError, HrkReport, hrk_linear, hrk_projective
from .liealg import GenericityError
from .parser import ElaborationError, ParseError, build
from .reprkit import structure_type

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GENERICITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def seeds_from(args) -> list[int]:
    base = args.seed
    if base is None:
        env = os.environ.get("HRK_SEED")
        try:
            base = int(env) if env else 0
        except ValueError:
            raise UsageError(f"HRK_SEED must be an integer, got {env!r}") from None
    if base < 0 or base >= 2 ** 64:
        raise UsageError("seed must be an unsigned 64-bit integer")
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    return [base + i for i in range(args.samples)]


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def report_table(d: dict) -> str:
    width = max(len(k) for k in d) + 2
    lines = []
    for k, v in d.items():
        if isinstance(v, list):
            v = ",".join(map(str, v))
        lines.append(f"{k:<{width}}{v}")
    return "\n".join(lines) + "\n"


def emit_report(report: HrkReport | dict, fmt: str) -> str:
    d = report.as_dict() if isinstance(report, HrkReport) else report
    return to_json(d) if fmt == "json" else report_table(d)


def _chain_table(rows: list[dict]) -> str:
    lines = []
    for r in rows:
        rep = r.get("report")
        extra = "" if rep is None else f"  hrk={rep['hrk']} c={rep['cohomogeneity']}"
        lines.append(f"{r['verdict']:<26}{r['chain']}{extra}")
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    seeds = seeds_from(args)
    rep = build(args.rep, quaternionic=args.space == "hp")
    report = hrk_projective(rep, seeds) if args.space == "hp" else hrk_linear(rep, seeds)
    _write(emit_report(report, args.format), args.out)
    return EXIT_OK


def cmd_structure_type(args) -> int:
    st = structure_type(build(args.rep))
    d = {"type": st.tag, "commutant_dim": st.commutant_dim}
    _write(emit_report(d, args.format), args.out)
    return EXIT_OK


def cmd_weyl_dim(args) -> int:
    try:
        rs = weyl.root_system(args.type, args.rank)
        w = [int(x) for x in args.weight.split(",")] if args.weight.strip() else []
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        d = weyl.weyl_dim(rs, w)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(f"{d}\n", args.out)
    return EXIT_OK


def cmd_survey(args) -> int:
    seeds = seeds_from(args)
    if not 1 <= args.n <= catalog.SURVEY_CEILING:
        raise UsageError(f"--n must be between 1 and {catalog.SURVEY_CEILING}")
    chains = catalog.survey(args.n, seeds, args.max_depth, args.force_pruned)
    rows = [c.as_dict() for c in chains]
    _write(to_json(rows) if args.format == "json" else _chain_table(rows), args.out)
    positive = [c.key for c in chains if c.hrk is not None and c.hrk > 0]
    for key in positive:
        print(f"positive homogeneity rank recorded for {key}", file=sys.stderr)
    return EXIT_FAIL if positive else EXIT_OK


def cmd_verify(args) -> int:
    seeds = seeds_from(args)
    if not 2 <= args.n <= catalog.SURVEY_CEILING:
        raise UsageError(f"--n must be between 2 and {catalog.SURVEY_CEILING}")
    res = catalog.verify_theorem(args.n, seeds)
    if args.format == "json":
        _write(to_json(res.rows), args.out)
        stream = sys.stderr
    else:
        _write(_chain_table(res.rows), args.out)
        stream = sys.stdout
    for f in res.failures:
        print(f"FAIL {f}", file=sys.stderr)
    print(res.summary(), file=stream)
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_tables(args) -> int:
    families = [args.family] if args.family else ["sp", "su", "so"]
    sizes = [args.n] if args.n else list(range(2, catalog.SURVEY_CEILING + 1))
    rows = []
    for fam in families:
        for n in sizes:
            for d in catalog.table_rows(fam, n):
                rows.append({"group": f"{catalog.classical_group(fam, n).name}", "row": d.name,
                             "dim": d.dim, "rank": d.rank, "constructible": d.constructible,
                             "exceptional": d.exceptional})
    if args.format == "json":
        text = to_json(rows)
    else:
        text = "".join(f"{r['group']:<8}{r['row']:<28}{r['dim']:>5}{r['rank']:>4}  "
                       f"{'built' if r['constructible'] else 'symbolic'}\n" for r in rows)
    _write(text, args.out)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hrk", description="Homogeneity rank of compact group actions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seeds=True):
        sp.add_argument("--format", choices=("json", "table"), default="json")
        sp.add_argument("--out", help="write the report to this file")
        if seeds:
            sp.add_argument("--seed", type=int, default=None,
                            help="base seed (default: $HRK_SEED or 0)")
            sp.add_argument("--samples", type=int, default=3, help="number of random points")

    c = sub.add_parser("compute", help="homogeneity rank of one representation")
    c.add_argument("--rep", required=True)
    c.add_argument("--space", choices=("linear", "hp"), default="hp")
    common(c)
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("structure-type", help="real, complex or quaternionic type")
    s.add_argument("--rep", required=True)
    common(s, seeds=False)
    s.set_defaults(func=cmd_structure_type)

    w = sub.add_parser("weyl-dim", help="dimension of an irreducible module")
    w.add_argument("--type", required=True, choices=list("ABCDEFG") + list("abcdefg"))
    w.add_argument("--rank", required=True, type=int)
    w.add_argument("--weight", required=True, help="comma-separated Dynkin labels")
    w.add_argument("--out")
    w.set_defaults(func=cmd_weyl_dim)

    v = sub.add_parser("survey", help="walk the subgroup tables down from Sp(n)")
    v.add_argument("--n", required=True, type=int)
    v.add_argument("--max-depth", type=int, default=3)
    v.add_argument("--force-pruned", action="store_true",
                   help="also compute nodes failing the dimension condition")
    common(v)
    v.set_defaults(func=cmd_survey)

    t = sub.add_parser("verify-theorem", help="check the classification list and exclusions")
    t.add_argument("--n", required=True, type=int)
    common(t)
    t.set_defaults(func=cmd_verify)

    tb = sub.add_parser("tables", help="maximal subgroup tables")
    tb.add_argument("--family", choices=("so", "su", "sp"))
    tb.add_argument("--n", type=int)
    common(tb, seeds=False)
    tb.set_defaults(func=cmd_tables)
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, ElaborationError, EmbeddingError) as exc:
        print(f"hrk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GenericityError as exc:
        print(f"hrk: genericity failure: {exc}", file=sys.stderr)
        return EXIT_GENERICITY


if __name__ == "__main__":
    sys.exit(main())
