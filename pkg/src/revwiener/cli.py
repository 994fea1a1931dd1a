"""Command-line surface: stats, construct, enumerate, rank, closed-form, verify.

Exit codes: 0 all good / all records match, 1 verification mismatch,
2 usage or parse error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import closed_forms, enumeration, verify
from .errors import (
    BoundExceeded,
    DomainTooSmall,
    EdgeListParseError,
    EmptyClass,
    InvalidSpec,
    RevWienerError,
    SpecParseError,
    TreeValidationError,
    UnknownTheorem,
)
from .families import build, diam4, parse_family_spec
from .invariants import metrics
from .tree import diameter_and_centers, format_edge_list, parse_edge_list

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

MAX_MEM_ENV = "REVWIENER_MAX_MEM"


def _tie_cap_from_env(k: int) -> int:
    """Approximate per-bucket tie cap from a byte budget in REVWIENER_MAX_MEM."""
    raw = os.environ.get(MAX_MEM_ENV)
    if not raw:
        return enumeration.DEFAULT_TIE_CAP
    try:
        budget = int(raw)
    except ValueError:
        raise SpecParseError(f"{MAX_MEM_ENV} must be an integer byte count, got {raw!r}")
    # A canonical code costs on the order of 256 bytes; split the budget
    # evenly across the k value buckets.
    return max(1, budget // (max(1, k) * 256))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_tree(path: str):
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def cmd_stats(args) -> int:
    t = _read_tree(args.input)
    m = metrics(t)
    payload = {
        "n": m.n,
        "wiener": m.wiener,
        "diameter": m.diameter,
        "reverse_wiener": m.reverse_wiener,
        "centers": list(m.centers),
    }
    if args.format == "structured":
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    elif args.format == "tabular":
        keys = ["n", "wiener", "diameter", "reverse_wiener", "centers"]
        row = "\t".join(str(payload[k]) if k != "centers" else ",".join(map(str, m.centers)) for k in keys)
        _emit("\t".join(keys) + "\n" + row + "\n", args.out)
    else:
        lines = [f"{k} = {payload[k]}" for k in ("n", "wiener", "diameter", "reverse_wiener")]
        lines.append("centers = " + ", ".join(map(str, m.centers)))
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = parse_family_spec(args.spec)
    _emit(format_edge_list(build(spec)), args.out)
    return EXIT_OK


def _tree_line(t) -> str:
    return " ".join(f"{u}-{v}" for u, v in t.edges)


def cmd_enumerate(args) -> int:
    n = args.n
    if args.diameter == 4 and n > args.max_n_free:
        trees = (diam4(s) for s in enumeration.gen_diam4_specs(n))
    else:
        gen = enumeration.gen_free_trees(n, max_n=args.max_n_free)
        if args.diameter is None:
            trees = gen
        else:
            trees = (t for t in gen if diameter_and_centers(t)[0] == args.diameter)
    if args.format == "structured":
        payload = [{"n": t.n, "edges": [list(e) for e in t.edges]} for t in trees]
        _emit(json.dumps({"count": len(payload), "trees": payload}, indent=2) + "\n", args.out)
    else:
        lines = []
        count = 0
        for t in trees:
            count += 1
            lines.append(_tree_line(t))
        if args.format == "human":
            lines.append(f"total: {count}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_rank(args) -> int:
    entries = enumeration.rank_trees(
        args.n, args.k, max_n=args.max_n_free, tie_cap=_tie_cap_from_env(args.k)
    )
    if args.format == "structured":
        payload = [
            {"value": e.value, "trees": list(e.trees), "truncated": e.truncated}
            for e in entries
        ]
        _emit(json.dumps({"n": args.n, "k": args.k, "entries": payload}, indent=2) + "\n", args.out)
    elif args.format == "tabular":
        lines = ["rank\tvalue\tties\ttruncated"]
        for i, e in enumerate(entries, start=1):
            lines.append(f"{i}\t{e.value}\t{len(e.trees)}\t{int(e.truncated)}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = []
        for i, e in enumerate(entries, start=1):
            suffix = " (tie set truncated)" if e.truncated else ""
            lines.append(f"#{i}: value {e.value}, {len(e.trees)} tree(s){suffix}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


_CLOSED_FORMS = {
    "f2": lambda n: (closed_forms.f_n2(n), None),
    "f3": lambda n: (closed_forms.f_n3(n), None),
    "g3": lambda n: (closed_forms.g_n3(n), None),
    "f4": lambda n: (None, closed_forms.f_n4(n)),
    "g4": lambda n: (None, closed_forms.g_n4(n)),
    "second": lambda n: (None, closed_forms.second_smallest(n)),
    "third": lambda n: (None, closed_forms.third_smallest(n)),
}


def cmd_closed_form(args) -> int:
    value, result = _CLOSED_FORMS[args.which](args.n)
    if result is not None:
        value = result.value
        attaining = verify.describe_attaining(result)
        notes = list(result.notes)
    else:
        attaining, notes = [], []
    if args.format == "structured":
        payload = {
            "which": args.which,
            "n": args.n,
            "value": value,
            "attaining": list(attaining),
            "notes": notes,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [f"{args.which}({args.n}) = {value}"]
        if attaining:
            lines.append("attaining: " + ", ".join(attaining))
        lines.extend(f"note: {note}" for note in notes)
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _report_tabular(report: verify.VerificationReport) -> str:
    lines = ["theorem\tn\tclaimed_value\toracle_value\tclaimed_set\toracle_set\tmatch\tnote"]
    for r in report.records:
        lines.append(
            "\t".join(
                [
                    report.theorem,
                    str(r.n),
                    str(r.claimed_value),
                    str(r.oracle_value),
                    "|".join(r.claimed_set),
                    "|".join(r.oracle_set),
                    str(int(r.match)),
                    r.note,
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _report_human(report: verify.VerificationReport) -> str:
    lines = [f"theorem: {report.theorem}"]
    for r in report.records:
        status = "PASS" if r.match else "FAIL"
        line = f"  n={r.n}: {status} claimed={r.claimed_value} oracle={r.oracle_value}"
        if r.note:
            line += f"  [{r.note}]"
        lines.append(line)
    lines.append(
        f"summary: checked={report.checked} passed={report.passed} "
        f"failed={report.failed} wall_time={report.wall_time:.2f}s"
    )
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    if args.n is not None:
        n_from = n_to = args.n
    elif args.n_from is not None and args.n_to is not None:
        n_from, n_to = args.n_from, args.n_to
    elif args.theorem == "lemmas":
        n_from, n_to = 5, 40
    else:
        raise SpecParseError("verify needs --n or both --n-from and --n-to")
    report = verify.run_verification(
        args.theorem,
        n_from,
        n_to,
        jobs=args.jobs,
        max_n_free=args.max_n_free,
        max_n_diam4=args.max_n_diam4,
        trials=args.trials,
        seed=args.seed,
    )
    if args.format == "structured":
        body = report.to_dict()
        body["wall_time"] = round(body["wall_time"], 6)
        _emit(json.dumps(body, indent=2) + "\n", args.out)
    elif args.format == "tabular":
        _emit(_report_tabular(report), args.out)
    else:
        _emit(_report_human(report), args.out)
    return EXIT_OK if report.all_match else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revwiener",
        description="Exact reverse-Wiener indices of trees, extremal families and "
        "brute-force verification of their characterizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("human", "structured", "tabular"), default="human")
        p.add_argument("--out", metavar="FILE", default=None)

    p = sub.add_parser("stats", help="metrics of a tree given as an edge-list file ('-' = stdin)")
    p.add_argument("input")
    add_common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("construct", help="materialize a family spec, e.g. D(6,3) or T(2^3)")
    p.add_argument("spec")
    add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="stream all trees on n vertices, one per class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diameter", type=int, default=None)
    p.add_argument("--max-n-free", type=int, default=enumeration.DEFAULT_MAX_N_FREE)
    add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("rank", help="k smallest reverse-Wiener values with tie sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n-free", type=int, default=enumeration.DEFAULT_MAX_N_FREE)
    add_common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("closed-form", help="evaluate a closed form at n")
    p.add_argument("which", choices=sorted(_CLOSED_FORMS))
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("verify", help="run a theorem-verification campaign")
    p.add_argument("theorem", choices=verify.THEOREM_IDS)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-from", type=int, default=None)
    p.add_argument("--n-to", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000, help="lemma battery trial count")
    p.add_argument("--seed", type=int, default=0, help="lemma battery RNG seed")
    p.add_argument("--max-n-free", type=int, default=enumeration.DEFAULT_MAX_N_FREE)
    p.add_argument("--max-n-diam4", type=int, default=enumeration.DEFAULT_MAX_N_DIAM4)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (BoundExceeded,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (
        EdgeListParseError,
        TreeValidationError,
        InvalidSpec,
        SpecParseError,
        DomainTooSmall,
        EmptyClass,
        UnknownTheorem,
        FileNotFoundError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RevWienerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
