"""Command line surface: generate families, compute spectra, run checks.

Exit codes: 0 when every requested check holds, 1 when a check fails,
2 on input errors (bad grammar, malformed files, invalid parameters).
Output is deterministic byte-for-byte for a fixed command line and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from math import comb

from . import families as fam
from . import theorems as th
from .hypercore import Hypergraph, HypergraphError, read_file, to_json, to_text, write_file
from .spectral import (
    ConvergenceError,
    closed_walk_counts,
    estrada_index,
    format_float,
    spectrum_of,
    spectrum_to_csv,
    summary_to_dict,
)

_INPUT_ERRORS = (HypergraphError, fam.FamilyGrammarError, OverflowError, ConvergenceError, OSError, ValueError)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_hypergraph(h: Hypergraph, out: str | None) -> None:
    if out:
        write_file(h, out)
    else:
        sys.stdout.write(to_text(h))


def cmd_gen(args) -> int:
    h = fam.build_family(fam.parse_family(args.family))
    _write_hypergraph(h, args.out)
    return 0


def cmd_spectrum(args) -> int:
    h = read_file(args.input)
    spectrum = spectrum_of(h)
    if args.format == "csv":
        _emit(spectrum_to_csv(spectrum), args.out)
        return 0
    summary = summary_to_dict(spectrum)
    summary["m"] = h.m
    if args.smax:
        summary["closed_walks"] = {
            str(u): closed_walk_counts(h, u, args.smax) for u in range(h.n)
        }
    if args.format == "json":
        _emit(json.dumps(summary, indent=2) + "\n", args.out)
        return 0
    lines = [f"n {summary['n']}", f"m {h.m}"]
    lines += [f"eigenvalue {format_float(v)}" for v in summary["eigenvalues"]]
    for key in ("lambda1", "estrada", "energy"):
        lines.append(f"{key} {format_float(summary[key])}")
    lines.append(f"negative_count {summary['negative_count']}")
    lines.append(f"distinct_count {summary['distinct_count']}")
    lines += [f"moment {t} {format_float(v)}" for t, v in enumerate(summary["moments"])]
    if args.smax:
        for u in range(h.n):
            counts = " ".join(map(str, summary["closed_walks"][str(u)]))
            lines.append(f"closed_walks {u} {counts}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _render_bound_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([th.bound_report_to_dict(r) for r in reports], indent=2) + "\n"
    if fmt == "csv":
        return th.bound_reports_to_csv(reports)
    lines = []
    for r in reports:
        lines.append(
            f"{r.bound_id} holds={str(r.holds).lower()} equality={str(r.equality).lower()} "
            f"lhs={format_float(r.lhs)} rhs={format_float(r.rhs)} slack={format_float(r.slack)}"
        )
    failed = sum(not r.holds for r in reports)
    lines.append(
        "all bounds hold" if failed == 0 else f"{failed} bound check(s) FAILED"
    )
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    h = read_file(args.input)
    reports = th.check_all_bounds(h, args.k, t=args.t, variant=args.variant)
    _emit(_render_bound_reports(reports, args.format), args.out)
    return 0 if all(r.holds for r in reports) else 1


def cmd_complement(args) -> int:
    from .hypercore import complement_uniform

    h = read_file(args.input)
    _write_hypergraph(complement_uniform(h, args.k), args.out)
    return 0


def cmd_enumerate(args) -> int:
    entries = fam.unicyclic_catalog(args.nover, args.k)
    scored = [
        (e.label, e.hypergraph, estrada_index(spectrum_of(e.hypergraph)))
        for e in entries
    ]
    if args.format == "json":
        payload = [
            {
                "label": label,
                "n": h.n,
                "m": h.m,
                "estrada": float(f"{ee:.12g}"),
                "edges": [list(edge) for edge in h.edges],
            }
            for label, h, ee in scored
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    if args.format == "csv":
        lines = ["label,n,m,estrada"]
        lines += [f"{label},{h.n},{h.m},{format_float(ee)}" for label, h, ee in scored]
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    lines = [
        f"{label} n={h.n} m={h.m} estrada={format_float(ee)}" for label, h, ee in scored
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _verify_extremal(args) -> tuple[str, bool]:
    report = th.verify_extremal(args.nover, args.k)
    if args.format == "json":
        return json.dumps(th.extremal_report_to_dict(report), indent=2) + "\n", report.passed
    lines = [f"extremal ranking for n_over={report.n_over} k={report.k} (n={report.n})"]
    lines += [
        f"  {label} estrada={format_float(ee)}" for label, ee in report.ranking
    ]
    lines.append(f"max: {', '.join(report.max_labels)} (expected {report.expected_max_label})")
    lines.append(
        f"second: {', '.join(report.second_labels)} (expected {report.expected_second_label})"
    )
    lines.append(f"diameters: max={report.diameter_max} second={report.diameter_second}")
    lines.append(f"note: {report.scope_note}")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines) + "\n", report.passed


def _verify_orderings(args) -> tuple[str, bool]:
    reports = th.verify_ordering_lemmas(args.k, args.budget)
    ok = all(r.all_strict for r in reports)
    if args.format == "json":
        payload = [th.ordering_report_to_dict(r) for r in reports]
        return json.dumps(payload, indent=2) + "\n", ok
    if args.format == "csv":
        return th.ordering_reports_to_csv(reports), ok
    lines = []
    for r in reports:
        lines.append(
            f"{r.lemma_id}: {len(r.instances)} instance(s), "
            + ("all strict" if r.all_strict else "STRICTNESS FAILED")
        )
        for inst in r.instances:
            if not inst.strict_holds:
                lines.append(
                    f"  FAILED {inst.left} -> {inst.right}: "
                    f"{format_float(inst.ee_left)} vs {format_float(inst.ee_right)}"
                )
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n", ok


def _verify_bounds(args) -> tuple[str, bool]:
    rng = random.Random(args.seed)
    k = args.k
    failures = []
    count = args.budget
    for index in range(count):
        n = rng.randint(max(k, 3), 12)
        m = rng.randint(1, min(comb(n, k), 3 * n))
        h = fam.random_uniform(n, k, m, rng)
        for r in th.check_all_bounds(h, k, variant=args.variant):
            if not r.holds:
                failures.append((index, h, r))
    ok = not failures
    lines = [f"checked {count} random {k}-uniform hypergraph(s), seed={args.seed}"]
    for index, h, r in failures:
        lines.append(f"FAILED instance {index}: {r.bound_id} on {to_json(h)}")
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n", ok


def cmd_verify(args) -> int:
    if args.suite == "extremal":
        text, ok = _verify_extremal(args)
    elif args.suite == "orderings":
        text, ok = _verify_orderings(args)
    else:
        text, ok = _verify_bounds(args)
    _emit(text, args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypestra",
        description="k-uniform hypergraph spectra, Estrada index and bound checking",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common_out = dict(default=None, help="write output to this path instead of stdout")

    p = sub.add_parser("gen", help="generate a named family")
    p.add_argument("family", help="family description, e.g. cm:3:4,0 or fano")
    p.add_argument("--out", **common_out)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("spectrum", help="eigenvalues and spectrum statistics")
    p.add_argument("input", help="hypergraph file (.json or text)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--smax", type=int, default=0, help="also report closed walk counts up to this length")
    p.add_argument("--out", **common_out)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", help="run the bound catalog on a hypergraph")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True, help="uniformity of the hypergraph")
    p.add_argument("--t", type=int, default=2, help="how many leading eigenvalues to sum")
    p.add_argument("--variant", choices=th.VARIANTS, default=th.AS_WRITTEN)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", **common_out)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("extremal", "orderings", "bounds"))
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--nover", type=int, default=4, help="order divided by k-1 (extremal suite)")
    p.add_argument("--budget", type=int, default=14,
                   help="vertex budget (orderings) or instance count (bounds)")
    p.add_argument("--smax", type=int, default=8, help="walk length cap for dominance data")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variant", choices=th.VARIANTS, default=th.AS_WRITTEN)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", **common_out)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list the unicyclic catalog")
    p.add_argument("--nover", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", **common_out)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("complement", help="k-uniform complement of a hypergraph")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", **common_out)
    p.set_defaults(func=cmd_complement)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
