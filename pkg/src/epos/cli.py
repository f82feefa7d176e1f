"""Command-line front end.

Exit codes: 0 on success (or verdict true), 1 when a verification fails
(the report, with witnesses, is still written), 2 on usage or domain errors.
Reports carry no timestamps, so output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .compositions import parse_composition
from .decomposition import (
    VerifyResult,
    verify_lemma_t1234,
    verify_lemma_x0,
    verify_lemma_y,
)
from .efun import EFunction, to_json_dict
from .expansions import path_csf_e, spider4m_csf, spider_csf_e
from .graph_oracle import DEFAULT_EDGE_BUDGET, csf_subset_expansion, parse_graph_file
from .injections import certify, verify_disjointness, verify_injections

LEMMA_CHECKS = {
    "x0": verify_lemma_x0,
    "y": verify_lemma_y,
    "t1234": verify_lemma_t1234,
    "injections": verify_injections,
    "disjointness": verify_disjointness,
}


def format_pretty(f: EFunction) -> str:
    """Human form, canonical term order: ``3·e[3] + 1·e[2,1]``."""
    if not f:
        return "0"
    pieces = []
    for key, coeff in f.items():
        term = f"{abs(coeff)}·e[{','.join(str(p) for p in key)}]"
        if not pieces:
            pieces.append(term if coeff > 0 else f"-{term}")
        else:
            pieces.append(f"{'+' if coeff > 0 else '-'} {term}")
    return " ".join(pieces)


def format_csv(f: EFunction) -> str:
    """One row per term: partition as space-separated parts, then the coefficient."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["partition", "coefficient"])
    for key, coeff in f.items():
        writer.writerow([" ".join(str(p) for p in key), str(coeff)])
    return buf.getvalue()


def _render_efunction(f: EFunction, fmt: str, degree: Optional[int]) -> str:
    if fmt == "json":
        return json.dumps(to_json_dict(f, degree=degree), indent=2) + "\n"
    if fmt == "csv":
        return format_csv(f)
    return format_pretty(f) + "\n"


def _render_report(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"{key}: {payload[key]}" for key in payload]
    return "\n".join(lines) + "\n"


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epos",
        description="Exact chromatic symmetric functions in the elementary basis, "
        "with e-positivity certificates for spiders with legs (4m+2, 2m, 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, formats=("json", "csv", "pretty")):
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--output", help="write to this path instead of stdout")

    p_path = sub.add_parser("path", help="e-expansion of the n-vertex path")
    p_path.add_argument("--n", type=int, required=True)
    add_output(p_path)

    p_spider = sub.add_parser("spider", help="e-expansion of a three-leg spider")
    p_spider.add_argument("--legs", required=True, help="comma-separated leg lengths a,b,c")
    add_output(p_spider)

    p_s4m = sub.add_parser("spider4m", help="e-expansion of the spider with legs (4m+2, 2m, 1)")
    p_s4m.add_argument("--m", type=int, required=True)
    add_output(p_s4m)

    p_oracle = sub.add_parser("oracle", help="brute-force e-expansion from a graph file")
    p_oracle.add_argument("--graph", required=True, help="file: vertex count, then 'u v' lines")
    p_oracle.add_argument("--budget", type=int, default=DEFAULT_EDGE_BUDGET)
    p_oracle.add_argument("--workers", type=int, default=None)
    add_output(p_oracle)

    p_verify = sub.add_parser("verify", help="run one verification pass (or all)")
    p_verify.add_argument("--lemma", required=True, choices=sorted(LEMMA_CHECKS) + ["all"])
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--workers", type=int, default=None)
    add_output(p_verify, formats=("json", "pretty"))

    p_cert = sub.add_parser("certify", help="build and check the e-positivity certificate")
    p_cert.add_argument("--m", type=int, required=True)
    p_cert.add_argument("--workers", type=int, default=None)
    add_output(p_cert, formats=("json", "pretty"))

    return parser


def _run_verify(args) -> int:
    names = sorted(LEMMA_CHECKS) if args.lemma == "all" else [args.lemma]
    results: list[VerifyResult] = []
    for name in names:
        check = LEMMA_CHECKS[name]
        if name in ("injections", "disjointness"):
            results.append(check(args.m, workers=args.workers))
        else:
            results.append(check(args.m))
    ok = all(r.ok for r in results)
    if len(results) == 1:
        payload = results[0].to_json_dict()
    else:
        payload = {"m": args.m, "ok": ok, "checks": [r.to_json_dict() for r in results]}
    _emit(_render_report(payload, args.format), args.output)
    return 0 if ok else 1


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "path":
            f = path_csf_e(args.n)
            _emit(_render_efunction(f, args.format, args.n), args.output)
            return 0
        if args.command == "spider":
            legs = parse_composition(args.legs)
            if len(legs) != 3:
                raise ValueError(f"expected three legs, got {len(legs)}")
            f = spider_csf_e(*legs)
            _emit(_render_efunction(f, args.format, sum(legs) + 1), args.output)
            return 0
        if args.command == "spider4m":
            f = spider4m_csf(args.m)
            _emit(_render_efunction(f, args.format, 6 * args.m + 4), args.output)
            return 0
        if args.command == "oracle":
            graph = parse_graph_file(Path(args.graph).read_text(encoding="utf-8"))
            f = csf_subset_expansion(graph, workers=args.workers, budget=args.budget)
            _emit(_render_efunction(f, args.format, graph.vertex_count), args.output)
            return 0
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "certify":
            cert = certify(args.m, workers=args.workers)
            _emit(_render_report(cert.to_json_dict(), args.format), args.output)
            return 0 if cert.verdict else 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
