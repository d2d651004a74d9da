"""Command-line entry point: generate, verify, and sweep.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 nonexistent parameters, 3 search budget exhausted, 4 unparsable input.
With the same arguments and seed the written output is byte-identical
across runs; progress notes go to stderr so stdout stays clean when it
carries the design itself.
"""

from __future__ import annotations

import argparse
import json
import sys

from .compose import ConstructionResult, construct
from .core import Transversal
from .errors import (
    DesignError,
    FormatError,
    NonExistent,
    SearchExhausted,
    VerificationFailed,
)
from .formats import (
    LATEX_MAX_SIDE,
    design_from_dict,
    dumps_design,
    render_grid,
    render_latex,
)
from .room import DEFAULT_BUDGET
from .verify import verify, verify_transversal

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_NONEXISTENT = 2
EXIT_BUDGET = 3
EXIT_PARSE = 4


def _emit(text: str, out_path: str | None) -> None:
    """Write the payload to out_path or stdout."""
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _note(message: str, out_path: str | None) -> None:
    """Status line: stdout when the payload went to a file, else stderr."""
    stream = sys.stdout if out_path is not None else sys.stderr
    print(message, file=stream)


def _result_meta(res: ConstructionResult, seed: int, budget: int) -> dict:
    meta = {
        "provenance": res.path,
        "seed": seed,
        "budget": budget,
        "verification": res.report.to_dict(),
    }
    if res.transversal is not None:
        meta["transversal"] = [list(cell) for cell in res.transversal.cells]
        meta["transversal_verification"] = res.transversal_report.to_dict()
    return meta


def cmd_generate(args) -> int:
    try:
        res = construct(args.n, args.k, seed=args.seed, budget=args.budget)
    except NonExistent as exc:
        print(f"nonexistent: {exc}", file=sys.stderr)
        return EXIT_NONEXISTENT
    except SearchExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY

    if args.format == "json":
        text = dumps_design(res.design, meta=_result_meta(res, args.seed, args.budget))
    elif args.format == "grid":
        text = render_grid(res.design)
    else:
        try:
            text = render_latex(res.design)
        except ValueError as exc:
            print(f"cannot render: {exc}", file=sys.stderr)
            return EXIT_PARSE
    _emit(text, args.out)

    trans_note = (
        "transversal certified"
        if res.transversal is not None
        else "no transversal found within budget"
    )
    _note(
        f"built ({args.n}, {args.k}): side {res.design.side}, "
        f"{len(res.design.cells)} blocks via {res.path}; "
        f"verification passed; {trans_note}",
        args.out,
    )
    return EXIT_OK


def _load_design_file(path: str):
    """Parse a JSON design file; returns (array, meta dict)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    arr = design_from_dict(data)
    meta = data.get("meta")
    return arr, (meta if isinstance(meta, dict) else None)


def _meta_transversal(meta: dict | None) -> Transversal | None:
    if meta is None or "transversal" not in meta:
        return None
    raw = meta["transversal"]
    if not isinstance(raw, list):
        raise FormatError("meta.transversal must be a list of cells")
    cells = []
    for entry in raw:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise FormatError(f"meta.transversal entry {entry!r} is not a cell")
        cells.append((entry[0], entry[1]))
    return Transversal(tuple(cells))


def cmd_verify(args) -> int:
    try:
        arr, meta = _load_design_file(args.path)
        transversal = _meta_transversal(meta)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    report = verify(arr)
    for check in report.checks:
        tag = "PASS" if check.passed else "FAIL"
        detail = f" ({check.detail})" if check.detail else ""
        print(f"[{tag}] {check.name}{detail}")
    def _counts(values) -> str:
        return str(values[0]) if len(set(values)) == 1 else str(list(values))

    print(
        f"blocks: {report.total_blocks} total, "
        f"{_counts(report.row_blocks)} per row, "
        f"{_counts(report.col_blocks)} per column"
    )
    passed = report.passed
    if transversal is not None:
        t_report = verify_transversal(arr, transversal)
        for check in t_report.checks:
            tag = "PASS" if check.passed else "FAIL"
            detail = f" ({check.detail})" if check.detail else ""
            print(f"[{tag}] transversal {check.name}{detail}")
        passed = passed and t_report.passed
    print("verdict:", "valid" if passed else "INVALID")
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_sweep(args) -> int:
    rows = []
    hard_fail = False
    exhausted = False
    for k in range(1, args.k_max + 1):
        for n in range(2 * k, args.n_max + 1, 2 * k):
            try:
                res = construct(n, k, seed=args.seed, budget=args.budget)
            except NonExistent:
                expected = k == 1 and n in (4, 6)
                status = "nonexistent" if expected else "UNEXPECTED-nonexistent"
                hard_fail = hard_fail or not expected
                rows.append((n, k, "-", "-", "-", status))
                continue
            except SearchExhausted:
                exhausted = True
                rows.append((n, k, "-", "-", "-", "budget-exhausted"))
                continue
            rows.append(
                (
                    n,
                    k,
                    res.path,
                    res.design.side,
                    len(res.design.cells),
                    "verified",
                )
            )

    header = ("n", "k", "path", "side", "blocks", "status")
    table = [header] + [tuple(str(x) for x in row) for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    lines = [
        "  ".join(text.ljust(widths[i]) for i, text in enumerate(line)).rstrip()
        for line in table
    ]
    _emit("\n".join(lines) + "\n", args.out)

    if hard_fail:
        return EXIT_VERIFY
    if exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omd",
        description=(
            "Construct and check matching designs: square arrays whose "
            "cells hold k-edge matchings, with every point met once per "
            "row and once per column and every pair covered exactly once."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
        p.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_BUDGET,
            help=f"search node budget (default {DEFAULT_BUDGET})",
        )

    gen = sub.add_parser("generate", help="construct one design")
    gen.add_argument("--n", type=int, required=True, help="number of points")
    gen.add_argument("--k", type=int, required=True, help="edges per block")
    common(gen)
    gen.add_argument(
        "--format",
        choices=("json", "grid", "latex"),
        default="json",
        help=f"output format (latex only up to side {LATEX_MAX_SIDE})",
    )
    gen.add_argument("--out", help="write to this path instead of stdout")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="check a JSON design file")
    ver.add_argument("path", help="design file to check")
    common(ver)
    ver.set_defaults(func=cmd_verify)

    sweep = sub.add_parser("sweep", help="build and check a whole range")
    sweep.add_argument("--n-max", type=int, required=True, help="largest order")
    sweep.add_argument("--k-max", type=int, required=True, help="largest block size")
    common(sweep)
    sweep.add_argument("--out", help="write the table to this path")
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, but 2 means nonexistent here
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        return args.func(args)
    except DesignError as exc:
        # anything reaching here is a bug surfacing, not a user mistake
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
