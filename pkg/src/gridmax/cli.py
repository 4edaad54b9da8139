"""Command-line front end.

Exit codes: 0 success or agreement, 1 verified disagreement, 2 usage or
parse error, 3 I/O error, 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import sys
from collections.abc import Iterator, Sequence
from pathlib import Path
from typing import IO, Final

from gridmax.cubicle import build_cubicle
from gridmax.errors import BudgetExceeded, DomainError
from gridmax.formula import (
    asymptotic_bound,
    binary_ones_formula,
    f_recursive,
    harary_harborth,
    max_edges,
)
from gridmax.oracle import OracleBudget, verify_range
from gridmax.pcr import iroot

EXIT_OK: Final = 0
EXIT_DISAGREE: Final = 1
EXIT_USAGE: Final = 2
EXIT_IO: Final = 3
EXIT_BUDGET: Final = 4


class CLIError(Exception):
    def __init__(self, message: str, exit_code: int) -> None:
        super().__init__(message)
        self.exit_code = exit_code


def _int_at_least(low: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < low:
            raise argparse.ArgumentTypeError(f"must be >= {low}, got {value}")
        return value

    parse.__name__ = f"integer >= {low}"
    return parse


positive = _int_at_least(1)
non_negative = _int_at_least(0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridmax",
        description="Maximum edge counts of n-point induced subgraphs of the grid Z^d.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("edges", help="print E_d(n)")
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--d", type=positive, required=True)
    p.add_argument("--verbose", "-v", action="store_true", help="also print the breakdown")

    p = sub.add_parser("sequence", help="emit E_d(1), ..., E_d(n_max)")
    p.add_argument("--d", type=positive, required=True)
    p.add_argument("--n-max", type=positive, required=True)
    p.add_argument("--format", choices=("bfile", "csv"), default="bfile")
    p.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")

    p = sub.add_parser("cubicle", help="write the canonical optimal point set as JSON")
    p.add_argument("--n", type=non_negative, required=True)
    p.add_argument("--d", type=positive, required=True)
    p.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")

    p = sub.add_parser("verify", help="check the formula against the oracle or itself")
    p.add_argument("--d", type=positive, required=True)
    p.add_argument("--n-max", type=positive, required=True)
    p.add_argument("--mode", choices=("oracle", "internal"), default="internal")
    p.add_argument("--jobs", type=positive, default=None, help="worker processes (oracle mode)")
    p.add_argument("--cap", type=positive, default=None, help="max candidates per oracle call")
    p.add_argument("--secs", type=float, default=None, help="seconds per oracle call")

    p = sub.add_parser("compare", help="report where a b-file differs from E_d(n)")
    p.add_argument("--d", type=positive, required=True)
    p.add_argument("--bfile", type=Path, required=True)
    return parser


@contextlib.contextmanager
def _output(path: Path | None) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh
    except OSError as exc:
        raise CLIError(f"cannot write {path}: {exc}", EXIT_IO) from None


def cmd_edges(args: argparse.Namespace) -> int:
    res = max_edges(args.n, args.d)
    print(res.edges)
    if args.verbose:
        print(f"n = {res.n}, d = {res.d}")
        print(f"discrepancy = {res.discrepancy}")
        print(f"pcr = {res.pcr}")
        print(f"edges = {res.d}*{res.n} - {res.discrepancy} = {res.edges}")
    return EXIT_OK


def cmd_sequence(args: argparse.Namespace) -> int:
    with _output(args.out) as out:
        try:
            if args.format == "csv":
                out.write("n,value\n")
            sep = "," if args.format == "csv" else " "
            for n in range(1, args.n_max + 1):
                out.write(f"{n}{sep}{max_edges(n, args.d).edges}\n")
            out.flush()
        except OSError as exc:
            raise CLIError(f"write failed: {exc}", EXIT_IO) from None
    return EXIT_OK


def cmd_cubicle(args: argparse.Namespace) -> int:
    doc = build_cubicle(args.n, args.d).to_json()
    with _output(args.out) as out:
        try:
            out.write(doc + "\n")
            out.flush()
        except OSError as exc:
            raise CLIError(f"write failed: {exc}", EXIT_IO) from None
    return EXIT_OK


def _internal_rows(d: int, n_max: int) -> Iterator[tuple[int, int, int, int, bool]]:
    for n in range(1, n_max + 1):
        closed = max_edges(n, d).edges
        rec = f_recursive(n, d)
        bound = asymptotic_bound(n, d)
        ok = closed == rec and closed <= bound
        if iroot(n, d) ** d == n:
            ok = ok and closed == bound
        if d == 2:
            ok = ok and closed == harary_harborth(n)
        if n < 2**d:
            ok = ok and closed == binary_ones_formula(n)
        yield n, closed, rec, bound, ok


def cmd_verify(args: argparse.Namespace) -> int:
    if args.mode == "internal":
        print("# n closed recursive bound ok")
        bad = []
        for n, closed, rec, bound, ok in _internal_rows(args.d, args.n_max):
            print(f"{n} {closed} {rec} {bound} {'yes' if ok else 'no'}")
            if not ok:
                bad.append(n)
        for n in bad:
            print(f"disagreement at n={n}", file=sys.stderr)
        return EXIT_DISAGREE if bad else EXIT_OK

    env_budget = OracleBudget.from_env()
    budget = OracleBudget(
        cap=args.cap if args.cap is not None else env_budget.cap,
        seconds=args.secs if args.secs is not None else env_budget.seconds,
    )
    jobs = args.jobs or os.cpu_count() or 1
    table = verify_range(args.d, args.n_max, budget=budget, jobs=jobs)
    print("# n formula oracle agree")
    for row in table.rows:
        print(f"{row.n} {row.formula_value} {row.oracle_value} {'yes' if row.agree else 'no'}")
    bad = [row for row in table.rows if not row.agree]
    for row in bad:
        print(
            f"disagreement at n={row.n}: formula {row.formula_value}, oracle {row.oracle_value}",
            file=sys.stderr,
        )
    if bad:
        return EXIT_DISAGREE
    if table.truncated_at is not None:
        print(f"# truncated at n={table.truncated_at}")
        print(f"oracle budget exceeded at n={table.truncated_at}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def read_bfile(path: Path) -> list[tuple[int, int]]:
    """Parse ``index value`` lines, skipping blanks and ``#`` comments."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc}", EXIT_IO) from None
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        try:
            if len(parts) != 2:
                raise ValueError
            n, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise CLIError(f"{path}:{lineno}: malformed b-file line {line!r}", EXIT_USAGE) from None
        if n < 1:
            raise CLIError(f"{path}:{lineno}: index must be >= 1, got {n}", EXIT_USAGE)
        rows.append((n, value))
    return rows


def cmd_compare(args: argparse.Namespace) -> int:
    rows = read_bfile(args.bfile)
    diffs = []
    for n, imported in rows:
        ours = max_edges(n, args.d).edges
        if ours != imported:
            diffs.append((n, imported, ours))
    if diffs:
        print("# n imported computed")
        for n, imported, ours in diffs:
            print(f"{n} {imported} {ours}")
    print(
        f"{len(diffs)} of {len(rows)} rows differ from E_{args.d}(n)",
        file=sys.stderr,
    )
    return EXIT_DISAGREE if diffs else EXIT_OK


COMMANDS = {
    "edges": cmd_edges,
    "sequence": cmd_sequence,
    "cubicle": cmd_cubicle,
    "verify": cmd_verify,
    "compare": cmd_compare,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 after --help
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except CLIError as exc:
        print(f"gridmax: {exc}", file=sys.stderr)
        return exc.exit_code
    except DomainError as exc:
        print(f"gridmax: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"gridmax: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
