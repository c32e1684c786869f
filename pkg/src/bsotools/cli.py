"""Command-line front end.

    bsotools indices graphs.g6
    bsotools bounds c6.edges --format json
    bsotools extremal --n 8 --chemical
    bsotools verify --suite default --seed 42
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .bounds import DEFAULT_TOL, FIELDS, BoundId, check_all_bounds
from .corpus import DEFAULT_SEED, random_graphs, structured_graphs, tree_graphs
from .graph import DomainError, Graph, GraphParseError, is_connected, parse_edge_list, parse_graph6
from .indices import IndexKind, all_indices
from .trees import MAX_ORDER, TreeFamily, extremal_search
from .verify import VerifyReport, edge_type_agreement, sweep_bounds, tree_suite

FORMATS = ("table", "json", "csv")
EXTENSIONS = {".g6": "g6", ".graph6": "g6", ".edges": "edges"}


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    format: str = "table"
    tol: float = DEFAULT_TOL
    seed: int = DEFAULT_SEED
    n: int | None = None
    chemical: bool = False
    index: IndexKind = IndexKind.BSO
    bound_ids: list[BoundId] | None = None
    suite: str = "default"
    count: int = 1000
    max_n: int = 10
    input_format: str | None = None

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("--tol must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"--format must be one of {FORMATS}")


# ---------------------------------------------------------------------------
# input


def _read_graphs(config: RunConfig, errors: list[str]) -> Iterator[tuple[str, Graph]]:
    for path in config.inputs:
        kind = config.input_format or EXTENSIONS.get(Path(path).suffix.lower())
        if kind is None:
            errors.append(f"{path}: cannot infer format from extension; pass --input-format")
            continue
        try:
            text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="ascii")
        except (OSError, UnicodeDecodeError) as exc:
            errors.append(f"{path}: {exc}")
            continue
        if kind == "edges":
            try:
                yield path, parse_edge_list(text)
            except GraphParseError as exc:
                errors.append(f"{path}: {exc}")
            continue
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                yield f"{path}:{lineno}", parse_graph6(line)
            except GraphParseError as exc:
                errors.append(f"{path}:{lineno}: {exc}")


# ---------------------------------------------------------------------------
# output


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.7f}"
    if value is None:
        return "-"
    return str(value)


def render(rows: list[dict], columns: Sequence[str], fmt: str, document=None) -> str:
    if fmt == "json":
        return json.dumps(rows if document is None else document, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    cells = [[_fmt(r.get(c)) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_indices(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    errors: list[str] = []
    rows = []
    for label, g in _read_graphs(config, errors):
        try:
            values = all_indices(g)
        except DomainError as exc:
            errors.append(f"{label}: {exc}")
            continue
        rows += [{"graph": label, "index": k.value, "value": v} for k, v in values.items()]
    out.write(render(rows, ("graph", "index", "value"), config.format))
    for e in errors:
        print(e, file=sys.stderr)
    return 1 if errors else 0


def cmd_bounds(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    errors: list[str] = []
    rows = []
    failed = False
    for label, g in _read_graphs(config, errors):
        if not is_connected(g):
            errors.append(f"{label}: disconnected")
            continue
        if g.m == 0 or min(g.degrees) == 0:
            errors.append(f"{label}: zero-degree")
            continue
        for r in check_all_bounds(g, config.tol, config.bound_ids):
            failed |= not r.skipped and not (r.holds and r.consistent)
            rows.append({"graph": label, **r.to_dict()})
    out.write(render(rows, ("graph",) + FIELDS, config.format))
    for e in errors:
        print(e, file=sys.stderr)
    return 1 if errors or failed else 0


EXTREMAL_COLUMNS = (
    "n", "chemical", "index", "tree_count", "min_value", "closed_form_min", "closed_form_min_matches",
    "max_value", "closed_form_max", "closed_form_max_matches", "chemical_upper_bound",
    "chemical_bound_holds", "chemical_bound_attained", "min_trees", "max_trees",
)


def cmd_extremal(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    n = config.n
    if n is None or not 3 <= n <= MAX_ORDER:
        print(f"error: --n must be in 3..{MAX_ORDER} (the tree extremal results start at n = 3)", file=sys.stderr)
        return 2
    result = extremal_search(TreeFamily(n, config.chemical), config.index, config.tol)
    doc = result.to_dict()
    row = dict(doc)
    row["min_trees"] = " ".join(doc["min_trees"])
    row["max_trees"] = " ".join(doc["max_trees"])
    if config.chemical and "chemical_upper_bound" not in doc and config.index is IndexKind.BSO:
        print(f"note: no certified chemical-tree bound for n={n} (needs n = 2 mod 3)", file=sys.stderr)
    if config.format == "table":
        width = max(len(c) for c in EXTREMAL_COLUMNS)
        out.write("".join(f"{c.ljust(width)}  {_fmt(row.get(c))}\n" for c in EXTREMAL_COLUMNS if c in row))
    else:
        out.write(render([row], [c for c in EXTREMAL_COLUMNS if c in row], config.format, document=doc))
    flags = [doc.get(k) for k in ("closed_form_min_matches", "closed_form_max_matches", "chemical_bound_holds")]
    return 1 if any(f is False for f in flags) else 0


TALLY_COLUMNS = ("id", "condition", "evaluated", "skipped", "violations", "equality_detected", "equality_mismatches", "status")


def run_verify(config: RunConfig) -> VerifyReport:
    report = VerifyReport()
    if config.suite in ("default", "random"):
        def corpus():
            if config.suite == "default":
                yield from tree_graphs(config.max_n)
            yield from structured_graphs()
            yield from random_graphs(config.count, config.seed)

        report.bounds, report.graphs = sweep_bounds(corpus(), config.tol)
        report.properties.append(edge_type_agreement(corpus()))
    if config.suite in ("default", "trees"):
        report.properties.extend(tree_suite(config.max_n))
    return report


def cmd_verify(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    report = run_verify(config)
    if config.format == "json":
        out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    elif config.format == "csv":
        out.write(render([t.to_dict() for t in report.bounds], TALLY_COLUMNS, "csv"))
        out.write("\n")
        out.write(render([p.to_dict() for p in report.properties], ("name", "status", "detail"), "csv"))
    else:
        if report.bounds:
            out.write(f"bound sweep over {report.graphs} graphs\n")
            out.write(render([t.to_dict() for t in report.bounds], TALLY_COLUMNS, "table"))
            out.write("\n")
        for p in report.properties:
            out.write(f"[{p.status.upper()}] {p.name}: {p.detail}\n")
        out.write(f"overall: {'PASS' if report.passed else 'FAIL'}\n")
    return 0 if report.passed else 1


COMMANDS = {"indices": cmd_indices, "bounds": cmd_bounds, "extremal": cmd_extremal, "verify": cmd_verify}


# ---------------------------------------------------------------------------
# argument parsing


def _bound_id(text: str) -> BoundId:
    try:
        return BoundId(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown bound id {text!r}") from None


def _index(text: str) -> IndexKind:
    try:
        return IndexKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative tolerance (default 1e-9)")

    graphs = argparse.ArgumentParser(add_help=False)
    graphs.add_argument("inputs", nargs="+", help="graph files (.g6: one graph per line, .edges: one graph); '-' for stdin")
    graphs.add_argument("--input-format", choices=("g6", "edges"))

    parser = argparse.ArgumentParser(prog="bsotools", description="Banhatti-Sombor index tools")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("indices", parents=[common, graphs], help="print all ten indices")
    p = sub.add_parser("bounds", parents=[common, graphs], help="evaluate the bound registry")
    p.add_argument("--id", dest="bound_ids", type=_bound_id, action="append", help="restrict to this bound (repeatable)")
    p = sub.add_parser("extremal", parents=[common], help="exhaustive extremal search over trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chemical", action="store_true", help="restrict to trees with max degree <= 4")
    p.add_argument("--index", type=_index, default=IndexKind.BSO)
    p = sub.add_parser("verify", parents=[common], help="run the verification corpus")
    p.add_argument("--suite", choices=("default", "trees", "random"), default="default")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--count", type=int, default=1000, help="random graphs in the corpus")
    p.add_argument("--max-n", type=int, default=10, help="largest tree order checked")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    opts = {k: v for k, v in vars(args).items() if v is not None and k in RunConfig.__dataclass_fields__}
    try:
        config = RunConfig(**opts)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.seed < 0 or config.count < 0 or not 1 <= config.max_n <= MAX_ORDER:
        print("error: --seed and --count must be non-negative and --max-n in range", file=sys.stderr)
        return 2
    return COMMANDS[config.command](config)


if __name__ == "__main__":
    raise SystemExit(main())
