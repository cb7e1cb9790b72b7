"""Readers and writers: DIMACS graphs, plain edge lists, bound reports.

Fractions are always written as ``"num/den"`` strings so no consumer ever
sees a decimal approximation.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bounds import REPORT_FIELDS, BoundsReport
from .errors import CountMismatch, ParseError
from .graph import Graph, build_graph

__all__ = [
    "format_fraction",
    "parse_fraction",
    "parse_dimacs_graph",
    "parse_edge_list",
    "read_graph_text",
    "write_dimacs_graph",
    "serialize_report",
    "parse_report",
    "csv_header",
    "ReportDocument",
]

_COMMENT = ("c", "#", "%")


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, sep, den = str(text).partition("/")
    if not sep:
        raise ParseError(f"expected 'num/den', got {text!r}")
    try:
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad fraction {text!r}") from None


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith(_COMMENT):
            yield lineno, line


def parse_dimacs_graph(text: str) -> Graph:
    """Parse ``p edge N M`` followed by ``M`` lines ``e u v`` (1-indexed)."""
    header = None
    pairs = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"bad problem line {line!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"bad problem line {line!r}", lineno) from None
            if min(header) < 0:
                raise ParseError("negative count in problem line", lineno)
        elif parts[0] == "e":
            if header is None:
                raise ParseError("edge before the problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"bad edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f"bad edge line {line!r}", lineno) from None
            pairs.append((u, v))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if header is None:
        raise ParseError("missing 'p edge' line")
    n, m = header
    if len(pairs) != m:
        raise CountMismatch(f"problem line declares {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def parse_edge_list(text: str) -> Graph:
    """Whitespace-separated ``u v`` pairs, 0-indexed; ``n`` is the largest id plus one."""
    pairs = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected 'u v', got {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {line!r}", lineno)
        pairs.append((u, v))
    n = 1 + max((max(p) for p in pairs), default=-1)
    return build_graph(n, pairs)


def read_graph_text(text: str) -> Graph:
    """Auto-detect DIMACS (first content line starts with ``p``) or an edge list."""
    for _, line in _content_lines(text):
        if line.split()[0] == "p":
            return parse_dimacs_graph(text)
        break
    return parse_edge_list(text)


def write_dimacs_graph(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}\n"]
    out += [f"e {u + 1} {v + 1}\n" for u, v in g.edges]
    return "".join(out)


# --- reports -----------------------------------------------------------------

_FRACTION_FIELDS = {"avg_degree", "mad"}


def _field_names():
    return REPORT_FIELDS


def _report_values(report) -> dict:
    values = {}
    for name in _field_names():
        v = getattr(report, name)
        values[name] = format_fraction(v) if name in _FRACTION_FIELDS else v
    return values


def csv_header() -> str:
    return ",".join(_field_names()) + "\n"


def serialize_report(report, format: str = "json") -> str:
    """Render a ``BoundsReport`` as ``json``, ``csv-row`` or ``table``.

    Field order is fixed. Missing optional values are ``null`` in JSON and
    empty cells in CSV and the table.
    """
    values = _report_values(report)
    if format == "json":
        return json.dumps(values, separators=(",", ":")) + "\n"
    if format == "csv-row":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_csv_cell(v) for v in values.values())
        return buf.getvalue()
    if format == "table":
        width = max(map(len, values))
        return "".join(f"{k:<{width}}  {_csv_cell(v)}\n" for k, v in values.items())
    raise ValueError(f"unknown report format {format!r}")


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _report_from_values(values: dict):
    kwargs = {}
    for name in _field_names():
        if name not in values:
            raise ParseError(f"report is missing field {name!r}")
        v = values[name]
        if name in _FRACTION_FIELDS:
            v = parse_fraction(v)
        kwargs[name] = v
    return BoundsReport(**kwargs)


def parse_report(text: str, format: str = "json"):
    """Inverse of :func:`serialize_report` for ``json`` and ``csv-row``.

    The CSV form accepts either a bare data row or a header followed by one row.
    """
    if format == "json":
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return _report_from_values(values)
    if format == "csv-row":
        rows = [r for r in csv.reader(io.StringIO(text)) if r]
        if rows and rows[0] == list(_field_names()):
            rows = rows[1:]
        if len(rows) != 1:
            raise ParseError(f"expected one CSV data row, got {len(rows)}")
        values = {}
        for name, cell in zip(_field_names(), rows[0]):
            values[name] = _parse_cell(name, cell)
        return _report_from_values(values)
    raise ValueError(f"cannot parse report format {format!r}")


def _parse_cell(name, cell):
    if name in _FRACTION_FIELDS:
        return cell
    if cell == "":
        return None
    if cell in ("true", "false"):
        return cell == "true"
    try:
        return int(cell)
    except ValueError:
        raise ParseError(f"bad value {cell!r} for {name}") from None


@dataclass(frozen=True)
class ReportDocument:
    """A report plus where it came from."""

    report: BoundsReport
    input_path: Optional[str] = None
    tool_version: Optional[str] = None
    seed: Optional[int] = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        values = _report_values(self.report)
        values["provenance"] = {
            "input": self.input_path,
            "tool_version": self.tool_version,
            "seed": self.seed,
            **self.extra,
        }
        return json.dumps(values, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        prov = dict(values.pop("provenance", None) or {})
        return cls(
            report=_report_from_values(values),
            input_path=prov.pop("input", None),
            tool_version=prov.pop("tool_version", None),
            seed=prov.pop("seed", None),
            extra=prov,
        )
