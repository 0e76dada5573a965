"""Result records and deterministic table serialization.

A RunReport captures everything the compute command can say about one
group. Tables are emitted as JSON (array of objects), CSV (header plus
rows), or aligned text. Degrees are reduced fractions rendered as
"num/den", or as 6-significant-digit decimals (round-half-even) when
requested. Output is byte-identical across repeated runs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Sequence

REPORT_FIELDS = (
    "group",
    "order",
    "l1",
    "lattice",
    "csd",
    "sd",
    "ndeg",
    "cdeg",
    "d",
    "csd_star",
    "is_iwasawa",
    "wall_ms",
)

FORMATS = ("json", "csv", "text")


@dataclass
class RunReport:
    """One group's computed degrees; optional fields are None when skipped."""

    group: str
    order: int
    l1: int
    csd: Fraction
    d: Fraction
    lattice: int | None = None
    sd: Fraction | None = None
    ndeg: Fraction | None = None
    cdeg: Fraction | None = None
    csd_star: Fraction | None = None
    is_iwasawa: bool | None = None
    wall_ms: float | None = None

    def cells(self, decimal: bool = False) -> dict[str, object]:
        """Field-name -> JSON-ready value, in REPORT_FIELDS order."""
        return {
            "group": self.group,
            "order": self.order,
            "l1": self.l1,
            "lattice": self.lattice,
            "csd": degree_str(self.csd, decimal),
            "sd": degree_str(self.sd, decimal),
            "ndeg": degree_str(self.ndeg, decimal),
            "cdeg": degree_str(self.cdeg, decimal),
            "d": degree_str(self.d, decimal),
            "csd_star": degree_str(self.csd_star, decimal),
            "is_iwasawa": self.is_iwasawa,
            "wall_ms": None if self.wall_ms is None else round(self.wall_ms, 3),
        }


def decimal_str(value: Fraction) -> str:
    """Decimal expansion with 6 significant digits, ties to even."""
    with localcontext() as ctx:
        ctx.prec = 6
        ctx.rounding = ROUND_HALF_EVEN
        quot = Decimal(value.numerator) / Decimal(value.denominator)
    return str(quot)


def degree_str(value: Fraction | None, decimal: bool = False) -> str | None:
    if value is None:
        return None
    if decimal:
        return decimal_str(value)
    return f"{value.numerator}/{value.denominator}"


def _text_cell(value: object) -> str:
    if value is None:
        return "-"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def emit_rows(fields: Sequence[str], rows: Sequence[dict[str, object]], fmt: str) -> bytes:
    """Serialize rows (dicts over `fields`) as a deterministic table."""
    if fmt == "json":
        shaped = [{name: row.get(name) for name in fields} for row in rows]
        return (json.dumps(shaped, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_csv_cell(row.get(name)) for name in fields])
        return buf.getvalue().encode()
    if fmt == "text":
        table = [list(fields)]
        for row in rows:
            table.append([_text_cell(row.get(name)) for name in fields])
        widths = [max(len(line[i]) for line in table) for i in range(len(fields))]
        lines = [
            "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip()
            for line in table
        ]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def emit(reports: Sequence[RunReport], fmt: str, decimal: bool = False) -> bytes:
    """Serialize RunReports with the fixed field order."""
    return emit_rows(REPORT_FIELDS, [r.cells(decimal) for r in reports], fmt)
