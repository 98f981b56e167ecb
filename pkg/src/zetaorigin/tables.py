"""Named tables and their JSON / CSV / markdown renderings.

Layouts follow the printed tables: rows are the first index (``r`` for the
``C`` tables, ``m`` or ``n`` otherwise), blank cells where an entry is
undefined (``i > r``).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .bernoulli import stirling1_polynomial
from .errors import ParameterError
from .exact import Poly, format_poly, format_rational, parse_rational
from .gregory import g1, generalized_gregory, generalized_gregory_poly, gtilde, lambda_polys
from .index_sets import coefficient_C, coefficient_C_poly, primitive

__all__ = ["TABLES", "TableData", "build_table", "render", "parse_json_table"]

FORMATS = ("json", "csv", "markdown")


@dataclass(frozen=True)
class TableSpec:
    title: str
    row_label: str
    col_label: str
    default: int
    limit: int
    uses_r: bool = False


TABLES = {
    "cir": TableSpec("C_{i,r}", "r", "i", 7, 8, uses_r=True),
    "gmn": TableSpec("G_{m,n}", "m", "n", 6, 16),
    "gtilde": TableSpec("Gt_{m,n}", "m", "n", 6, 16),
    "st1": TableSpec("[n;m]_x", "n", "m", 4, 16),
    "g1": TableSpec("G1_{m,n}", "m", "n", 6, 16),
    "gmna": TableSpec("G_{m,n}(a)", "m", "n", 3, 10),
    "cira": TableSpec("C_{i,r}(a)", "r", "i", 3, 6, uses_r=True),
    "lambda": TableSpec("lambda_n(a)", "n", "", 4, 16),
}


@dataclass(frozen=True)
class TableData:
    name: str
    title: str
    row_label: str
    col_label: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cells: dict  # (row, col) -> Fraction | Poly | None
    var: str | None = None

    def row_values(self, row: int) -> list:
        return [self.cells.get((row, c)) for c in self.cols]


def build_table(name: str, bound: int | None = None) -> TableData:
    if name not in TABLES:
        raise ParameterError(f"unknown table {name!r}; choose from {', '.join(TABLES)}")
    spec = TABLES[name]
    N = spec.default if bound is None else bound
    if not 1 <= N <= spec.limit:
        raise ParameterError(f"bound {N} for table {name!r} outside 1..{spec.limit}")
    var = None
    if name == "cir":
        rows, cols = range(1, N + 1), range(1, N + 1)
        cells = {(r, i): coefficient_C(primitive(i, r)) for r in rows for i in range(1, r + 1)}
    elif name == "cira":
        rows, cols, var = range(1, N + 1), range(1, N + 1), "a"
        cells = {(r, i): coefficient_C_poly(primitive(i, r)) for r in rows for i in range(1, r + 1)}
    elif name == "st1":
        rows, cols, var = range(N + 1), range(N + 1), "x"
        cells = {(n, m): stirling1_polynomial(n, m) for n in rows for m in cols}
    elif name == "lambda":
        rows, cols, var = range(1, N + 1), (0,), "a"
        cells = {(n, 0): p for n, p in enumerate(lambda_polys(N), start=1)}
    else:
        t = {"gmn": generalized_gregory, "g1": g1, "gtilde": gtilde,
             "gmna": generalized_gregory_poly}[name](N, N)
        rows, cols, cells = t.rows, t.cols, dict(t.entries)
        if name == "gmna":
            var = "a"
    return TableData(name, spec.title, spec.row_label, spec.col_label,
                     tuple(rows), tuple(cols), cells, var)


def _cell_text(v) -> str:
    if v is None:
        return ""
    if isinstance(v, Poly):
        return format_poly(v)
    return format_rational(v)


def _cell_json(v):
    if v is None:
        return None
    if isinstance(v, Poly):
        return v.to_json()
    return format_rational(v)


def render(table: TableData, fmt: str) -> str:
    if fmt == "json":
        data = {
            "table": table.name,
            "title": table.title,
            "row_label": table.row_label,
            "col_label": table.col_label,
            "rows": list(table.rows),
            "cols": list(table.cols),
            "kind": "poly" if table.var else "rational",
            "var": table.var,
            "entries": [[_cell_json(v) for v in table.row_values(r)] for r in table.rows],
        }
        return json.dumps(data, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"{table.row_label}\\{table.col_label}"] + list(table.cols))
        for r in table.rows:
            w.writerow([r] + [_cell_text(v) for v in table.row_values(r)])
        return buf.getvalue()
    if fmt == "markdown":
        head = f"| {table.row_label} \\ {table.col_label} | " + " | ".join(str(c) for c in table.cols) + " |"
        lines = [f"**{table.title}**", "", head, "|" + "---|" * (len(table.cols) + 1)]
        for r in table.rows:
            lines.append(f"| {r} | " + " | ".join(_cell_text(v) for v in table.row_values(r)) + " |")
        return "\n".join(lines) + "\n"
    raise ParameterError(f"unknown format {fmt!r}")


def parse_json_table(text: str) -> TableData:
    """Inverse of ``render(table, "json")``."""
    data = json.loads(text)
    rows, cols = tuple(data["rows"]), tuple(data["cols"])
    var = data["var"]
    cells = {}
    for r, row in zip(rows, data["entries"]):
        for c, v in zip(cols, row):
            if v is None:
                continue
            cells[r, c] = Poly.from_json(v, var) if data["kind"] == "poly" else parse_rational(v)
    return TableData(data["table"], data["title"], data["row_label"], data["col_label"],
                     rows, cols, cells, var)


def format_value(v) -> str:
    return _cell_text(v)


def value_json(v):
    return _cell_json(v)
