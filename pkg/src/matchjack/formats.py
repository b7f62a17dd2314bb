"""
Table serialisation: JSON, CSV and LaTeX with a fixed entry order.

JSON layouts::

    {"n": 3, "kind": "c", "entries": [{"lambda": "2,1", "mu": "3", "nu": "1,1,1", "poly_b": [0, 1]}, ...]}
    {"n": 3, "kind": "marginal", "entries": [{"lambda": ..., "mu": ..., "l": 2, "poly_b": [...]}, ...]}

``poly_b`` lists coefficients from the constant term up.  Rational
coefficients (only the h table has them) are written as strings "p/q".
Count tables (kinds a and atilde) carry an integer ``value`` instead.
Entries are sorted by the total order on every partition index.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .exact import UniPoly, Var
from .matrices import latex_partition
from .partitions import from_str, to_str, total_key

INDEX_NAMES = ("lambda", "mu", "nu")


def _coef(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return str(c)
    return int(c)


def poly_to_list(p: UniPoly) -> list:
    return [_coef(c) for c in p.coeffs]


def poly_from_list(coeffs) -> UniPoly:
    return UniPoly([Fraction(c) if isinstance(c, str) else int(c) for c in coeffs], Var.B)


def _sort_key(key) -> tuple:
    return tuple(total_key(k) if isinstance(k, tuple) else (k,) for k in key)


def table_entries(table: dict, names=INDEX_NAMES) -> list[dict]:
    """Rows {name: index, ..., poly_b | value} in the canonical order."""
    rows = []
    for key in sorted(table, key=_sort_key):
        row = {name: (to_str(k) if isinstance(k, tuple) else k) for name, k in zip(names, key)}
        v = table[key]
        if isinstance(v, UniPoly):
            row["poly_b"] = poly_to_list(v)
        else:
            row["value"] = int(v)
        rows.append(row)
    return rows


def index_names(kind: str) -> tuple:
    return ("lambda", "mu", "l") if kind == "marginal" else INDEX_NAMES


def to_json(n: int, kind: str, table: dict) -> str:
    doc = {"n": n, "kind": kind, "entries": table_entries(table, index_names(kind))}
    return json.dumps(doc, indent=1) + "\n"


def to_csv(n: int, kind: str, table: dict) -> str:
    names = index_names(kind)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    rows = table_entries(table, names)
    has_poly = bool(rows) and "poly_b" in rows[0]
    w.writerow([*names, "poly_b" if has_poly else "value", *(["human"] if has_poly else [])])
    for key, row in zip(sorted(table, key=_sort_key), rows):
        idx = [row[k] for k in names]
        if has_poly:
            w.writerow([*idx, " ".join(str(c) for c in row["poly_b"]), str(table[key])])
        else:
            w.writerow([*idx, row["value"]])
    return buf.getvalue()


def _latex_index(k) -> str:
    return "$" + latex_partition(k) + "$" if isinstance(k, tuple) else str(k)


def to_latex(n: int, kind: str, table: dict) -> str:
    names = index_names(kind)
    head = {"lambda": "$\\lambda$", "mu": "$\\mu$", "nu": "$\\nu$", "l": "$l$"}
    lines = [
        "\\begin{tabular}{|" + "c|" * (len(names) + 1) + "}",
        "\\hline",
        " & ".join(head[x] for x in names) + f" & {kind} \\\\ \\hline",
    ]
    for key in sorted(table, key=_sort_key):
        v = table[key]
        val = "$" + str(v) + "$" if isinstance(v, UniPoly) else str(v)
        lines.append(" & ".join(_latex_index(k) for k in key) + f" & {val} \\\\ \\hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


EMITTERS = {"json": to_json, "csv": to_csv, "latex": to_latex}


def emit(n: int, kind: str, table: dict, fmt: str) -> str:
    return EMITTERS[fmt](n, kind, table)


def load_table(text: str) -> tuple[int, str | None, dict]:
    """Parse a JSON table (coefficient or marginal layout) back into a dict."""
    doc = json.loads(text)
    try:
        n = int(doc["n"])
        entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed table document: {exc}") from None
    out = {}
    for e in entries:
        if "l" in e:
            key = (from_str(e["lambda"]), from_str(e["mu"]), int(e["l"]))
        else:
            key = (from_str(e["lambda"]), from_str(e["mu"]), from_str(e["nu"]))
        if any(isinstance(k, tuple) and sum(k) != n for k in key):
            raise ValueError(f"entry {e} does not have size {n}")
        out[key] = poly_from_list(e["poly_b"]) if "poly_b" in e else int(e["value"])
    return n, doc.get("kind"), out


def load_marginals(text: str) -> tuple[int, dict]:
    """Marginal table in the (lambda, mu, l) layout; missing keys count as zero."""
    n, _, table = load_table(text)
    if any(len(k) != 3 or not isinstance(k[2], int) for k in table):
        raise ValueError("marginal file must use the (lambda, mu, l) layout")
    return n, _ZeroDefault(table)


class _ZeroDefault(dict):
    def __missing__(self, key):
        return UniPoly([], Var.B)
