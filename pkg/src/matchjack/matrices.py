"""
Small exact matrices with partition labels on rows and columns.

Entries are ints (or Fractions during elimination).  Determinants use
fraction-free Bareiss elimination; inverses use Gauss-Jordan over the
rationals and are checked for integrality when requested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .partitions import to_str


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix, exact, no fractions."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


@dataclass(frozen=True)
class LabeledMatrix:
    """Integer matrix with partition labels; ``entries[i][j]`` sits at (rows[i], cols[j])."""

    rows: tuple
    cols: tuple
    entries: tuple
    row_name: str = ""
    col_name: str = ""

    def __post_init__(self):
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise ValueError("entry shape does not match labels")

    @classmethod
    def build(cls, rows, cols, fn: Callable, row_name="", col_name="") -> "LabeledMatrix":
        rows, cols = tuple(rows), tuple(cols)
        return cls(rows, cols, tuple(tuple(fn(r, c) for c in cols) for r in rows), row_name, col_name)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def __getitem__(self, key):
        r, c = key
        return self.entries[self.rows.index(r)][self.cols.index(c)]

    def tolist(self) -> list[list]:
        return [list(r) for r in self.entries]

    def det(self) -> int:
        if len(self.rows) != len(self.cols):
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det(self.entries)

    def transpose(self) -> "LabeledMatrix":
        return LabeledMatrix(
            self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else (),
            self.col_name, self.row_name,
        )

    def __matmul__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        if tuple(self.cols) != tuple(other.rows):
            raise ValueError("inner labels do not match")
        cols_other = list(zip(*other.entries)) if other.entries else [() for _ in other.cols]
        out = tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in cols_other) for row in self.entries
        )
        return LabeledMatrix(self.rows, other.cols, out, self.row_name, other.col_name)

    def inverse(self, integral: bool = True) -> "LabeledMatrix":
        """Inverse with rows and columns swapped; checks integrality by default."""
        inv = rational_inverse(self.entries)
        if integral:
            for row in inv:
                for x in row:
                    if x.denominator != 1:
                        raise ArithmeticError("inverse is not integral (matrix not unimodular)")
            inv = [[int(x) for x in row] for row in inv]
        return LabeledMatrix(self.cols, self.rows, tuple(tuple(r) for r in inv), self.col_name, self.row_name)

    def submatrix(self, row_pred: Callable, col_pred: Callable) -> "LabeledMatrix":
        ri = [i for i, r in enumerate(self.rows) if row_pred(r)]
        ci = [j for j, c in enumerate(self.cols) if col_pred(c)]
        return LabeledMatrix(
            tuple(self.rows[i] for i in ri),
            tuple(self.cols[j] for j in ci),
            tuple(tuple(self.entries[i][j] for j in ci) for i in ri),
            self.row_name, self.col_name,
        )

    def reorder(self, rows, cols) -> "LabeledMatrix":
        return LabeledMatrix.build(rows, cols, lambda r, c: self[r, c], self.row_name, self.col_name)

    def is_upper_unitriangular(self) -> bool:
        n = len(self.rows)
        return all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(n) for j in range(n) if i >= j
        )

    def is_lower_unitriangular(self) -> bool:
        return self.transpose().is_upper_unitriangular()

    # -- emitters -----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "row_name": self.row_name,
            "col_name": self.col_name,
            "rows": [to_str(r) for r in self.rows],
            "cols": [to_str(c) for c in self.cols],
            "entries": [[int(x) if isinstance(x, int) else str(x) for x in r] for r in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_text(self) -> str:
        head = [f"{self.row_name} \\ {self.col_name}".strip()] + [to_str(c) for c in self.cols]
        body = [[to_str(r)] + [str(x) for x in row] for r, row in zip(self.rows, self.entries)]
        widths = [max(len(line[k]) for line in [head] + body) for k in range(len(head))]
        fmt = lambda line: "  ".join(s.rjust(w) for s, w in zip(line, widths))
        return "\n".join(fmt(line) for line in [head] + body)

    def to_latex(self) -> str:
        def lab(p):
            return "$" + latex_partition(p) + "$"

        lines = [
            "\\begin{tabular}{|" + "c|" * (len(self.cols) + 1) + "}",
            "\\hline",
            f"${_latex_name(self.row_name)} \\backslash {_latex_name(self.col_name)}$ & "
            + " & ".join(lab(c) for c in self.cols) + " \\\\ \\hline",
        ]
        for r, row in zip(self.rows, self.entries):
            lines.append(lab(r) + " & " + " & ".join(str(x) for x in row) + " \\\\ \\hline")
        lines.append("\\end{tabular}")
        return "\n".join(lines)


_LATEX_NAMES = {
    "c": "\\mathfrak{c}_\\rho",
    "f": "\\mathfrak{f}_\\lambda",
    "m": "\\mathfrak{m}_\\mu",
    "g": "\\mathfrak{g}_\\pi",
    "e": "e_\\lambda",
    "pi": "\\pi",
    "rho": "\\rho",
}


def _latex_name(name: str) -> str:
    return _LATEX_NAMES.get(name, name)


def latex_partition(p) -> str:
    """``[2^2,1]`` style with exponents for repeated parts."""
    if not p:
        return "\\emptyset"
    out = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        m = j - i
        out.append(f"{p[i]}^{m}" if m > 1 else str(p[i]))
        i = j
    return "[" + ",".join(out) + "]"
