"""Exact sparse integer linear algebra.

Rank is computed by fraction-free elimination over the integers: rows are
combined as p*r - f*rp and renormalized by their gcd, so no floating point
or modular arithmetic ever decides a rank.  Pivoting prefers unit entries
in low-fill positions, which keeps boundary-matrix eliminations close to
integer row subtractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class SparseIntegerMatrix:
    """Sparse matrix over the integers, keyed by (row, col)."""

    def __init__(self, rows: int, cols: int,
                 entries: dict[tuple[int, int], int] | None = None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], int] = {}
        if entries:
            for (r, c), v in entries.items():
                if v:
                    if not (0 <= r < rows and 0 <= c < cols):
                        raise ValueError(f"entry ({r},{c}) out of bounds")
                    self.entries[(r, c)] = v

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseIntegerMatrix)
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"SparseIntegerMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def row_dicts(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "SparseIntegerMatrix":
        return SparseIntegerMatrix(
            self.cols, self.rows,
            {(c, r): v for (r, c), v in self.entries.items()})

    def __matmul__(self, other: "SparseIntegerMatrix") -> "SparseIntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        rows_other = other.row_dicts()
        prod: dict[tuple[int, int], int] = {}
        by_row: dict[int, dict[int, int]] = {}
        for (r, c), v in self.entries.items():
            by_row.setdefault(r, {})[c] = v
        for r, row in by_row.items():
            acc: dict[int, int] = {}
            for c, v in row.items():
                for c2, w in rows_other[c].items():
                    acc[c2] = acc.get(c2, 0) + v * w
            for c2, val in acc.items():
                if val:
                    prod[(r, c2)] = val
        return SparseIntegerMatrix(self.rows, other.cols, prod)

    def __add__(self, other: "SparseIntegerMatrix") -> "SparseIntegerMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return SparseIntegerMatrix(self.rows, self.cols, out)

    def __neg__(self) -> "SparseIntegerMatrix":
        return SparseIntegerMatrix(
            self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "SparseIntegerMatrix") -> "SparseIntegerMatrix":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.entries

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product over whatever arithmetic vec carries."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = [0] * self.rows
        for (r, c), v in self.entries.items():
            out[r] += v * vec[c]
        return out

    def rank(self) -> int:
        return rank_of_rows(self.row_dicts())

    def to_triplet_text(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        for (r, c) in sorted(self.entries):
            lines.append(f"{r} {c} {self.entries[(r, c)]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplet_text(cls, text: str) -> "SparseIntegerMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty triplet text")
        rows, cols, nnz = (int(x) for x in lines[0].split())
        entries = {}
        for ln in lines[1:]:
            r, c, v = ln.split()
            entries[(int(r), int(c))] = int(v)
        if len(entries) != nnz:
            raise ValueError("nnz header does not match entry count")
        return cls(rows, cols, entries)


def _normalize_row(row: dict[int, int]) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def rank_of_rows(rows: Iterable[dict[int, int]]) -> int:
    """Exact rank over the rationals of integer rows given as col->value."""
    live: dict[int, dict[int, int]] = {
        i: dict(r) for i, r in enumerate(rows) if r
    }
    col_rows: dict[int, set[int]] = {}
    for i, r in live.items():
        for c in r:
            col_rows.setdefault(c, set()).add(i)

    rank = 0
    while live:
        # pivot column: fewest live rows; pivot row: unit entry if
        # possible, then fewest entries (Markowitz-style fill control)
        c = min(col_rows, key=lambda col: (len(col_rows[col]), col))
        candidates = col_rows[c]
        best = None
        for i in candidates:
            key = (abs(live[i][c]) != 1, len(live[i]), i)
            if best is None or key < best[0]:
                best = (key, i)
        pi = best[1]
        prow = live.pop(pi)
        p = prow[c]
        for col in prow:
            col_rows[col].discard(pi)
            if not col_rows[col]:
                del col_rows[col]
        rank += 1

        for i in list(col_rows.get(c, ())):
            row = live[i]
            f = row[c]
            if f % p == 0:
                q = f // p
                updates = {col: -q * v for col, v in prow.items()}
            else:
                for col in list(row):
                    row[col] *= p
                updates = {col: -f * v for col, v in prow.items()}
            for col, dv in updates.items():
                nv = row.get(col, 0) + dv
                if nv:
                    if col not in row:
                        col_rows.setdefault(col, set()).add(i)
                    row[col] = nv
                else:
                    if col in row:
                        del row[col]
                        col_rows[col].discard(i)
                        if not col_rows[col]:
                            del col_rows[col]
            if f % p != 0:
                _normalize_row(row)
            if not row:
                del live[i]
    return rank


def nullspace(matrix: SparseIntegerMatrix) -> list[list[Fraction]]:
    """Exact rational kernel basis of an integer matrix.

    Returns vectors of length matrix.cols with the free variable set to 1,
    in ascending free-column order.  Dense elimination; intended for the
    moderate sizes of harmonic-form computations.
    """
    m, n = matrix.rows, matrix.cols
    a = [[Fraction(0)] * n for _ in range(m)]
    for (r, c), v in matrix.entries.items():
        a[r][c] = Fraction(v)

    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        sel = None
        for i in range(r, m):
            if a[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break

    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for pr, pc in pivots:
            vec[pc] = -a[pr][free]
        basis.append(vec)
    return basis


def stack(top: SparseIntegerMatrix, bottom: SparseIntegerMatrix) -> SparseIntegerMatrix:
    if top.cols != bottom.cols:
        raise ValueError("column mismatch")
    entries = dict(top.entries)
    for (r, c), v in bottom.entries.items():
        entries[(r + top.rows, c)] = v
    return SparseIntegerMatrix(top.rows + bottom.rows, top.cols, entries)


def identity(n: int) -> SparseIntegerMatrix:
    return SparseIntegerMatrix(n, n, {(i, i): 1 for i in range(n)})
