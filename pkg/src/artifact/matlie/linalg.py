"""Exact linear algebra on sparse rows.

Rows are ``{column: value}`` dictionaries.  Incoming rows are cleared of
denominators (fraction-free form); the stored echelon basis is kept fully
reduced with unit pivots, so pivot rows stay short when the kernel is small and
every reduction step only touches the pivot row's support.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

SparseVec = Dict[int, object]


def _clean(row: SparseVec) -> SparseVec:
    return {k: v for k, v in row.items() if v}


def _primitive(row: SparseVec) -> SparseVec:
    """Scale a rational row to a primitive integer row (fraction-free form)."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // gcd(den, v.denominator)
    out = {k: int(v * den) for k, v in row.items()}
    g = 0
    for v in out.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


class RowSpace:
    """Incremental reduced row echelon form over Q."""

    def __init__(self, ncols: int) -> None:
        self.ncols = ncols
        self.rows: Dict[int, Dict[int, Fraction]] = {}  # pivot column -> row with unit pivot

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def full(self) -> bool:
        return len(self.rows) == self.ncols

    def reduce(self, row: SparseVec) -> Dict[int, Fraction]:
        r = {k: Fraction(v) for k, v in _primitive(_clean(row)).items()}
        for c in [c for c in r if c in self.rows]:
            a = r.get(c)
            if not a:
                continue
            for k, v in self.rows[c].items():
                nv = r.get(k, 0) - a * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def add(self, row: SparseVec) -> bool:
        """Insert a row; return True iff it was independent."""
        if self.full:
            return False
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        piv = r[c]
        r = {k: v / piv for k, v in r.items()}
        for pc, prow in self.rows.items():
            a = prow.get(c)
            if a:
                for k, v in r.items():
                    nv = prow.get(k, 0) - a * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.rows[c] = r
        return True

    def contains(self, row: SparseVec) -> bool:
        return not self.reduce(row)

    def nullspace(self) -> List[Dict[int, Fraction]]:
        """Basis of ``{x : row . x = 0 for all rows}``."""
        free = [c for c in range(self.ncols) if c not in self.rows]
        out = []
        for f in free:
            v: Dict[int, Fraction] = {f: Fraction(1)}
            for pc, prow in self.rows.items():
                a = prow.get(f)
                if a:
                    v[pc] = -a
            out.append(v)
        return out


def nullspace(rows: Iterable[SparseVec], ncols: int) -> List[Dict[int, Fraction]]:
    rs = RowSpace(ncols)
    for r in rows:
        rs.add(r)
        if rs.full:
            return []
    return rs.nullspace()


def rank(rows: Iterable[SparseVec], ncols: int) -> int:
    rs = RowSpace(ncols)
    for r in rows:
        rs.add(r)
    return rs.rank


def span_basis(vectors: Iterable[SparseVec], ncols: int) -> Tuple[RowSpace, List[SparseVec]]:
    """Greedy independent subset of ``vectors`` plus the row space they span."""
    rs = RowSpace(ncols)
    picked = []
    for v in vectors:
        if rs.add(v):
            picked.append(v)
    return rs, picked


def solve(columns: Sequence[SparseVec], target: SparseVec) -> Optional[List[Fraction]]:
    """Find ``x`` with ``sum_k x_k columns[k] = target``; ``None`` if impossible.

    Columns and target are sparse vectors over the same (arbitrary integer) row
    index set.  Returns one solution (free variables set to 0).
    """
    n = len(columns)
    eqs: Dict[int, Dict[int, object]] = {}
    for k, col in enumerate(columns):
        for r, v in col.items():
            if v:
                eqs.setdefault(r, {})[k] = v
    for r, v in target.items():
        if v:
            # a.x - t = 0, the last column carries -t
            eqs.setdefault(r, {})[n] = -v
    rs = RowSpace(n + 1)
    for row in eqs.values():
        rs.add(row)
    if n in rs.rows:
        return None
    x = [Fraction(0)] * n
    for pc, prow in rs.rows.items():
        x[pc] = -prow.get(n, Fraction(0))
    return x


def dense_inverse(m: Sequence[Sequence]) -> List[List[Fraction]]:
    """Inverse of a square rational matrix by Gauss-Jordan."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        rowc = [v / p for v in a[col]]
        a[col] = rowc
        nz = [j for j, v in enumerate(rowc) if v]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                ar = a[r]
                for j in nz:
                    ar[j] -= f * rowc[j]
    return [row[n:] for row in a]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a]
