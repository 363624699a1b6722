"""Chevalley bases from root data.

Structure constants ``N_{a,b}`` are fixed by declaring every extraspecial pair
positive, ``N = p + 1``, and propagating through the standard four-root and
three-root identities.  The root order is the (height, coefficient) order of
:func:`artifact.rootsys.build_root_system`.  Correctness is established by the
Jacobi sweep, not by comparison with a published table.

Basis layout: ``h_1..h_r``, then ``e_a`` for positive roots, then ``e_{-a}``
in the same order.  ``[e_a, e_{-a}] = h_a`` and ``N_{-a,-b} = -N_{a,b}``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..rootsys import AlgebraType, RootSystem, root_system
from .model import LieModel, LieModelError

Root = Tuple[int, ...]


class _Constants:
    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        self.pos = rs.positive_roots
        self.order = {r: k for k, r in enumerate(self.pos)}
        self.memo: Dict[Tuple[Root, Root], int] = {}
        self.extraspecial: Dict[Root, Tuple[Root, Root]] = {}
        for xi in self.pos:
            for a in self.pos:
                b = _sub(xi, a)
                if b in self.order and self.order[a] < self.order[b]:
                    self.extraspecial[xi] = (a, b)
                    break

    def sq(self, r: Root) -> int:
        return self.rs.inner(r, r)

    def is_root(self, r: Root) -> bool:
        return any(r) and self.rs.is_root(r)

    def string_p(self, a: Root, b: Root) -> int:
        """Largest p with b - p a a root."""
        p = 0
        cur = _sub(b, a)
        while self.is_root(cur):
            p += 1
            cur = _sub(cur, a)
        return p

    def n(self, a: Root, b: Root) -> int:
        s = _add(a, b)
        if not self.is_root(s):
            return 0
        key = (a, b)
        got = self.memo.get(key)
        if got is not None:
            return got
        val = self._compute(a, b, s)
        self.memo[key] = val
        return val

    def _compute(self, a: Root, b: Root, s: Root) -> int:
        a_pos, b_pos = a in self.order, b in self.order
        if not a_pos and not b_pos:
            return -self.n(_neg(a), _neg(b))
        if a_pos and b_pos:
            if self.order[a] > self.order[b]:
                return -self.n(b, a)
            return self._special(a, b, s)
        c = _neg(s)
        # a + b + c = 0 and N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
        if (b in self.order) == (c in self.order):
            val = Fraction(self.n(b, c) * self.sq(c), self.sq(a))
        else:
            val = Fraction(self.n(c, a) * self.sq(c), self.sq(b))
        if val.denominator != 1:
            raise LieModelError("non-integral structure constant")
        return int(val)

    def _special(self, g: Root, d: Root, xi: Root) -> int:
        a, b = self.extraspecial[xi]
        if (g, d) == (a, b):
            return self.string_p(a, b) + 1
        nab = self.n(a, b)
        total = Fraction(0)
        bg = _sub(b, g)
        if self.is_root(bg):
            total += Fraction(self.n(b, _neg(g)) * self.n(a, _neg(d)), self.sq(bg))
        ag = _sub(a, g)
        if self.is_root(ag):
            total += Fraction(self.n(_neg(g), a) * self.n(b, _neg(d)), self.sq(ag))
        val = Fraction(self.sq(xi)) / nab * total
        if val.denominator != 1 or val == 0:
            raise LieModelError(f"bad special structure constant for {g}, {d}")
        return int(val)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _neg(a: Root) -> Root:
    return tuple(-x for x in a)


def _root_label(r: Root) -> str:
    sign = "e" if any(c > 0 for c in r) else "f"
    return sign + "".join(str(abs(c)) for c in r)


@lru_cache(maxsize=None)
def chevalley_algebra(t: AlgebraType) -> LieModel:
    """Chevalley-basis model of the complex simple algebra of type ``t``."""
    if isinstance(t, str):
        t = AlgebraType.parse(t)
    rs = root_system(t)
    r = rs.rank
    pos = list(rs.positive_roots)
    npos = len(pos)
    roots: List[Optional[Root]] = [None] * r + pos + [_neg(a) for a in pos]
    index_of: Dict[Root, int] = {root: k for k, root in enumerate(roots) if root is not None}
    labels = [f"h{i + 1}" for i in range(r)] + [_root_label(a) for a in roots[r:]]
    dim = r + 2 * npos
    table: List[Dict[int, Dict[int, int]]] = [{} for _ in range(dim)]
    consts = _Constants(rs)

    def put(x: int, y: int, val: Dict[int, int]) -> None:
        table[x][y] = val
        table[y][x] = {k: -v for k, v in val.items()}

    for i in range(r):
        for k in range(r, dim):
            w = rs.pairing(roots[k], i)
            if w:
                put(i, k, {k: w})
    for x in range(r, dim):
        a = roots[x]
        for y in range(x + 1, dim):
            b = roots[y]
            s = _add(a, b)
            if not any(s):
                coeffs = rs.coroot_coefficients(a)
                put(x, y, {i: c for i, c in enumerate(coeffs) if c})
                continue
            nab = consts.n(a, b)
            if nab:
                put(x, y, {index_of[s]: nab})
    return LieModel(
        name=t.name,
        labels=labels,
        table=table,
        cartan=list(range(r)),
        kind="chevalley",
        meta={"type": t, "rs": rs, "roots": roots, "index_of": index_of},
    )


def root_vector(model: LieModel, root) -> int:
    """Basis index of ``e_root`` in a Chevalley model."""
    return model.meta["index_of"][tuple(root)]


def cartan_element(model: LieModel, values) -> Dict[int, Fraction]:
    """The ``h`` in the Cartan with ``alpha_i(h) = values[i]``.

    Writing ``h = sum c_j h_j`` gives ``alpha_i(h) = sum_j c_j A[j][i]``, so
    ``c`` solves ``A^T c = values``.
    """
    from .linalg import solve

    rs: RootSystem = model.meta["rs"]
    r = rs.rank
    a = rs.cartan_matrix
    columns = [{i: a[j][i] for i in range(r) if a[j][i]} for j in range(r)]
    sol = solve(columns, {i: v for i, v in enumerate(values) if v})
    if sol is None:
        raise LieModelError("Cartan matrix is singular")
    return {j: c for j, c in enumerate(sol) if c}
