"""Concrete Lie algebras given by sparse structure constants.

Elements are sparse coordinate dictionaries ``{basis index: scalar}``.  The
scalars may be ``int``, ``Fraction`` or :class:`~artifact.matlie.scalars.QI`;
structure constants are integers or rationals, so the same bracket works over
both fields.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

Vec = Dict[int, object]
Table = List[Dict[int, Dict[int, object]]]


def vclean(x: Vec) -> Vec:
    return {k: v for k, v in x.items() if v}


def vadd(*xs: Vec) -> Vec:
    out: Vec = {}
    for x in xs:
        for k, v in x.items():
            out[k] = out.get(k, 0) + v
    return vclean(out)


def vscale(c, x: Vec) -> Vec:
    return vclean({k: c * v for k, v in x.items()})


def vsub(x: Vec, y: Vec) -> Vec:
    return vadd(x, vscale(-1, y))


def vcombo(terms: Iterable[Tuple[object, Vec]]) -> Vec:
    out: Vec = {}
    for c, x in terms:
        if not c:
            continue
        for k, v in x.items():
            out[k] = out.get(k, 0) + c * v
    return vclean(out)


class LieModelError(ValueError):
    """Inconsistent model data or failed exact verification."""


@dataclass
class LieModel:
    """Basis labels plus a sparse bracket table ``table[a][b] = {c: coeff}``.

    ``cartan`` lists the basis indices spanning the standard Cartan subalgebra.
    ``kind`` is ``"matrix"`` or ``"chevalley"``; ``meta`` holds realisation
    data (matrices, root data) used by constructors and checks.
    """

    name: str
    labels: List[str]
    table: Table
    cartan: List[int]
    kind: str
    meta: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis(self, i: int) -> Vec:
        return {i: 1}

    def bracket(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        tab = self.table
        for a, xa in x.items():
            row = tab[a]
            if not row:
                continue
            for b, yb in y.items():
                t = row.get(b)
                if t is None:
                    continue
                c0 = xa * yb
                for c, v in t.items():
                    out[c] = out.get(c, 0) + c0 * v
        return vclean(out)

    def basis_bracket(self, a: int, b: int) -> Vec:
        return dict(self.table[a].get(b, {}))

    def ad_power(self, x: Vec, y: Vec, k: int) -> Vec:
        for _ in range(k):
            y = self.bracket(x, y)
        return y

    # ------------------------------------------------------------ checks

    def check_antisymmetry(self) -> Optional[Tuple[int, int]]:
        for a in range(self.dim):
            if self.table[a].get(a):
                return (a, a)
            for b, t in self.table[a].items():
                back = self.table[b].get(a, {})
                if vadd(t, back):
                    return (a, b)
        return None

    def jacobi_triple(self, a: int, b: int, c: int) -> Vec:
        x, y, z = {a: 1}, {b: 1}, {c: 1}
        return vadd(
            self.bracket(x, self.bracket(y, z)),
            self.bracket(y, self.bracket(z, x)),
            self.bracket(z, self.bracket(x, y)),
        )

    def jacobi_sweep(self, samples: Optional[int] = None, seed: int = 0) -> Tuple[int, Optional[Tuple[int, int, int]]]:
        """Check Jacobi on all ordered basis triples (``samples=None``) or on
        ``samples`` seeded random triples.  Returns (count checked, first failure)."""
        n = self.dim
        if samples is None:
            it: Iterable[Tuple[int, int, int]] = product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            it = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
        count = 0
        tab = self.table
        for a, b, c in it:
            count += 1
            # quick path: all three brackets of basis elements
            if self.jacobi_triple(a, b, c):
                return count, (a, b, c)
        return count, None

    def adjoint_weights(self, h: Vec) -> List[int]:
        """ad_h eigenvalues on the basis, requiring ad_h to be diagonal."""
        out = []
        for b in range(self.dim):
            img = self.bracket(h, {b: 1})
            extra = [k for k in img if k != b]
            if extra:
                raise LieModelError(f"ad_h is not diagonal on basis element {self.labels[b]}")
            w = Fraction(img.get(b, 0))
            if w.denominator != 1:
                raise LieModelError("non-integral ad_h eigenvalue")
            out.append(int(w))
        return out


def weight_blocks(weights: Sequence[int]) -> Dict[int, List[int]]:
    blocks: Dict[int, List[int]] = {}
    for i, w in enumerate(weights):
        blocks.setdefault(w, []).append(i)
    return dict(sorted(blocks.items()))


def ad_block(model: LieModel, x: Vec, src: Sequence[int], dst: Sequence[int]) -> List[List[object]]:
    """Matrix of ``ad_x`` from span(src) to span(dst) (rows = dst)."""
    pos = {d: i for i, d in enumerate(dst)}
    m = [[0] * len(src) for _ in dst]
    for j, s in enumerate(src):
        img = model.bracket(x, {s: 1})
        for k, v in img.items():
            i = pos.get(k)
            if i is None:
                raise LieModelError("ad_x leaves the target block")
            m[i][j] = v
    return m
