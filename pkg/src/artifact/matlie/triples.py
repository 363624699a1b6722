"""sl2-triples: verification, Jacobson-Morozov completion and construction
from weighted Dynkin diagrams."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..classify import QUAT_DISTINGUISHED_NODE
from ..partitions import Partition
from ..rootsys import DynkinLabels, RootSystem, root_weight
from .chevalley import cartan_element, root_vector
from .linalg import solve
from .matrix_models import from_matrix, jordan_triple_matrices
from .model import LieModel, LieModelError, Vec, vadd, vclean, vscale, vsub

RETRY_BOUND = 32


@dataclass
class Sl2Triple:
    model: LieModel
    e: Vec
    h: Vec
    f: Vec

    def defects(self) -> Dict[str, Vec]:
        m = self.model
        return {
            "[h,e]-2e": vsub(m.bracket(self.h, self.e), vscale(2, self.e)),
            "[h,f]+2f": vadd(m.bracket(self.h, self.f), vscale(2, self.f)),
            "[e,f]-h": vsub(m.bracket(self.e, self.f), self.h),
        }

    @property
    def is_valid(self) -> bool:
        return bool(self.e) and not any(self.defects().values())

    def verify(self) -> "Sl2Triple":
        bad = [k for k, v in self.defects().items() if v]
        if bad or not self.e:
            raise LieModelError(f"not an sl2-triple: {', '.join(bad) or 'e = 0'}")
        return self


def complete_f(model: LieModel, e: Vec, h: Vec, candidates: Optional[Sequence[int]] = None) -> Optional[Vec]:
    """``f`` with ``[e,f] = h`` and ``[h,f] = -2f``, searched in ``span(candidates)``."""
    cand = list(range(model.dim)) if candidates is None else list(candidates)
    d = model.dim
    cols = []
    for b in cand:
        img = dict(model.bracket(e, {b: 1}))
        for k, v in model.bracket(h, {b: 1}).items():
            img[d + k] = img.get(d + k, 0) + v
        img[d + b] = img.get(d + b, 0) + 2
        cols.append(vclean(img))
    sol = solve(cols, h)
    if sol is None:
        return None
    return vclean({b: c for b, c in zip(cand, sol)})


def jm_complete(model: LieModel, e: Vec) -> Sl2Triple:
    """Complete a nilpotent ``e`` to a triple with ``h`` in the standard Cartan.

    ``h = [e, z]`` is pinned by asking ``[e, z]`` to lie in the Cartan and
    ``[[e, z], e] = 2e``; both conditions are linear in ``z``.
    """
    if not e:
        raise LieModelError("e = 0 has no completion")
    d = model.dim
    cartan = set(model.cartan)
    cols = []
    images = []
    for b in range(d):
        v = model.bracket(e, {b: 1})
        images.append(v)
        col = {c: x for c, x in v.items() if c not in cartan}
        for c, x in model.bracket(v, e).items():
            col[d + c] = x
        cols.append(col)
    sol = solve(cols, {d + c: 2 * x for c, x in e.items()})
    if sol is None:
        raise LieModelError("no Cartan-valued h: completion failed")
    h = vadd(*(vscale(c, images[b]) for b, c in enumerate(sol) if c))
    f = complete_f(model, e, h)
    if f is None:
        raise LieModelError("no f completes (e, h)")
    return Sl2Triple(model, e, h, f).verify()


def triple_from_partition(model: LieModel, p: Partition, tag: Optional[str] = None) -> Sl2Triple:
    """Triple of a matrix model built blockwise from the Jordan type ``p``."""
    if model.kind != "matrix":
        raise LieModelError("partitions describe orbits in matrix models")
    e, h, f = jordan_triple_matrices(model.meta["family"], p, tag)
    return Sl2Triple(model, from_matrix(model, e), from_matrix(model, h), from_matrix(model, f)).verify()


def weight_two_roots(rs: RootSystem, labels: DynkinLabels) -> List[Tuple[int, ...]]:
    return [r for r in rs.positive_roots if root_weight(r, labels) == 2]


def triple_from_diagram(model: LieModel, labels, seed: int = 0) -> Sl2Triple:
    """Triple of a Chevalley model whose ``h`` has the given weighted diagram.

    ``e`` is first the plain sum of the weight-2 root vectors, then seeded
    random small-integer combinations; ``f`` is solved inside ``g_{-2}``.
    Small coefficients keep later kernel computations cheap.  Generic ``e`` lands in the dense orbit
    of ``G_0`` on ``g_2``; a failure after the retry bound means the labels are
    not the diagram of an even orbit.
    """
    if model.kind != "chevalley":
        raise LieModelError("triple_from_diagram needs a Chevalley model")
    rs: RootSystem = model.meta["rs"]
    if not isinstance(labels, DynkinLabels):
        labels = DynkinLabels.of(labels)
    if len(labels) != rs.rank:
        raise LieModelError("label vector has the wrong length")
    if not labels.is_even:
        raise LieModelError("labels must be even (0 or 2)")
    h = cartan_element(model, labels.labels)
    top = weight_two_roots(rs, labels)
    if not top:
        raise LieModelError("not realizable: g_2 = 0")
    ups = [root_vector(model, r) for r in top]
    downs = [root_vector(model, tuple(-c for c in r)) for r in top]
    rng = random.Random(seed)
    for attempt in range(RETRY_BOUND):
        e = {u: 1 if attempt == 0 else rng.choice((-2, -1, 1, 2)) for u in ups}
        f = complete_f(model, e, h, downs)
        if f is not None:
            return Sl2Triple(model, e, h, f).verify()
    raise LieModelError("not realizable: no f found within the retry bound")


# ------------------------------------------------------------ red roots (Case 4)


@dataclass
class RedRootData:
    alpha: Tuple[int, ...]
    betas: Tuple[Tuple[int, ...], ...]
    triple: Sl2Triple


def red_roots(rs: RootSystem, labels: DynkinLabels) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    """The distinguished simple root and the three weight-2 roots completing it
    to a D4 system whose highest root is the highest root of ``g``."""
    fam = rs.type.family
    if fam not in QUAT_DISTINGUISHED_NODE:
        raise LieModelError("red roots exist only for the Case-4 exceptional types")
    node = QUAT_DISTINGUISHED_NODE[fam] - 1
    alpha = tuple(int(i == node) for i in range(rs.rank))
    theta = rs.highest_root
    want = tuple(t - 2 * a for t, a in zip(theta, alpha))
    add = lambda x, y: tuple(p + q for p, q in zip(x, y))
    sub = lambda x, y: tuple(p - q for p, q in zip(x, y))
    cands = [
        b for b in weight_two_roots(rs, labels)
        if b != alpha and rs.is_root(add(alpha, b)) and rs.inner(b, b) == rs.inner(alpha, alpha)
    ]
    for trio in combinations(cands, 3):
        if tuple(sum(c) for c in zip(*trio)) != want:
            continue
        if any(rs.is_root(add(x, y)) or rs.is_root(sub(x, y)) for x, y in combinations(trio, 2)):
            continue
        return alpha, trio
    raise LieModelError("no red-root D4 system found")


def red_root_triple(model: LieModel, labels) -> RedRootData:
    """Principal triple of the red-root so_8: ``h = 10 h_a + 6 sum h_b``,
    ``e = 10 e_a + 6 sum e_b``, ``f = f_a + sum f_b``."""
    rs: RootSystem = model.meta["rs"]
    if not isinstance(labels, DynkinLabels):
        labels = DynkinLabels.of(labels)
    alpha, betas = red_roots(rs, labels)
    neg = lambda r: tuple(-c for c in r)
    hvec = lambda r: {i: c for i, c in enumerate(rs.coroot_coefficients(r)) if c}
    h = vadd(vscale(10, hvec(alpha)), *(vscale(6, hvec(b)) for b in betas))
    e = vadd({root_vector(model, alpha): 10}, *({root_vector(model, b): 6} for b in betas))
    f = vadd({root_vector(model, neg(alpha)): 1}, *({root_vector(model, neg(b)): 1} for b in betas))
    triple = Sl2Triple(model, e, h, f).verify()
    return RedRootData(alpha, tuple(betas), triple)


def h_labels(model: LieModel, h: Vec) -> Tuple[int, ...]:
    """``alpha_i(h)`` for a Cartan element of a Chevalley model."""
    rs: RootSystem = model.meta["rs"]
    out = []
    for i in range(rs.rank):
        simple = tuple(int(k == i) for k in range(rs.rank))
        val = Fraction(0)
        for j, c in h.items():
            val += c * rs.pairing(simple, j)
        if val.denominator != 1:
            raise LieModelError("non-integral label")
        out.append(int(val))
    return tuple(out)
