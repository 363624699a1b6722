"""Structural checks on magical triples: the ``g_0`` bracket relations, the
principal position of the triple in ``g(e)`` and the Case-4 exceptional
identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple

from ..classify import MagicalCaseId, QUAT_DISTINGUISHED_NODE, case_labels
from ..rootsys import AlgebraType
from .chevalley import root_vector
from .linalg import RowSpace
from .model import LieModel, Vec, vadd, vscale, vsub
from .oracle import CentralizerData, SlDecomposition, centralizer_of_centralizer, decompose, is_magical_oracle
from .triples import Sl2Triple, h_labels, red_roots


@dataclass
class StructureReport:
    checks: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> List[str]:
        return [k for k, v in self.checks.items() if not v]


def _span(model: LieModel, vecs) -> RowSpace:
    rs = RowSpace(model.dim)
    for v in vecs:
        rs.add(v)
    return rs


def isotypic_components(triple: Sl2Triple, dec: SlDecomposition) -> Dict[int, List[Vec]]:
    """``W_j`` as spans of the ``ad_f`` strings of ``V_j``."""
    out: Dict[int, List[Vec]] = {}
    for j, vs in dec.highest.items():
        vecs = []
        for v in vs:
            cur = v
            for _ in range(j + 1):
                vecs.append(cur)
                cur = triple.model.bracket(triple.f, cur)
        if vecs:
            out[j] = vecs
    return out


def zero_weight_parts(triple: Sl2Triple, dec: SlDecomposition) -> Dict[int, List[Vec]]:
    """``Z_{2m} = W_{2m} cap g_0 = ad_f^m(V_{2m})`` for ``m >= 1``."""
    out = {}
    for j, vs in dec.highest.items():
        if j <= 0 or j % 2 or not vs:
            continue
        out[j] = [triple.model.ad_power(triple.f, v, j // 2) for v in vs]
    return out


def graded_pieces(model: LieModel, basis: List[Vec], weights: List[int]) -> Dict[int, int]:
    """Dimensions of ``span(basis) cap g_w`` for an ad_h-stable span."""
    by_w: Dict[int, List[Vec]] = {}
    for v in basis:
        parts: Dict[int, Vec] = {}
        for k, c in v.items():
            parts.setdefault(weights[k], {})[k] = c
        for w, p in parts.items():
            by_w.setdefault(w, []).append(p)
    return {w: _span(model, vs).rank for w, vs in sorted(by_w.items())}


def case4_type(triple: Sl2Triple) -> Optional[AlgebraType]:
    model = triple.model
    if model.kind != "chevalley":
        return None
    t: AlgebraType = model.meta["type"]
    if t.family not in QUAT_DISTINGUISHED_NODE:
        return None
    want = case_labels(MagicalCaseId(4, t)).labels
    try:
        got = h_labels(model, triple.h)
    except Exception:
        return None
    return t if got == want else None


def _closure_dim(model: LieModel, gens: List[Vec], cap: int = 400) -> int:
    rs = RowSpace(model.dim)
    basis = [g for g in gens if rs.add(g)]
    frontier = list(basis)
    while frontier:
        nxt = []
        for g in gens:
            for x in frontier:
                y = model.bracket(g, x)
                if y and rs.add(y):
                    nxt.append(y)
        frontier = nxt
        if rs.rank > cap:
            break
    return rs.rank


def verify_structure(triple: Sl2Triple, cz: Optional[CentralizerData] = None) -> StructureReport:
    model = triple.model
    report = StructureReport()
    oracle = is_magical_oracle(triple)
    report.checks["magical"] = oracle.magical
    if not oracle.magical:
        report.details["witness"] = oracle.witness
        return report
    dec = decompose(triple)
    cz = cz or centralizer_of_centralizer(triple, magical=True)
    c_space = _span(model, cz.c)

    # (a) [Z_i, Z_j] lies in c, and vanishes for distinct m
    zs = zero_weight_parts(triple, dec)
    ok_a = True
    for i, j in combinations_with_replacement(sorted(zs), 2):
        for x in zs[i]:
            for y in zs[j]:
                b = model.bracket(x, y)
                if (i != j and b) or not c_space.contains(b):
                    ok_a = False
    report.checks["Z brackets in c"] = ok_a
    report.details["Z dims"] = {j // 2: len(v) for j, v in zs.items()}

    # (b) the triple is principal in g(e)
    weights = dec.weights
    ge_space = _span(model, cz.ge)
    contains_triple = all(ge_space.contains(x) for x in (triple.e, triple.h, triple.f))
    dims = graded_pieces(model, cz.ge, weights)
    mult = {j: dims.get(j, 0) - dims.get(j + 2, 0) for j in dims if j >= 0}
    ge0 = []
    for v in cz.ge:
        p = {k: c for k, c in v.items() if weights[k] == 0}
        if p:
            ge0.append(p)
    ge0_rs = RowSpace(model.dim)
    ge0 = [v for v in ge0 if ge0_rs.add(v)]
    abelian = all(not model.bracket(x, y) for x in ge0 for y in ge0)
    principal = contains_triple and mult.get(0, 0) == 0 and abelian and all(w % 2 == 0 for w in dims)
    report.checks["principal in g(e)"] = principal
    report.details["g(e) dim"] = cz.dim_ge
    report.details["g(e) exponents"] = sorted(j // 2 for j, n in mult.items() for _ in range(n) if n > 0)

    t = case4_type(triple)
    if t is not None:
        _case4_checks(triple, dec, cz, report)
    return report


def _case4_checks(triple: Sl2Triple, dec: SlDecomposition, cz: CentralizerData, report: StructureReport) -> None:
    model = triple.model
    rs = model.meta["rs"]
    labels = case_labels(MagicalCaseId(4, model.meta["type"]))
    alpha, betas = red_roots(rs, labels)
    neg = lambda r: tuple(-c for c in r)
    gens = [{root_vector(model, r): 1} for r in (alpha,) + tuple(betas)]
    gens += [{root_vector(model, neg(r)): 1} for r in (alpha,) + tuple(betas)]
    so8 = _closure_dim(model, gens)
    report.checks["red-root so8 has dimension 28"] = so8 == 28
    report.details["red-root span dim"] = so8

    comps = isotypic_components(triple, dec)
    w2_w10 = comps.get(2, []) + comps.get(10, [])
    ge = _span(model, cz.ge)
    w = _span(model, w2_w10)
    same = ge.rank == w.rank == 14 and all(ge.contains(v) for v in w2_w10)
    report.checks["g(e) = W2 + W10, dim 14"] = same

    tilde_idx = root_vector(model, neg(alpha))
    f_tilde = {tilde_idx: triple.f[tilde_idx]} if tilde_idx in triple.f else {}
    f_b = vsub(triple.f, f_tilde)
    cube = model.ad_power(f_b, f_tilde, 3)
    report.checks["ad_{f_b}^3 f~ != 0"] = bool(f_tilde) and bool(cube)

    v6 = dec.highest.get(6, [])
    ok = bool(v6)
    for phi in v6:
        lhs = model.ad_power(vadd(f_b, phi), f_tilde, 3)
        rhs = vadd(
            cube,
            vscale(3, model.ad_power(triple.f, phi, 3)),
            model.ad_power(phi, model.bracket(f_b, f_tilde), 2),
        )
        if vsub(lhs, rhs):
            ok = False
            break
    report.checks["cubic identity on V6"] = ok
    report.details["dim V6"] = len(v6)
