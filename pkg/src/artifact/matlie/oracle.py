"""The involution of an sl2-triple, the magical test, centralizers and the
Cayley transform.

``sigma_e`` is assembled weight block by weight block.  Inside the ad_h
eigenspace of weight ``w`` the adapted vectors ``ad_f^k v`` (``v`` a highest
weight vector of weight ``j``, ``j - 2k = w``) form a basis ``P``; the
involution on that block is ``P D P^{-1}`` with ``D`` the sign pattern.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import RowSpace, _primitive, dense_inverse, matmul, nullspace, span_basis
from .model import LieModel, LieModelError, Vec, ad_block, vadd, vclean, vcombo, vscale, vsub, weight_blocks
from .scalars import I
from .triples import Sl2Triple

FULL_SWEEP_LIMIT = 52


@dataclass
class SlDecomposition:
    """ad_h weights, weight blocks and highest weight vectors of a triple."""

    weights: List[int]
    blocks: Dict[int, List[int]]
    highest: Dict[int, List[Vec]]  # j -> basis of V_j

    def multiplicities(self) -> Dict[int, int]:
        return {j: len(v) for j, v in sorted(self.highest.items()) if v}

    @property
    def is_even(self) -> bool:
        return all(w % 2 == 0 for w in self.weights)


def decompose(triple: Sl2Triple) -> SlDecomposition:
    model = triple.model
    weights = model.adjoint_weights(triple.h)
    blocks = weight_blocks(weights)
    highest: Dict[int, List[Vec]] = {}
    for j, src in blocks.items():
        if j < 0:
            continue
        dst = blocks.get(j + 2, [])
        if dst:
            m = ad_block(model, triple.e, src, dst)
            rows = [{c: v for c, v in enumerate(r) if v} for r in m]
            ker = nullspace(rows, len(src))
        else:
            ker = [{c: Fraction(1)} for c in range(len(src))]
        highest[j] = [vclean({src[c]: v for c, v in k.items()}) for k in ker]
    return SlDecomposition(weights, blocks, highest)


@dataclass
class InvolutionMap:
    """Blockwise matrix of an endomorphism: ``blocks[w] = (indices, matrix)``."""

    model: LieModel
    blocks: Dict[int, Tuple[List[int], List[List[Fraction]]]]
    decomposition: SlDecomposition
    _columns: Optional[List[Vec]] = field(default=None, repr=False)

    def columns(self) -> List[Vec]:
        if self._columns is None:
            cols: List[Vec] = [dict() for _ in range(self.model.dim)]
            for idx, mat in self.blocks.values():
                for c, b in enumerate(idx):
                    cols[b] = vclean({idx[r]: mat[r][c] for r in range(len(idx))})
            self._columns = cols
        return self._columns

    def apply(self, x: Vec) -> Vec:
        cols = self.columns()
        return vcombo((v, cols[k]) for k, v in x.items())

    def fixed_dimension(self) -> int:
        total = 0
        for idx, mat in self.blocks.values():
            n = len(idx)
            rows = [{c: mat[r][c] - (1 if r == c else 0) for c in range(n)} for r in range(n)]
            total += len(nullspace(rows, n))
        return total

    def squares_to_identity(self) -> bool:
        for idx, mat in self.blocks.values():
            n = len(idx)
            for r in range(n):
                for c in range(n):
                    s = sum(mat[r][k] * mat[k][c] for k in range(n))
                    if s != (1 if r == c else 0):
                        return False
        return True


def sigma_e(triple: Sl2Triple, decomposition: Optional[SlDecomposition] = None) -> InvolutionMap:
    model = triple.model
    dec = decomposition or decompose(triple)
    adapted: Dict[int, List[Tuple[Vec, int]]] = {}
    for j, vs in dec.highest.items():
        for v in vs:
            cur = v
            for k in range(j + 1):
                sign = 1 if j == 0 else (-1) ** (k + 1)
                adapted.setdefault(j - 2 * k, []).append((cur, sign))
                cur = model.bracket(triple.f, cur)
            if cur:
                raise LieModelError("ad_f chain does not terminate: not an sl2-triple")
    blocks = {}
    for w, idx in dec.blocks.items():
        vecs = adapted.get(w, [])
        if len(vecs) != len(idx):
            raise LieModelError(f"adapted vectors do not span weight {w}: decomposition incomplete")
        pos = {b: i for i, b in enumerate(idx)}
        n = len(idx)
        p = [[Fraction(0)] * n for _ in range(n)]
        for c, (v, _) in enumerate(vecs):
            for b, val in v.items():
                p[pos[b]][c] = Fraction(val)
        try:
            pinv = dense_inverse(p)
        except (ZeroDivisionError, ValueError) as exc:
            raise LieModelError(f"adapted vectors dependent in weight {w}") from exc
        signs = [s for _, s in vecs]
        mat = matmul([[p[r][k] * signs[k] for k in range(n)] for r in range(n)], pinv)
        blocks[w] = (idx, mat)
    return InvolutionMap(model, blocks, dec)


@dataclass
class OracleResult:
    magical: bool
    witness: Optional[Tuple[str, str]]
    pairs_checked: int
    fixed_dimension: int
    even: bool
    multiplicities: Dict[int, int]


def _generators(model: LieModel) -> List[int]:
    if model.kind == "chevalley":
        rs = model.meta["rs"]
        gens = []
        for i in range(rs.rank):
            simple = tuple(int(k == i) for k in range(rs.rank))
            gens.append(model.meta["index_of"][simple])
            gens.append(model.meta["index_of"][tuple(-c for c in simple)])
        return gens
    return list(range(model.dim))


def is_magical_oracle(triple: Sl2Triple, sigma: Optional[InvolutionMap] = None, full: Optional[bool] = None) -> OracleResult:
    """Test whether ``sigma_e`` is a Lie algebra automorphism.

    Every pair of basis elements is checked when ``dim <= 52`` (or ``full``).
    Otherwise ``sigma [x, y] = [sigma x, sigma y]`` is checked for ``x`` among
    the Chevalley generators ``e_i, f_i`` and all basis ``y``: the ``x`` that
    satisfy it for all ``y`` form a subalgebra, so generators suffice.
    """
    model = triple.model
    sig = sigma or sigma_e(triple)
    cols = sig.columns()
    if full is None:
        full = model.dim <= FULL_SWEEP_LIMIT
    xs = range(model.dim) if full else _generators(model)
    checked = 0
    witness = None
    for a in xs:
        sa = cols[a]
        for b in range(model.dim):
            if full and b <= a:
                continue
            checked += 1
            lhs = sig.apply(model.basis_bracket(a, b))
            rhs = model.bracket(sa, cols[b])
            if vsub(lhs, rhs):
                witness = (model.labels[a], model.labels[b])
                break
        if witness:
            break
    dec = sig.decomposition
    return OracleResult(
        magical=witness is None,
        witness=witness,
        pairs_checked=checked,
        fixed_dimension=sig.fixed_dimension(),
        even=dec.is_even,
        multiplicities=dec.multiplicities(),
    )


# ------------------------------------------------------------------ centralizers


def _kernel_of_ads(model: LieModel, elements: Sequence[Vec], within: Optional[List[Vec]] = None) -> List[Vec]:
    """Basis of ``{x in span(within) : [a, x] = 0 for a in elements}``."""
    basis = within if within is not None else [{b: 1} for b in range(model.dim)]
    images = [[model.bracket(a, x) for x in basis] for a in elements]
    d = model.dim
    rows: Dict[int, Dict[int, object]] = {}
    for t, imgs in enumerate(images):
        for c, img in enumerate(imgs):
            for k, v in img.items():
                rows.setdefault(t * d + k, {})[c] = v
    ker = nullspace(rows.values(), len(basis))
    return [vcombo((v, basis[c]) for c, v in k.items()) for k in ker]


def _graded_kernel(model: LieModel, elements: Sequence[Vec], blocks: Dict[int, List[int]]) -> List[Vec]:
    """Common kernel of ``ad`` of weight-0 elements, solved one weight block at a time."""
    out: List[Vec] = []
    for idx in blocks.values():
        out += _kernel_of_ads(model, elements, within=[{b: 1} for b in idx])
    return [_primitive(v) for v in out]


def triple_centralizer(triple: Sl2Triple) -> List[Vec]:
    """Basis of ``c``, the centralizer of ``{f, h, e}`` (integral vectors)."""
    return [_primitive(v) for v in _kernel_of_ads(triple.model, [triple.e, triple.h, triple.f])]


def derived_span(model: LieModel, basis: List[Vec]) -> List[Vec]:
    brackets = (model.bracket(x, y) for i, x in enumerate(basis) for y in basis[i + 1:])
    _, picked = span_basis((b for b in brackets if b), model.dim)
    return picked


def span_dim(model: LieModel, vecs) -> int:
    rs = RowSpace(model.dim)
    for v in vecs:
        rs.add(v)
    return rs.rank


@dataclass
class CentralizerData:
    c: List[Vec]
    center_c: List[Vec]
    centralizer_of_c: List[Vec]
    ge: List[Vec]

    @property
    def dim_c(self) -> int:
        return len(self.c)

    @property
    def dim_center(self) -> int:
        return len(self.center_c)

    @property
    def dim_ge(self) -> int:
        return len(self.ge)


def centralizer_of_centralizer(triple: Sl2Triple, magical: Optional[bool] = None) -> CentralizerData:
    """``c``, its center, its centralizer and ``g(e)``, the derived algebra of
    the centralizer of ``c`` (the centralizer splits as ``g(e)`` plus the
    center of ``c``)."""
    if magical is None:
        magical = is_magical_oracle(triple).magical
    if not magical:
        raise LieModelError("g(e) is only defined here for magical triples")
    model = triple.model
    c = triple_centralizer(triple)
    blocks = weight_blocks(model.adjoint_weights(triple.h))
    center = _kernel_of_ads(model, c, within=c) if c else []
    zc = _graded_kernel(model, c, blocks) if c else [{b: 1} for b in range(model.dim)]
    ge = derived_span(model, zc)
    if span_dim(model, list(ge) + list(center)) != len(zc):
        raise LieModelError("centralizer of c is not g(e) plus the center of c")
    return CentralizerData(c, center, zc, ge)


# ------------------------------------------------------------------ Cayley transform


def cayley_inverse(triple: Sl2Triple) -> Sl2Triple:
    """Normal triple to Cayley triple: ``f^ = (f + e + ih)/2``, ``h^ = i(f - e)``,
    ``e^ = (f + e - ih)/2``.  Coordinates become Gaussian rationals.

    This is the usual half-plane-to-disc formula written for the bracket
    convention ``[e, f] = h``; with ``e`` replaced by ``-e`` it becomes
    ``{(f - e + ih)/2, i(f + e), (f - e - ih)/2}``, which is the form that
    belongs to ``[e, f] = -h``.
    """
    f, h, e = triple.f, triple.h, triple.e
    half = Fraction(1, 2)
    fh = vadd(vscale(half, vadd(f, e)), vscale(half * I, h))
    hh = vscale(I, vsub(f, e))
    eh = vsub(vscale(half, vadd(f, e)), vscale(half * I, h))
    return Sl2Triple(triple.model, eh, hh, fh).verify()


def cayley(triple: Sl2Triple) -> Sl2Triple:
    """Cayley triple to normal triple: ``f = (f^ + e^ - ih^)/2``, ``h = i(e^ - f^)``,
    ``e = (f^ + e^ + ih^)/2``."""
    fh, hh, eh = triple.f, triple.h, triple.e
    half = Fraction(1, 2)
    f = vsub(vscale(half, vadd(fh, eh)), vscale(half * I, hh))
    h = vscale(I, vsub(eh, fh))
    e = vadd(vscale(half, vadd(fh, eh)), vscale(half * I, hh))
    return Sl2Triple(triple.model, e, h, f).verify()


def is_cayley_triple(triple: Sl2Triple, sigma: InvolutionMap) -> bool:
    """``sigma(e^) = -f^`` and ``sigma(h^) = -h^``."""
    return not vadd(sigma.apply(triple.e), triple.f) and not vadd(sigma.apply(triple.h), triple.h)
