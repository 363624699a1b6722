"""Bookkeeping for the Cayley correspondence of a magical case.

The domain of the Cayley map is a moduli space of ``K^{m_c+1}``-twisted
``G_{0,ss}^R`` Higgs bundles times the holomorphic differentials
``H^0(K^{l_j+1})``.  Only the vector-space factors get a dimension here (by
Riemann-Roch); the moduli factor is described, not counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple, Union

from .sl2data import MagicalRecord, magical_record
from .partitions import ReductiveType, reductive


class CayleyError(ValueError):
    """Invalid input for Cayley bookkeeping."""


@dataclass(frozen=True)
class GenusContext:
    genus: int

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 2:
            raise CayleyError(f"genus must be an integer >= 2, got {self.genus!r}")


def h0_dim(d: int, ctx: Union[GenusContext, int]) -> int:
    """``dim H^0(K^d)`` on a compact Riemann surface of genus ``g >= 2``."""
    g = ctx.genus if isinstance(ctx, GenusContext) else GenusContext(ctx).genus
    if not isinstance(d, int) or d < 1:
        raise CayleyError(f"degree must be a positive integer, got {d!r}")
    return g if d == 1 else (2 * d - 1) * (g - 1)


@dataclass(frozen=True)
class CayleyDomainDescriptor:
    cayley_group: str
    g0ss_real: ReductiveType
    ge_rank: int
    twist_degree: int
    differential_degrees: Tuple[int, ...]
    differential_dims: Tuple[int, ...]
    m0ss_dim: int
    genus: int

    @property
    def vector_space_dim(self) -> int:
        return sum(self.differential_dims)


def _semisimple_part(rt: ReductiveType) -> ReductiveType:
    return ReductiveType(rt.factors, 0, 0, rt.real)


def cayley_domain(r: Union[MagicalRecord, str], ctx: Union[GenusContext, int]) -> CayleyDomainDescriptor:
    rec = magical_record(r) if isinstance(r, str) else r
    g = ctx if isinstance(ctx, GenusContext) else GenusContext(ctx)
    ss = _semisimple_part(rec.cayley_real_form)
    k = rec.ge_rank
    torus = "(R+)" if k == 1 else f"(R+)^{k}"
    group = torus if not ss.factors else f"{torus} x G({ss.label()})"
    degrees = tuple(l + 1 for l in rec.ge_exponents)
    return CayleyDomainDescriptor(
        cayley_group=group,
        g0ss_real=ss,
        ge_rank=k,
        twist_degree=rec.m_c + 1,
        differential_degrees=degrees,
        differential_dims=tuple(h0_dim(d, g) for d in degrees),
        m0ss_dim=rec.m0ss_dim,
        genus=g.genus,
    )


@dataclass(frozen=True)
class DimensionCheck:
    lhs: int
    rhs: int
    terms: Dict[str, int]

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def dimension_consistency(r: Union[MagicalRecord, str]) -> DimensionCheck:
    """``dim g = 2(m_c+1) dim m_{0,ss} + (dim c - dim m_{0,ss}) + sum (2l_j+1)``."""
    rec = magical_record(r) if isinstance(r, str) else r
    m0 = rec.m0ss_dim
    terms = {
        "twisted": 2 * (rec.m_c + 1) * m0,
        "compact": rec.c_type.dimension - m0,
        "differentials": sum(2 * l + 1 for l in rec.ge_exponents),
    }
    return DimensionCheck(rec.dimension, sum(terms.values()), terms)


_COMPONENTS = {
    ("F4", "simply_connected"): 3,
    ("F4", "adjoint"): 3,
    ("E6", "simply_connected"): 1,
    ("E6", "adjoint"): 3,
    ("E7", "simply_connected"): 1,
    ("E7", "adjoint"): 2,
}
FORMS = ("simply_connected", "adjoint")
UNKNOWN = "unknown"
E8_EXPECTATION = "unknown (expected 1)"


def component_count(r: Union[MagicalRecord, str], form: str = "simply_connected") -> Union[int, str]:
    """Number of connected components of the Cayley image, where known."""
    if form not in FORMS:
        raise CayleyError(f"form must be one of {FORMS}, got {form!r}")
    rec = magical_record(r) if isinstance(r, str) else r
    if rec.case_id.case != 4:
        return UNKNOWN
    fam = rec.case_id.type.family
    if fam == "E8":
        return E8_EXPECTATION
    return _COMPONENTS[(fam, form)]
