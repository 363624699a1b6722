"""Structural data attached to each magical case.

Every record is stored as closed-form data in the case parameters: the
sl2-data ``{(m_j, n_{2m_j})}``, the ``h``-centralizer ``g_0``, the triple
centralizer ``c``, the algebra ``g(e)`` with its exponents, the twisting
exponent ``m_c``, the Cayley real form and the positivity parabolic.  The
checks in :func:`check_record` compare the stored data with gradings computed
by :mod:`artifact.rootsys`, so a transcription error shows up as a failed
identity rather than a silently wrong answer.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .classify import MagicalCaseId, canonical_real_form, case_labels
from .partitions import Factor, PartitionError, RealFormId, ReductiveType, reductive
from .rootsys import (
    AlgebraType,
    DynkinLabels,
    Sl2Data,
    exponents,
    graded_dimensions,
    root_system,
    sl2_multiplicities,
)


class Sl2DataError(ValueError):
    """Invalid input for a magical record."""


@dataclass(frozen=True)
class ThetaDescriptor:
    """Parabolic ``P_Theta`` carrying the positive structure.

    ``restricted`` names the restricted root system, ``theta`` lists the
    simple restricted roots (1-based) in ``Theta``; ``flag`` is the dimension
    sequence of the stabilized isotropic flag (Case 3 only).
    """

    case: int
    kind: str
    restricted: str
    theta: Tuple[int, ...]
    flag: Optional[Tuple[int, ...]] = None

    def describe(self) -> str:
        nodes = ", ".join(f"alpha_{i}" for i in self.theta)
        text = f"{self.kind}; Theta = {{{nodes}}} in {self.restricted}"
        if self.flag:
            text += "; flag dims " + " < ".join(map(str, self.flag))
        return text


@dataclass(frozen=True)
class MagicalRecord:
    case_id: MagicalCaseId
    diagram: DynkinLabels
    canonical_real_form: RealFormId
    sl2_data: Sl2Data
    g0_type: ReductiveType
    c_type: ReductiveType
    c_real: ReductiveType
    ge_type: ReductiveType
    ge_exponents: Tuple[int, ...]
    m_c: int
    cayley_real_form: ReductiveType
    theta: ThetaDescriptor
    center_of_c_is_line: bool = False

    @property
    def algebra(self) -> AlgebraType:
        return self.case_id.type

    @property
    def dimension(self) -> int:
        return root_system(self.algebra).dimension

    @property
    def ge_rank(self) -> int:
        return _complex_rank(self.ge_type)

    @property
    def g0ss_dim(self) -> int:
        """``dim g_{0,ss}``: ``g_0`` minus its center, which has rank ``rk g(e)``."""
        return self.g0_type.dimension - self.ge_rank

    @property
    def m0ss_dim(self) -> int:
        """Complex dimension of the noncompact part of ``g_{0,ss}^R``."""
        return self.g0ss_dim - self.c_type.dimension


# ---------------------------------------------------------------- helpers


def _complex_rank(rt: ReductiveType) -> int:
    return rt.torus + sum(f.complex_rank for f in rt.factors)


def _cx(*summands, torus: int = 0) -> ReductiveType:
    return reductive(False, summands, torus=torus)


def _compact_form(rt: ReductiveType) -> ReductiveType:
    out = []
    for f in rt.factors:
        k, p = f.kind, f.params
        if k == "slC":
            out.append(("su", p[0], 0))
        elif k == "soC":
            out.append(("so", p[0], 0))
        elif k == "spC":
            out.append(("sp", p[0] // 2, 0))
        elif k == "excC":
            dim = f.complex_dim
            out.append(("exc", f"{p[0].lower()}^-{dim}"))
        else:
            raise Sl2DataError(f"no compact form for {f}")
    return reductive(True, out, torus=rt.torus)


def _pairs(entries: Dict[int, int]) -> Tuple[int, Tuple[Tuple[Fraction, int], ...]]:
    n0 = entries.pop(0, 0)
    return n0, tuple((Fraction(m), n) for m, n in sorted(entries.items()) if n)


def _simple_type(f: Factor) -> AlgebraType:
    k, p = f.kind, f.params
    if k == "excC":
        return AlgebraType.parse(p[0])
    if k == "slC":
        return AlgebraType("A", p[0] - 1)
    if k == "spC":
        return AlgebraType("C", p[0] // 2) if p[0] >= 4 else AlgebraType("A", 1)
    if k == "soC" and p[0] == 3:
        return AlgebraType("A", 1)
    if k == "soC" and p[0] % 2:
        return AlgebraType("B", p[0] // 2)
    if k == "soC":
        return AlgebraType("D", p[0] // 2)
    raise Sl2DataError(f"no root system for {f}")


# ---------------------------------------------------------------- records


def _case1(cid: MagicalCaseId) -> dict:
    t = cid.type
    rs = root_system(t)
    exps = exponents(rs)
    ge = _cx(("excC", t.family)) if t.is_exceptional else _cx(_complex_factor(t))
    return dict(
        sl2=_pairs(dict(Counter(exps))),
        g0=_cx(torus=t.rank),
        c=_cx(),
        ge=ge,
        ge_exponents=exps,
        m_c=0,
        cayley=reductive(True, [], split_torus=t.rank),
        theta=ThetaDescriptor(1, "Borel", t.name, tuple(range(1, t.rank + 1))),
    )


def _complex_factor(t: AlgebraType) -> Tuple:
    n = t.rank
    return {
        "A": ("slC", n + 1),
        "B": ("soC", 2 * n + 1),
        "C": ("spC", 2 * n),
        "D": ("soC", 2 * n),
    }[t.family]


def _case2(cid: MagicalCaseId) -> dict:
    t, n = cid.type, cid.type.rank
    fam = t.family
    if fam == "A":
        k = (n + 1) // 2
        sl2 = {0: k * k - 1, 1: k * k}
        g0 = _cx(("slC", k), ("slC", k), torus=1)
        c = _cx(("slC", k))
        cay = [("cplx", "slC", k)] if k >= 2 else []
    elif fam == "B":
        sl2 = {0: 2 * n * n - 5 * n + 3, 1: 2 * n - 1}
        g0 = _cx(("soC", 2 * n - 1), torus=1)
        c = _cx(("soC", 2 * n - 2))
        cay = [("so", 1, 2 * n - 2)]
    elif fam == "C":
        sl2 = {0: n * (n - 1) // 2, 1: n * (n + 1) // 2}
        g0 = _cx(("slC", n), torus=1)
        c = _cx(("soC", n))
        cay = [("sl", n)]
    elif fam == "D" and cid.variant:
        k = n // 2
        sl2 = {0: k * (2 * k + 1), 1: k * (2 * k - 1)}
        g0 = _cx(("slC", 2 * k), torus=1)
        c = _cx(("spC", 2 * k))
        cay = [("su*", k)]
    elif fam == "D":
        sl2 = {0: 2 * n * n - 7 * n + 6, 1: 2 * n - 2}
        g0 = _cx(("soC", 2 * n - 2), torus=1)
        c = _cx(("soC", 2 * n - 3))
        cay = [("so", 1, 2 * n - 3)]
    else:
        sl2 = {0: 52, 1: 27}
        g0 = _cx(("excC", "E6"), torus=1)
        c = _cx(("excC", "F4"))
        cay = [("exc", "e6^-26")]
    rr = canonical_real_form(cid).real_rank
    theta = ThetaDescriptor(2, "Shilov maximal parabolic", f"C{rr}", (rr,))
    return dict(
        sl2=_pairs(sl2), g0=g0, c=c, ge=_cx(("slC", 2)), ge_exponents=(1,), m_c=1,
        cayley=reductive(True, cay, split_torus=1), theta=theta,
    )


def _case3(cid: MagicalCaseId) -> dict:
    t, n, p = cid.type, cid.type.rank, cid.p
    big = 2 * n + 1 if t.family == "B" else 2 * n
    sl2 = {m: 1 for m in range(1, 2 * p - 2, 2)}
    sl2[0] = (big - 2 * p) * (big - 2 * p + 1) // 2
    sl2[p - 1] = big - 2 * p + 2 if p % 2 == 0 else big - 2 * p + 1
    flag = tuple(range(1, p)) + tuple(range(big - p + 1, big + 1))
    theta = ThetaDescriptor(
        3, "SO(p,q) isotropic-flag stabilizer", f"B{p}", tuple(range(1, p)), flag
    )
    return dict(
        sl2=_pairs(sl2),
        g0=_cx(("soC", big - 2 * p + 2), torus=p - 1),
        c=_cx(("soC", big - 2 * p + 1)),
        ge=_cx(("soC", 2 * p - 1)),
        ge_exponents=tuple(range(1, 2 * p - 2, 2)),
        m_c=p - 1,
        cayley=reductive(True, [("so", 1, big - 2 * p + 1)], split_torus=p - 1),
        theta=theta,
    )


_CASE4 = {
    # family: (n_0, n_6, g_0 factors, c factor, Cayley factor)
    "E6": (8, 8, [("slC", 3), ("slC", 3)], ("slC", 3), ("cplx", "slC", 3)),
    "E7": (21, 14, [("slC", 6)], ("spC", 6), ("su*", 3)),
    "E8": (52, 26, [("excC", "E6")], ("excC", "F4"), ("exc", "e6^-26")),
    "F4": (3, 5, [("slC", 3)], ("soC", 3), ("sl", 3)),
}


def _case4(cid: MagicalCaseId) -> dict:
    n0, n6, g0, c, cay = _CASE4[cid.type.family]
    return dict(
        sl2=_pairs({0: n0, 1: 1, 3: n6, 5: 1}),
        g0=_cx(*g0, torus=2),
        c=_cx(c),
        ge=_cx(("excC", "G2")),
        ge_exponents=(1, 5),
        m_c=3,
        cayley=reductive(True, [cay], split_torus=2),
        theta=ThetaDescriptor(4, "F4-restricted parabolic", "F4", (1, 2)),
    )


_BUILDERS = {1: _case1, 2: _case2, 3: _case3, 4: _case4}


def magical_record(case_id: Union[MagicalCaseId, str]) -> MagicalRecord:
    """The stored structural data of one magical case."""
    cid = MagicalCaseId.parse(case_id) if isinstance(case_id, str) else case_id
    data = _BUILDERS[cid.case](cid)
    n0, pairs = data["sl2"]
    c = data["c"]
    return MagicalRecord(
        case_id=cid,
        diagram=case_labels(cid),
        canonical_real_form=canonical_real_form(cid),
        sl2_data=Sl2Data(n0=n0, pairs=pairs),
        g0_type=data["g0"],
        c_type=c,
        c_real=_compact_form(c),
        ge_type=data["ge"],
        ge_exponents=tuple(data["ge_exponents"]),
        m_c=data["m_c"],
        cayley_real_form=data["cayley"],
        theta=data["theta"],
        center_of_c_is_line=(c.torus == 1 and not c.factors),
    )


def real_rank(rf: Union[RealFormId, ReductiveType, Factor, str]) -> int:
    """Real rank, additive over factors; each ``R`` summand contributes 1."""
    if isinstance(rf, str):
        try:
            rf = RealFormId.parse(rf)
        except PartitionError as exc:
            raise Sl2DataError(f"unknown real form {rf!r}: {exc}") from exc
    if isinstance(rf, ReductiveType) and not rf.real:
        raise Sl2DataError("real rank of a complex type is undefined")
    try:
        return rf.real_rank
    except (PartitionError, KeyError) as exc:
        raise Sl2DataError(f"unknown real form {rf}") from exc


def theta_structure(r: MagicalRecord) -> ThetaDescriptor:
    return r.theta


# ---------------------------------------------------------------- checks


@dataclass
class RecordReport:
    case: str
    checks: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> List[str]:
        return [k for k, v in self.checks.items() if not v]


def sl2_dimension_sum(data: Sl2Data) -> int:
    """``sum_{j >= 1} n_{2m_j} (2m_j + 1)``."""
    return sum(int(n * (2 * m + 1)) for m, n in data.pairs)


def check_record(r: MagicalRecord) -> RecordReport:
    rep = RecordReport(str(r.case_id))
    dim_g = r.dimension
    rs = root_system(r.algebra)
    grading = graded_dimensions(rs, r.diagram)
    computed = sl2_multiplicities(grading)

    lhs = r.c_type.dimension + sl2_dimension_sum(r.sl2_data)
    rep.checks["dim g = dim c + sum n(2m+1)"] = dim_g == lhs
    rep.checks["n_0 = dim c"] = r.sl2_data.n0 == r.c_type.dimension
    rep.details["dim g"] = dim_g

    rr_canon = real_rank(r.canonical_real_form)
    rr_cay = real_rank(r.cayley_real_form)
    rep.checks["real rank canonical = real rank Cayley"] = rr_canon == rr_cay
    rep.details["real ranks"] = (rr_canon, rr_cay)

    rep.checks["sl2-data matches grading"] = computed == r.sl2_data
    rep.checks["dim g_0 matches grading"] = grading[0] == r.g0_type.dimension

    ge_sum = sum(2 * l + 1 for l in r.ge_exponents)
    rep.checks["dim g(e) = sum (2l+1)"] = r.ge_type.dimension == ge_sum
    ge_exps = tuple(sorted(e for f in r.ge_type.factors for e in exponents(root_system(_simple_type(f)))))
    rep.checks["g(e) exponents from its root system"] = ge_exps == r.ge_exponents

    if r.case_id.case == 2:
        n2 = dict(r.sl2_data.pairs).get(Fraction(1), 0)
        rep.checks["n_2 = (dim g - dim g_0)/2"] = 2 * n2 == dim_g - r.g0_type.dimension
    rep.checks["theta tag matches case"] = r.theta.case == r.case_id.case
    return rep
