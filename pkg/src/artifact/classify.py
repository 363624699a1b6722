"""Magical nilpotent orbits: dimension criterion, enumeration and catalog.

For a real nilpotent with signed diagram ``d`` in a classical real form the
criterion value is

    2 dim(c^R (x) C) - dim V(e) + (dim m - dim h)

and the orbit is magical iff the value vanishes and ``c^R`` is compact.  The
catalog lists the four families of labelled Dynkin diagrams together with their
canonical real forms.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .partitions import (
    Partition,
    PartitionError,
    RealFormId,
    ReductiveType,
    SignedYoungDiagram,
    complex_partition,
    complex_size,
    dim_centralizer_of_e,
    real_orbits,
    real_triple_centralizer,
    validate_complex_orbit,
    validate_real_orbit,
)
from .rootsys import AlgebraType, DynkinLabels, labels_from_mapping

DEFAULT_CAP = 18


class ClassifyError(ValueError):
    """Invalid input to the classification engine."""


def default_cap() -> int:
    raw = os.environ.get("MAGICAL_CAP", str(DEFAULT_CAP))
    try:
        cap = int(raw)
    except ValueError:
        raise ClassifyError(f"MAGICAL_CAP must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise ClassifyError(f"MAGICAL_CAP must be a positive integer, got {raw!r}")
    return cap


# ---------------------------------------------------------------- criterion


@dataclass(frozen=True)
class CriterionReport:
    criterion_value: Fraction
    compact_centralizer: bool
    magical: bool
    dim_V: int
    dim_c: int
    delta: int
    centralizer: ReductiveType

    @property
    def kostant_rallis_dim(self) -> Fraction:
        """``dim(h cap V) = (dim V + dim h - dim m) / 2`` for the Cayley image."""
        return Fraction(self.dim_V - self.delta, 2)


def magical_criterion(rf: RealFormId, d: SignedYoungDiagram) -> CriterionReport:
    if rf.family == "exc":
        raise ClassifyError("the dimension criterion covers classical real forms; use the oracle for exceptional ones")
    if rf.real_rank == 0:
        raise ClassifyError(f"{rf.label()} is compact and has no nonzero nilpotents")
    v = validate_real_orbit(rf, d)
    if not v.valid:
        raise ClassifyError(f"invalid diagram {d} for {rf.label()}: {v.reason}")
    part = complex_partition(rf, d)
    dim_v = dim_centralizer_of_e(rf.kind, part)
    c = real_triple_centralizer(rf, d)
    value = Fraction(2 * c.dimension - dim_v + rf.delta())
    compact = c.is_compact
    return CriterionReport(value, compact, value == 0 and compact, dim_v, c.dimension, rf.delta(), c)


def enumerate_magical(rf: RealFormId, cap: Optional[int] = None) -> List[SignedYoungDiagram]:
    cap = default_cap() if cap is None else cap
    if rf.family == "exc":
        raise ClassifyError("enumeration covers classical real forms only")
    if rf.matrix_size > cap:
        raise ClassifyError(f"{rf.label()} has size {rf.matrix_size} > cap {cap}")
    if rf.real_rank == 0:
        return []
    return [d for d in real_orbits(rf) if magical_criterion(rf, d).magical]


def _d(counts: Dict[int, Tuple[int, int]], tag: Optional[str] = None) -> SignedYoungDiagram:
    return SignedYoungDiagram.from_counts({k: v for k, v in counts.items() if v != (0, 0)}, tag)


def theorem_list(rf: RealFormId) -> List[SignedYoungDiagram]:
    """Closed-form list of magical diagrams for a classical real form."""
    f, prm = rf.family, rf.params
    out: List[SignedYoungDiagram] = []
    if rf.real_rank == 0:
        return out
    if f == "sl":
        n = prm[0]
        row = SignedYoungDiagram.unsigned(Partition.from_rows([n]))
        if n % 2 == 0:
            out += [SignedYoungDiagram(row.rows, "I"), SignedYoungDiagram(row.rows, "II")]
        else:
            out.append(row)
    elif f == "su":
        p, q = prm
        if p == q:
            out += [_d({2: (p, 0)}), _d({2: (0, p)})]
    elif f == "so*":
        m = prm[0]
        if m % 2 == 0:
            out += [_d({2: (m // 2, 0)}), _d({2: (0, m // 2)})]
    elif f == "spR":
        m = prm[0]
        out += [_d({2 * m: (1, 0)}), _d({2 * m: (0, 1)}), _d({2: (m, 0)}), _d({2: (0, m)})]
    elif f == "so":
        p, q = prm
        if q == p + 1:
            out.append(_d({2 * p + 1: (0, 1)}))
        if p == q + 1:
            out.append(_d({2 * q + 1: (1, 0)}))
        if p == q:
            out += [_d({2 * p - 1: (1, 0), 1: (0, 1)}), _d({2 * p - 1: (0, 1), 1: (1, 0)})]
        if p != q and min(p, q) >= 2:
            k = min(p, q)
            extra = abs(q - p) + 1
            if p < q:
                out.append(_d({2 * k - 1: (1, 0), 1: (0, extra)}))
            else:
                out.append(_d({2 * k - 1: (0, 1), 1: (extra, 0)}))
    # su* and sp(2p, 2q) carry no magical nilpotents
    return sorted(set(out), key=str)


# ---------------------------------------------------------------- weighted Dynkin diagrams


def h_eigenvalues(p: Partition) -> List[int]:
    vals: List[int] = []
    for k in p.rows():
        vals += list(range(k - 1, -k, -2))
    return sorted(vals, reverse=True)


def weighted_dynkin_from_partition(t: AlgebraType, p: Partition, tag: Optional[str] = None) -> DynkinLabels:
    v = validate_complex_orbit(t, p)
    if not v.valid:
        raise ClassifyError(f"invalid orbit {p} for {t}: {v.reason}")
    if tag is not None and not (t.family == "D" and v.very_even):
        raise ClassifyError("tags I/II apply to very even D-type orbits only")
    h = h_eigenvalues(p)
    n = t.rank
    if t.family == "A":
        return DynkinLabels(tuple(h[i] - h[i + 1] for i in range(n)))
    top = h[:n]
    labels = [top[i] - top[i + 1] for i in range(n - 1)]
    if t.family == "B":
        labels.append(top[n - 1])
    elif t.family == "C":
        labels.append(2 * top[n - 1])
    else:
        labels.append(top[n - 2] + top[n - 1])
        if tag == "II":
            labels[n - 2], labels[n - 1] = labels[n - 1], labels[n - 2]
    return DynkinLabels(tuple(labels))


# ---------------------------------------------------------------- catalog


@dataclass(frozen=True, order=True)
class MagicalCaseId:
    """``case`` in 1..4; ``p`` is the Case-3 parameter; ``variant`` selects the
    fork node ("I": alpha_n, "II": alpha_{n-1}) of the D_{2n} Case-2 rows that
    belong to so*_{4n}."""

    case: int
    type: AlgebraType
    p: Optional[int] = None
    variant: Optional[str] = None

    def __post_init__(self) -> None:
        t, n = self.type, self.type.rank
        if self.case not in (1, 2, 3, 4):
            raise ClassifyError(f"case must be 1..4, got {self.case}")
        if self.case == 2:
            ok = (
                (t.family == "A" and n % 2 == 1)
                or t.family in ("B", "C")
                or (t.family == "D" and n >= 4 and (self.variant is None or n % 2 == 0))
                or t.family == "E7"
            )
            if not ok:
                raise ClassifyError(f"no Case-2 diagram for {t}" + (f" ({self.variant})" if self.variant else ""))
            if self.variant not in (None, "I", "II") or (self.variant and t.family != "D"):
                raise ClassifyError(f"bad variant {self.variant!r}")
        elif self.variant is not None:
            raise ClassifyError("variants exist only for D-type Case 2")
        if self.case == 3:
            if t.family not in ("B", "D") or self.p is None:
                raise ClassifyError("Case 3 needs type B or D and a parameter p")
            hi = n if t.family == "B" else n - 1
            if not 2 <= self.p <= hi or (t.family == "D" and n < 4):
                raise ClassifyError(f"Case 3 parameter p={self.p} outside 2..{hi} for {t}")
        elif self.p is not None:
            raise ClassifyError("parameter p is only used in Case 3")
        if self.case == 4 and t.family not in ("F4", "E6", "E7", "E8"):
            raise ClassifyError(f"no Case-4 diagram for {t}")

    @property
    def prefix(self) -> str:
        return {1: "split", 2: "hermitian", 3: "case3", 4: "quat"}[self.case]

    def spec(self) -> str:
        t = self.type
        if t.is_exceptional:
            return f"{self.prefix}-{t.family}"
        fam = "D*" if self.variant else t.family
        s = f"{self.prefix}-{fam}:{t.rank}"
        if self.p is not None:
            s += f",{self.p}"
        if self.variant == "II":
            s += ":II"
        return s

    @classmethod
    def parse(cls, text: str) -> "MagicalCaseId":
        t = text.strip()
        prefixes = {"split": 1, "hermitian": 2, "case3": 3, "quat": 4}
        head, sep, rest = t.partition("-")
        if not sep or head not in prefixes:
            raise ClassifyError(f"unknown case prefix in {text!r}; expected one of {sorted(prefixes)}")
        case = prefixes[head]
        variant = None
        if rest.endswith(":II"):
            rest, variant = rest[:-3], "II"
        fam, _, args = rest.partition(":")
        fam = fam.upper()
        star = fam.endswith("*")
        if star:
            fam = fam[:-1]
            variant = variant or "I"
        try:
            if fam in ("E6", "E7", "E8", "F4", "G2"):
                at = AlgebraType.parse(fam)
                p = None
            else:
                nums = [int(x) for x in args.split(",")] if args else []
                if not nums:
                    raise ClassifyError(f"missing rank in {text!r}")
                at = AlgebraType(fam, nums[0])
                p = nums[1] if len(nums) > 1 else None
        except (ValueError, PartitionError) as exc:
            raise ClassifyError(f"cannot parse case {text!r}: {exc}") from None
        return cls(case, at, p, variant)

    def __str__(self) -> str:
        return self.spec()


_SPLIT_EXC = {"G2": "g2^2", "F4": "f4^4", "E6": "e6^6", "E7": "e7^7", "E8": "e8^8"}
_QUAT_EXC = {"F4": "f4^4", "E6": "e6^2", "E7": "e7^-5", "E8": "e8^-24"}
_QUAT_LABELS = {"E6": {3: 2, 4: 2}, "E7": {1: 2, 2: 2}, "E8": {7: 2, 8: 2}, "F4": {3: 2, 4: 2}}
# label-2 leaf used to build the principal so_8 inside Case 4
QUAT_DISTINGUISHED_NODE = {"E6": 4, "E7": 1, "E8": 8, "F4": 4}


def case_labels(cid: MagicalCaseId) -> DynkinLabels:
    t, n = cid.type, cid.type.rank
    if cid.case == 1:
        return DynkinLabels((2,) * n)
    if cid.case == 2:
        if t.family == "A":
            return labels_from_mapping(n, {(n + 1) // 2: 2})
        if t.family in ("B",) or (t.family == "D" and cid.variant is None):
            return labels_from_mapping(n, {1: 2})
        if t.family == "C":
            return labels_from_mapping(n, {n: 2})
        if t.family == "D":
            return labels_from_mapping(n, {n if cid.variant == "I" else n - 1: 2})
        return labels_from_mapping(7, {7: 2})
    if cid.case == 3:
        return labels_from_mapping(n, {i: 2 for i in range(1, cid.p)})
    return labels_from_mapping(n, _QUAT_LABELS[t.family])


def canonical_real_form(cid: MagicalCaseId) -> RealFormId:
    t, n = cid.type, cid.type.rank
    fam = t.family
    if cid.case == 1:
        if t.is_exceptional:
            return RealFormId("exc", (_SPLIT_EXC[fam],))
        return {
            "A": RealFormId("sl", (n + 1,)),
            "B": RealFormId("so", (n, n + 1)),
            "C": RealFormId("spR", (n,)),
            "D": RealFormId("so", (n, n)),
        }[fam]
    if cid.case == 2:
        if fam == "A":
            return RealFormId("su", ((n + 1) // 2, (n + 1) // 2))
        if fam == "B":
            return RealFormId("so", (2, 2 * n - 1))
        if fam == "C":
            return RealFormId("spR", (n,))
        if fam == "D":
            return RealFormId("so*", (n,)) if cid.variant else RealFormId("so", (2, 2 * n - 2))
        return RealFormId("exc", ("e7^-25",))
    if cid.case == 3:
        big = 2 * n + 1 if fam == "B" else 2 * n
        return RealFormId("so", (cid.p, big - cid.p))
    return RealFormId("exc", (_QUAT_EXC[fam],))


@dataclass(frozen=True)
class CatalogEntry:
    case_id: MagicalCaseId
    labels: DynkinLabels
    canonical_real_form: RealFormId


def catalog_case_ids(max_rank: int = 8) -> List[MagicalCaseId]:
    ids: List[MagicalCaseId] = []
    for n in range(1, max_rank + 1):
        ids.append(MagicalCaseId(1, AlgebraType("A", n)))
    for fam, lo in (("B", 2), ("C", 2), ("D", 4)):
        ids += [MagicalCaseId(1, AlgebraType(fam, n)) for n in range(lo, max_rank + 1)]
    ids += [MagicalCaseId(1, AlgebraType.parse(x)) for x in ("G2", "F4", "E6", "E7", "E8")]
    ids += [MagicalCaseId(2, AlgebraType("A", n)) for n in range(1, max_rank + 1, 2)]
    ids += [MagicalCaseId(2, AlgebraType("B", n)) for n in range(2, max_rank + 1)]
    ids += [MagicalCaseId(2, AlgebraType("C", n)) for n in range(2, max_rank + 1)]
    ids += [MagicalCaseId(2, AlgebraType("D", n)) for n in range(4, max_rank + 1)]
    for n in range(4, max_rank + 1, 2):
        ids += [MagicalCaseId(2, AlgebraType("D", n), variant=v) for v in ("I", "II")]
    ids.append(MagicalCaseId(2, AlgebraType.parse("E7")))
    for n in range(2, max_rank + 1):
        ids += [MagicalCaseId(3, AlgebraType("B", n), p=p) for p in range(2, n + 1)]
    for n in range(4, max_rank + 1):
        ids += [MagicalCaseId(3, AlgebraType("D", n), p=p) for p in range(2, n)]
    ids += [MagicalCaseId(4, AlgebraType.parse(x)) for x in ("F4", "E6", "E7", "E8")]
    return ids


def magical_catalog(max_rank: int = 8) -> List[CatalogEntry]:
    return [CatalogEntry(c, case_labels(c), canonical_real_form(c)) for c in catalog_case_ids(max_rank)]


def case_partition(cid: MagicalCaseId) -> Optional[Tuple[Partition, Optional[str]]]:
    """Partition (and very-even tag) of the catalog orbit for classical types."""
    t, n = cid.type, cid.type.rank
    if t.is_exceptional:
        return None
    kind, size = complex_size(t)
    if cid.case == 1:
        if t.family == "D":
            return Partition.from_rows([2 * n - 1, 1]), None
        return Partition.from_rows([size]), None
    if cid.case == 2:
        if t.family in ("A", "C"):
            return Partition.from_rows([2] * (size // 2)), None
        if cid.variant:
            return Partition.from_rows([2] * n), cid.variant
        return Partition.from_rows([3] + [1] * (size - 3)), None
    return Partition.from_rows([2 * cid.p - 1] + [1] * (size - 2 * cid.p + 1)), None


def case_for_diagram(rf: RealFormId, d: SignedYoungDiagram) -> Optional[List[MagicalCaseId]]:
    """Catalog rows whose labelled diagram matches the complex orbit of ``d``."""
    try:
        t = rf.complex_type()
    except Exception:
        return None
    part = complex_partition(rf, d)
    tag = None
    if t.family == "D" and validate_complex_orbit(t, part).very_even:
        tag = d.tag or "I"
    labels = weighted_dynkin_from_partition(t, part, tag)
    return [c for c in catalog_case_ids(max(t.rank, 1)) if c.type == t and case_labels(c) == labels]


def complex_orbit_is_magical_by_criterion(kind: str, size: int, part: Partition) -> bool:
    """True iff some real form of the complex algebra carries a magical diagram
    whose complex orbit has partition ``part``."""
    from .partitions import classical_real_forms

    for rf in classical_real_forms(size):
        if rf.kind != kind:
            continue
        for d in enumerate_magical(rf, cap=size):
            if complex_partition(rf, d) == part:
                return True
    return False
