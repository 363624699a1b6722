"""Partitions, signed Young diagrams, real forms and centralizer descriptors.

A partition is stored by its multiplicities ``r_i`` (number of rows of length
``i``).  A signed Young diagram records, for every row, its length and the sign
of its leftmost box; signs alternate along the row.  Unsigned diagrams (used
for ``sl(n,R)`` and ``su*(2m)``) carry sign ``0`` on every row.

In the ``so*`` bullet the centralizer summand written ``sp_{2p_i,2q_i}R`` is
read as the quaternionic unitary algebra ``sp(2p_i, 2q_i)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .rootsys import AlgebraType


class PartitionError(ValueError):
    """Invalid partition, diagram or real-form parameters."""


# ---------------------------------------------------------------- partitions


@dataclass(frozen=True)
class Partition:
    mult: Tuple[Tuple[int, int], ...]  # sorted (i, r_i), r_i > 0

    def __post_init__(self) -> None:
        for i, r in self.mult:
            if i < 1 or r < 1:
                raise PartitionError(f"bad part {i}^{r}")
        if not self.mult:
            raise PartitionError("empty partition")

    @classmethod
    def from_mult(cls, mult: Mapping[int, int]) -> "Partition":
        return cls(tuple(sorted((int(i), int(r)) for i, r in mult.items() if r)))

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Partition":
        m: Dict[int, int] = {}
        for k in rows:
            m[int(k)] = m.get(int(k), 0) + 1
        return cls.from_mult(m)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """``"3,1,1"`` or ``"2^3,1"``."""
        rows: List[int] = []
        for tok in text.replace(" ", "").split(","):
            if not tok:
                continue
            if "^" in tok:
                a, b = tok.split("^")
                rows += [int(a)] * int(b)
            else:
                rows.append(int(tok))
        return cls.from_rows(rows)

    @property
    def r(self) -> Dict[int, int]:
        return dict(self.mult)

    @property
    def size(self) -> int:
        return sum(i * r for i, r in self.mult)

    def rows(self) -> Tuple[int, ...]:
        return tuple(i for i, r in reversed(self.mult) for _ in range(r))

    @property
    def largest(self) -> int:
        return self.mult[-1][0]

    def dual(self) -> "Partition":
        return Partition.from_rows(self.dual_sequence())

    def dual_sequence(self) -> Tuple[int, ...]:
        """``(s_1, s_2, ...)`` with ``s_j = sum_{i >= j} r_i``."""
        r = self.r
        return tuple(sum(v for i, v in r.items() if i >= j) for j in range(1, self.largest + 1))

    def doubled(self) -> "Partition":
        return Partition.from_mult({i: 2 * v for i, v in self.mult})

    @property
    def is_zero_orbit(self) -> bool:
        return self.largest == 1

    def __str__(self) -> str:
        return ",".join(map(str, self.rows()))


def dual_partition(p: Partition) -> Partition:
    return p.dual()


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    out: List[Partition] = []

    def rec(remaining: int, cap: int, acc: List[int]) -> None:
        if remaining == 0:
            out.append(Partition.from_rows(acc))
            return
        for k in range(min(remaining, cap), 0, -1):
            acc.append(k)
            rec(remaining - k, k, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


# ---------------------------------------------------------------- signed diagrams

Row = Tuple[int, int]  # (length, leading sign in {+1, -1, 0})


def _row_signature(length: int, sign: int) -> Tuple[int, int]:
    hi, lo = (length + 1) // 2, length // 2
    return (hi, lo) if sign > 0 else (lo, hi)


@dataclass(frozen=True)
class SignedYoungDiagram:
    rows: Tuple[Row, ...]
    tag: Optional[str] = None

    def __post_init__(self) -> None:
        canon = tuple(sorted(self.rows, key=lambda r: (-r[0], -r[1])))
        object.__setattr__(self, "rows", canon)
        if not canon:
            raise PartitionError("empty diagram")
        for k, s in canon:
            if k < 1 or s not in (-1, 0, 1):
                raise PartitionError(f"bad row {(k, s)}")
        signs = {s for _, s in canon}
        if 0 in signs and len(signs) > 1:
            raise PartitionError("cannot mix signed and unsigned rows")
        if self.tag not in (None, "I", "II"):
            raise PartitionError(f"bad tag {self.tag!r}")

    @classmethod
    def from_counts(cls, counts: Mapping[int, Tuple[int, int]], tag: Optional[str] = None) -> "SignedYoungDiagram":
        rows: List[Row] = []
        for i, (p, q) in counts.items():
            rows += [(i, 1)] * p + [(i, -1)] * q
        return cls(tuple(rows), tag)

    @classmethod
    def unsigned(cls, p: Partition, tag: Optional[str] = None) -> "SignedYoungDiagram":
        return cls(tuple((k, 0) for k in p.rows()), tag)

    @classmethod
    def parse(cls, text: str) -> "SignedYoungDiagram":
        """``"3+,1-,1-"``, ``"2+^2"``, ``"4"`` (unsigned) with optional trailing ``" I"``/``" II"``."""
        text = text.strip()
        tag = None
        m = re.match(r"^(.*?)(?:\s*[:/ ]\s*(I|II))$", text)
        if m:
            text, tag = m.group(1), m.group(2)
        text = text.strip("[]() ")
        rows: List[Row] = []
        for tok in text.replace(" ", "").split(","):
            if not tok:
                continue
            mm = re.fullmatch(r"(\d+)([+-]?)(?:\^(\d+))?", tok)
            if not mm:
                raise PartitionError(f"cannot parse row {tok!r}")
            k = int(mm.group(1))
            s = {"+": 1, "-": -1, "": 0}[mm.group(2)]
            rows += [(k, s)] * int(mm.group(3) or 1)
        return cls(tuple(rows), tag)

    @property
    def is_signed(self) -> bool:
        return self.rows[0][1] != 0

    @property
    def size(self) -> int:
        return sum(k for k, _ in self.rows)

    def counts(self) -> Dict[int, Tuple[int, int]]:
        """``i -> (p_i, q_i)``; unsigned rows are counted in ``p_i``."""
        out: Dict[int, List[int]] = {}
        for k, s in self.rows:
            c = out.setdefault(k, [0, 0])
            c[0 if s >= 0 else 1] += 1
        return {k: (v[0], v[1]) for k, v in sorted(out.items())}

    def signature(self) -> Tuple[int, int]:
        p = q = 0
        for k, s in self.rows:
            a, b = _row_signature(k, s if s else 1)
            p, q = p + a, q + b
        return p, q

    def partition(self) -> Partition:
        return Partition.from_rows(k for k, _ in self.rows)

    def flipped(self) -> "SignedYoungDiagram":
        return SignedYoungDiagram(tuple((k, -s) for k, s in self.rows), self.tag)

    def untagged(self) -> "SignedYoungDiagram":
        return SignedYoungDiagram(self.rows, None)

    def __str__(self) -> str:
        sym = {1: "+", -1: "-", 0: ""}
        groups: List[str] = []
        for k, s in self.rows:
            groups.append(f"{k}{sym[s]}")
        out: List[str] = []
        for g in groups:
            if out and out[-1].split("^")[0] == g:
                head, _, cnt = out[-1].partition("^")
                out[-1] = f"{head}^{int(cnt or 1) + 1}"
            else:
                out.append(g)
        body = ",".join(out)
        return body + (f" {self.tag}" if self.tag else "")


# ---------------------------------------------------------------- reductive types

_EXC_DIMS = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}
_EXC_RANKS = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}

# real rank of exceptional real forms, keyed by label "e7^-5" etc.
EXCEPTIONAL_REAL_RANK = {
    "g2^2": 2, "g2^-14": 0,
    "f4^4": 4, "f4^-20": 1, "f4^-52": 0,
    "e6^6": 6, "e6^2": 4, "e6^-14": 2, "e6^-26": 2, "e6^-78": 0,
    "e7^7": 7, "e7^-5": 4, "e7^-25": 3, "e7^-133": 0,
    "e8^8": 8, "e8^-24": 4, "e8^-248": 0,
}


def classical_complex_dim(family: str, n: int) -> int:
    """Dimension of ``sl_n``, ``so_n`` or ``sp_n`` (``n`` is the matrix size)."""
    if family == "sl":
        return n * n - 1 if n >= 1 else 0
    if family == "so":
        return n * (n - 1) // 2
    if family == "sp":
        return n * (n + 1) // 2
    raise PartitionError(f"unknown classical family {family!r}")


@dataclass(frozen=True)
class Factor:
    """A simple (or small non-simple) summand of a reductive algebra.

    ``kind`` is one of

    * complex: ``"slC"`` (n), ``"soC"`` (n), ``"spC"`` (n = matrix size),
      ``"excC"`` (family name);
    * real: ``"sl"`` (n), ``"su"`` (p, q), ``"su*"`` (r, matrix 2r),
      ``"so"`` (p, q), ``"so*"`` (r, matrix 2r), ``"spR"`` (r, matrix 2r),
      ``"sp"`` (p, q; quaternionic, matrix 2(p+q)), ``"exc"`` (label such as
      ``"e6^-26"``), ``"cplx"`` (a complex simple algebra viewed as real;
      params = (family, n) as in the complex kinds).
    """

    kind: str
    params: Tuple

    @property
    def complex_dim(self) -> int:
        k, p = self.kind, self.params
        if k in ("slC", "soC", "spC"):
            return classical_complex_dim(k[:2], p[0])
        if k == "excC":
            return _EXC_DIMS[p[0]]
        if k == "sl":
            return p[0] ** 2 - 1
        if k == "su":
            return (p[0] + p[1]) ** 2 - 1
        if k == "su*":
            return (2 * p[0]) ** 2 - 1
        if k == "so":
            return classical_complex_dim("so", p[0] + p[1])
        if k == "so*":
            return classical_complex_dim("so", 2 * p[0])
        if k == "spR":
            return classical_complex_dim("sp", 2 * p[0])
        if k == "sp":
            return classical_complex_dim("sp", 2 * (p[0] + p[1]))
        if k == "exc":
            return _EXC_DIMS[p[0][:2].upper()]
        if k == "cplx":
            return 2 * Factor(p[0], p[1:]).complex_dim
        raise PartitionError(f"unknown factor kind {k!r}")

    @property
    def is_real(self) -> bool:
        return self.kind not in ("slC", "soC", "spC", "excC")

    @property
    def is_compact(self) -> bool:
        return self.real_rank == 0

    @property
    def real_rank(self) -> int:
        k, p = self.kind, self.params
        if k == "sl":
            return p[0] - 1
        if k in ("su", "so", "sp"):
            return min(p)
        if k == "su*":
            return p[0] - 1
        if k == "so*":
            return p[0] // 2
        if k == "spR":
            return p[0]
        if k == "exc":
            return EXCEPTIONAL_REAL_RANK[p[0]]
        if k == "cplx":
            return Factor(p[0], p[1:]).complex_rank
        raise PartitionError(f"real rank undefined for complex factor {self}")

    @property
    def complex_rank(self) -> int:
        k, p = self.kind, self.params
        if k == "slC":
            return p[0] - 1
        if k in ("soC", "spC"):
            return p[0] // 2
        if k == "excC":
            return _EXC_RANKS[p[0]]
        raise PartitionError(f"complex rank undefined for {self}")

    def label(self) -> str:
        k, p = self.kind, self.params
        if k == "slC":
            return f"sl_{p[0]}C"
        if k == "soC":
            return f"so_{p[0]}C"
        if k == "spC":
            return f"sp_{p[0]}C"
        if k == "excC":
            return p[0].lower()
        if k == "sl":
            return f"sl_{p[0]}R"
        if k == "su":
            return f"su_{p[0]},{p[1]}"
        if k == "su*":
            return f"su*_{2 * p[0]}"
        if k == "so":
            return f"so_{p[0]},{p[1]}"
        if k == "so*":
            return f"so*_{2 * p[0]}"
        if k == "spR":
            return f"sp_{2 * p[0]}R"
        if k == "sp":
            return f"sp_{2 * p[0]},{2 * p[1]}"
        if k == "exc":
            return p[0]
        if k == "cplx":
            return Factor(p[0], p[1:]).label()
        return f"{k}{p}"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class ReductiveType:
    """Torus plus simple factors.  ``torus`` is the complex torus rank (complex
    types) or the compact torus rank (real types); ``split_torus`` counts
    ``R`` summands of a real type."""

    factors: Tuple[Factor, ...] = ()
    torus: int = 0
    split_torus: int = 0
    real: bool = False

    @property
    def dimension(self) -> int:
        """Complex dimension of the complexification."""
        return self.torus + self.split_torus + sum(f.complex_dim for f in self.factors)

    @property
    def torus_rank(self) -> int:
        return self.torus + self.split_torus

    @property
    def is_compact(self) -> bool:
        if not self.real:
            raise PartitionError("compactness is defined for real types only")
        return self.split_torus == 0 and all(f.is_compact for f in self.factors)

    @property
    def real_rank(self) -> int:
        if not self.real:
            raise PartitionError("real rank is defined for real types only")
        return self.split_torus + sum(f.real_rank for f in self.factors)

    @property
    def semisimple_dimension(self) -> int:
        return sum(f.complex_dim for f in self.factors)

    def label(self) -> str:
        parts = [f.label() for f in self.factors]
        if self.real:
            if self.split_torus:
                parts.insert(0, "R" if self.split_torus == 1 else f"R^{self.split_torus}")
            if self.torus:
                parts.append("u_1" if self.torus == 1 else f"u_1^{self.torus}")
        elif self.torus:
            parts.append("C" if self.torus == 1 else f"C^{self.torus}")
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.label()


class _Builder:
    """Accumulates summands, normalising degenerate small algebras."""

    def __init__(self, real: bool) -> None:
        self.real = real
        self.factors: List[Factor] = []
        self.torus = 0
        self.split = 0

    def add(self, kind: str, *params) -> None:
        if kind == "slC" or kind == "sl":
            n = params[0]
            if n >= 2:
                self.factors.append(Factor(kind, (n,)))
            return
        if kind == "soC":
            n = params[0]
            if n == 2:
                self.torus += 1
            elif n >= 3:
                self.factors.append(Factor(kind, (n,)))
            return
        if kind == "spC":
            if params[0] >= 2:
                self.factors.append(Factor(kind, (params[0],)))
            return
        if kind == "so":
            p, q = params
            if p + q == 2:
                if p * q:
                    self.split += 1
                else:
                    self.torus += 1
            elif p + q >= 3:
                self.factors.append(Factor(kind, (p, q)))
            return
        if kind == "su":
            p, q = params
            if p + q >= 2:
                self.factors.append(Factor(kind, (p, q)))
            return
        if kind == "so*":
            r = params[0]
            if r == 1:
                self.torus += 1
            elif r >= 2:
                self.factors.append(Factor(kind, (r,)))
            return
        if kind in ("su*", "spR"):
            if params[0] >= 1:
                self.factors.append(Factor(kind, (params[0],)))
            return
        if kind == "sp":
            if sum(params) >= 1:
                self.factors.append(Factor(kind, tuple(params)))
            return
        self.factors.append(Factor(kind, tuple(params)))

    def build(self) -> ReductiveType:
        fs = tuple(sorted(self.factors, key=lambda f: (-f.complex_dim, f.kind, f.params)))
        return ReductiveType(fs, self.torus, self.split, self.real)


def reductive(real: bool, summands: Iterable[Tuple], torus: int = 0, split_torus: int = 0) -> ReductiveType:
    b = _Builder(real)
    for s in summands:
        b.add(*s)
    b.torus += torus
    b.split += split_torus
    return b.build()


# ---------------------------------------------------------------- real forms

REAL_FAMILIES = ("sl", "su", "su*", "so", "so*", "spR", "sp")


@dataclass(frozen=True)
class RealFormId:
    """A real form.  Classical parameters:

    ``sl (n)``, ``su (p, q)``, ``su* (m)`` = su*(2m), ``so (p, q)``,
    ``so* (m)`` = so*(2m), ``spR (m)`` = sp(2m, R), ``sp (p, q)`` = sp(2p, 2q).
    Exceptional forms use family ``"exc"`` with a label such as ``"e7^-5"``.
    """

    family: str
    params: Tuple

    def __post_init__(self) -> None:
        f, p = self.family, tuple(self.params)
        object.__setattr__(self, "params", p)
        if f == "exc":
            if len(p) != 1 or p[0] not in EXCEPTIONAL_REAL_RANK:
                raise PartitionError(f"unknown exceptional real form {p}")
            return
        if f not in REAL_FAMILIES:
            raise PartitionError(f"unknown real-form family {f!r}")
        want = 2 if f in ("su", "so", "sp") else 1
        if len(p) != want or any((not isinstance(x, int)) or x < 0 for x in p):
            raise PartitionError(f"{f} expects {want} non-negative integer parameter(s), got {p}")
        if want == 1 and p[0] < 1:
            raise PartitionError(f"{f} parameter must be positive")
        if want == 2 and sum(p) < 1:
            raise PartitionError(f"{f} parameters must not both vanish")

    @classmethod
    def parse(cls, text: str) -> "RealFormId":
        t = text.strip()
        if "^" in t and ":" not in t:
            return cls("exc", (t.lower(),))
        fam, sep, rest = t.partition(":")
        if not sep:
            raise PartitionError(f"expected 'family:params' at position {len(t)} in {text!r}")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise PartitionError(f"non-integer parameter at position {len(fam) + 1} in {text!r}") from None
        return cls(fam.strip(), params)

    def spec(self) -> str:
        if self.family == "exc":
            return self.params[0]
        return f"{self.family}:{','.join(map(str, self.params))}"

    @property
    def kind(self) -> str:
        """Complex family of the complexification: ``sl``, ``so`` or ``sp``."""
        return {"sl": "sl", "su": "sl", "su*": "sl", "so": "so", "so*": "so", "spR": "sp", "sp": "sp"}[self.family]

    @property
    def matrix_size(self) -> int:
        f, p = self.family, self.params
        if f == "sl":
            return p[0]
        if f in ("su", "so"):
            return p[0] + p[1]
        if f in ("su*", "so*", "spR"):
            return 2 * p[0]
        if f == "sp":
            return 2 * (p[0] + p[1])
        raise PartitionError("exceptional forms have no matrix size")

    @property
    def dimension(self) -> int:
        if self.family == "exc":
            return _EXC_DIMS[self.params[0][:2].upper()]
        return classical_complex_dim(self.kind, self.matrix_size)

    @property
    def diagram_size(self) -> int:
        f, p = self.family, self.params
        if f in ("su*", "so*"):
            return p[0]
        if f == "sp":
            return p[0] + p[1]
        return self.matrix_size

    @property
    def uses_signs(self) -> bool:
        return self.family not in ("sl", "su*")

    @property
    def signature(self) -> Optional[Tuple[int, int]]:
        if self.family in ("su", "so", "sp"):
            return self.params  # type: ignore[return-value]
        return None

    @property
    def doubles_rows(self) -> bool:
        return self.family in ("su*", "so*", "sp")

    def complex_type(self) -> AlgebraType:
        n = self.matrix_size
        if self.kind == "sl":
            return AlgebraType("A", n - 1)
        if self.kind == "sp":
            return AlgebraType("C", n // 2)
        return AlgebraType("B", n // 2) if n % 2 else AlgebraType("D", n // 2)

    def delta(self) -> int:
        """``dim m - dim h`` for a Cartan decomposition ``g = h + m``."""
        f, p = self.family, self.params
        if f == "sl":
            return p[0] - 1
        if f == "su":
            return 1 - (p[1] - p[0]) ** 2
        if f == "su*":
            return -2 * p[0] - 1
        if f == "so":
            return (p[0] + p[1] - (p[1] - p[0]) ** 2) // 2
        if f == "so*":
            return -p[0]
        if f == "spR":
            return p[0]
        if f == "sp":
            return -2 * (p[0] - p[1]) ** 2 - p[0] - p[1]
        raise PartitionError("delta is tabulated for classical forms only")

    def maximal_compact_dim(self) -> int:
        """``dim h`` read off directly from the maximal compact subalgebra."""
        f, p = self.family, self.params
        so = lambda n: n * (n - 1) // 2
        if f == "sl":
            return so(p[0])
        if f == "su":
            return p[0] ** 2 + p[1] ** 2 - 1
        if f == "su*":
            return p[0] * (2 * p[0] + 1)
        if f == "so":
            return so(p[0]) + so(p[1])
        if f in ("so*", "spR"):
            return p[0] ** 2
        if f == "sp":
            return p[0] * (2 * p[0] + 1) + p[1] * (2 * p[1] + 1)
        raise PartitionError("classical forms only")

    def dim_h(self) -> int:
        return (self.dimension - self.delta()) // 2

    def as_factor(self) -> Factor:
        if self.family == "exc":
            return Factor("exc", self.params)
        return Factor(self.family, self.params)

    @property
    def real_rank(self) -> int:
        return self.as_factor().real_rank

    def label(self) -> str:
        return self.as_factor().label()

    def __str__(self) -> str:
        return self.label()


def classical_real_forms(size: int) -> List[RealFormId]:
    """All noncompact classical real forms of matrix size ``size`` (up to the
    (p, q) <-> (q, p) duplication, which is kept: both orders are listed)."""
    out: List[RealFormId] = []
    n = size
    if n >= 2:
        out.append(RealFormId("sl", (n,)))
        out += [RealFormId("su", (p, n - p)) for p in range(1, n)]
    if n >= 4 and n % 2 == 0:
        out.append(RealFormId("su*", (n // 2,)))
    if n >= 3:
        out += [RealFormId("so", (p, n - p)) for p in range(1, n)]
    if n >= 4 and n % 2 == 0:
        out.append(RealFormId("so*", (n // 2,)))
    if n % 2 == 0 and n >= 2:
        out.append(RealFormId("spR", (n // 2,)))
        m = n // 2
        out += [RealFormId("sp", (p, m - p)) for p in range(1, m)]
    return out


# ---------------------------------------------------------------- validity


@dataclass(frozen=True)
class OrbitValidity:
    valid: bool
    very_even: bool = False
    reason: str = ""

    def __post_init__(self) -> None:
        if self.very_even and not self.valid:
            raise PartitionError("very_even requires valid")

    def __bool__(self) -> bool:
        return self.valid


def complex_size(t: AlgebraType) -> Tuple[str, int]:
    """Classical kind and natural-representation size of a classical type."""
    n = t.rank
    return {"A": ("sl", n + 1), "B": ("so", 2 * n + 1), "C": ("sp", 2 * n), "D": ("so", 2 * n)}[t.family]


def validate_partition(kind: str, p: Partition) -> OrbitValidity:
    r = p.r
    if kind == "sl":
        return OrbitValidity(True, reason="every partition occurs")
    if kind == "so":
        bad = [i for i, v in r.items() if i % 2 == 0 and v % 2]
        if bad:
            return OrbitValidity(False, reason=f"even row length {bad[0]} has odd multiplicity")
        ve = all(i % 2 == 0 for i in r)
        return OrbitValidity(True, very_even=ve, reason="very even: two orbits" if ve else "ok")
    if kind == "sp":
        bad = [i for i, v in r.items() if i % 2 == 1 and v % 2]
        if bad:
            return OrbitValidity(False, reason=f"odd row length {bad[0]} has odd multiplicity")
        return OrbitValidity(True, reason="ok")
    raise PartitionError(f"unknown kind {kind!r}")


def validate_complex_orbit(t: AlgebraType, p: Partition) -> OrbitValidity:
    if t.is_exceptional:
        raise PartitionError("partitions describe classical orbits only")
    kind, n = complex_size(t)
    if p.size != n:
        raise PartitionError(f"partition of {p.size} does not match {t} (size {n})")
    v = validate_partition(kind, p)
    if t.family == "B" and v.very_even:  # impossible for odd size, kept for clarity
        return OrbitValidity(True, reason="ok")
    return v


def validate_real_orbit(rf: RealFormId, d: SignedYoungDiagram) -> OrbitValidity:
    if rf.family == "exc":
        raise PartitionError("signed diagrams describe classical real forms only")
    if d.size != rf.diagram_size:
        raise PartitionError(f"diagram has {d.size} boxes, {rf.label()} needs {rf.diagram_size}")
    counts = d.counts()
    f = rf.family
    if not rf.uses_signs:
        if d.is_signed:
            return OrbitValidity(False, reason=f"{rf.label()} orbits are unsigned partitions")
        if f == "sl":
            ve = all(i % 2 == 0 for i in counts)
            if ve and d.tag is None:
                return OrbitValidity(False, reason="all rows even: tag I or II required")
            if not ve and d.tag is not None:
                return OrbitValidity(False, reason="tag only allowed when all rows are even")
            return OrbitValidity(True, very_even=ve, reason="ok")
        if d.tag is not None:
            return OrbitValidity(False, reason="no tags for su*")
        return OrbitValidity(True, reason="ok")
    if not d.is_signed:
        return OrbitValidity(False, reason=f"{rf.label()} orbits need signed rows")
    sig = d.signature()
    if rf.signature is not None and sig != rf.signature:
        raise PartitionError(f"signature {sig} does not match {rf.label()}")
    ve = False
    if f == "so":
        for i, (p, q) in counts.items():
            if i % 2 == 0 and (p + q) % 2:
                return OrbitValidity(False, reason=f"even rows of length {i} occur with odd multiplicity")
            if i % 2 == 0 and q:
                return OrbitValidity(False, reason=f"even rows of length {i} must start with +")
        ve = all(i % 2 == 0 for i in counts)
    elif f == "so*":
        for i, (p, q) in counts.items():
            if i % 2 == 1 and q:
                return OrbitValidity(False, reason=f"odd rows of length {i} must start with +")
    elif f == "spR":
        for i, (p, q) in counts.items():
            if i % 2 == 1 and (p + q) % 2:
                return OrbitValidity(False, reason=f"odd rows of length {i} occur with odd multiplicity")
            if i % 2 == 1 and q:
                return OrbitValidity(False, reason=f"odd rows of length {i} must start with +")
    elif f == "sp":
        for i, (p, q) in counts.items():
            if i % 2 == 0 and q:
                return OrbitValidity(False, reason=f"even rows of length {i} must start with +")
    if ve and d.tag is None:
        return OrbitValidity(False, reason="all rows even: tag I or II required")
    if not ve and d.tag is not None:
        return OrbitValidity(False, reason="tag only allowed when all rows are even")
    return OrbitValidity(True, very_even=ve, reason="ok")


def complex_partition(rf: RealFormId, d: SignedYoungDiagram) -> Partition:
    """Partition of the complex orbit: forget signs, doubling rows for su*, so*, sp."""
    p = d.partition()
    return p.doubled() if rf.doubles_rows else p


# ---------------------------------------------------------------- centralizers


def dim_centralizer_of_e(kind: str, p: Partition) -> int:
    """``dim ker ad_e``: ``sum s_j^2 - 1`` (sl) and ``(sum s_j^2 -+ #odd parts) / 2``
    with ``-`` for so and ``+`` for sp."""
    s = p.dual_sequence()
    ss = sum(x * x for x in s)
    if kind == "sl":
        return ss - 1
    odd = sum(v for i, v in p.mult if i % 2)
    if kind == "sp":
        return (ss + odd) // 2
    return (ss - odd) // 2


def complex_triple_centralizer(kind: str, p: Partition) -> ReductiveType:
    r = p.r
    if kind == "sl":
        summands = [("slC", v) for v in r.values()]
        return reductive(False, summands, torus=len(r) - 1)
    if kind == "so":
        return reductive(False, [("spC", v) if i % 2 == 0 else ("soC", v) for i, v in r.items()])
    if kind == "sp":
        return reductive(False, [("spC", v) if i % 2 == 1 else ("soC", v) for i, v in r.items()])
    raise PartitionError(f"unknown kind {kind!r}")


def complex_centralizer(t: AlgebraType, p: Partition) -> Tuple[int, ReductiveType]:
    v = validate_complex_orbit(t, p)
    if not v.valid:
        raise PartitionError(f"invalid orbit for {t}: {v.reason}")
    kind, _ = complex_size(t)
    return dim_centralizer_of_e(kind, p), complex_triple_centralizer(kind, p)


def real_triple_centralizer(rf: RealFormId, d: SignedYoungDiagram) -> ReductiveType:
    v = validate_real_orbit(rf, d)
    if not v.valid:
        raise PartitionError(f"invalid orbit for {rf.label()}: {v.reason}")
    c = d.counts()
    f = rf.family
    if f == "sl":
        return reductive(True, [("sl", p + q) for p, q in c.values()], split_torus=len(c) - 1)
    if f == "su*":
        return reductive(True, [("su*", p + q) for p, q in c.values()], split_torus=len(c) - 1)
    if f == "su":
        return reductive(True, [("su", p, q) for p, q in c.values()], torus=len(c) - 1)
    if f == "so":
        return reductive(True, [("spR", (p + q) // 2) if i % 2 == 0 else ("so", p, q) for i, (p, q) in c.items()])
    if f == "so*":
        return reductive(True, [("sp", p, q) if i % 2 == 0 else ("so*", p + q) for i, (p, q) in c.items()])
    if f == "spR":
        return reductive(True, [("spR", (p + q) // 2) if i % 2 == 1 else ("so", p, q) for i, (p, q) in c.items()])
    if f == "sp":
        return reductive(True, [("sp", p, q) if i % 2 == 1 else ("so*", p + q) for i, (p, q) in c.items()])
    raise PartitionError(f"no centralizer rule for {f}")


# ---------------------------------------------------------------- enumeration


@lru_cache(maxsize=None)
def _signed_by_signature(n: int) -> Dict[Tuple[int, int], Tuple[SignedYoungDiagram, ...]]:
    out: Dict[Tuple[int, int], List[SignedYoungDiagram]] = {}
    for part in partitions_of(n):
        items = part.mult
        for choice in product(*[range(r + 1) for _, r in items]):
            counts = {i: (pp, r - pp) for (i, r), pp in zip(items, choice)}
            d = SignedYoungDiagram.from_counts(counts)
            out.setdefault(d.signature(), []).append(d)
    return {k: tuple(v) for k, v in out.items()}


def signed_diagrams(n: int, signature: Optional[Tuple[int, int]] = None) -> Iterator[SignedYoungDiagram]:
    table = _signed_by_signature(n)
    if signature is not None:
        yield from table.get(tuple(signature), ())
    else:
        for k in sorted(table):
            yield from table[k]


def real_orbits(rf: RealFormId) -> List[SignedYoungDiagram]:
    """All valid diagrams for a classical real form (very-even ones tagged I and II)."""
    n = rf.diagram_size
    out: List[SignedYoungDiagram] = []
    if not rf.uses_signs:
        cands: Iterable[SignedYoungDiagram] = (SignedYoungDiagram.unsigned(p) for p in partitions_of(n))
    else:
        cands = signed_diagrams(n, rf.signature)
    for d in cands:
        for tagged in (d, SignedYoungDiagram(d.rows, "I"), SignedYoungDiagram(d.rows, "II")):
            if validate_real_orbit(rf, tagged).valid:
                out.append(tagged)
    return out
