"""Root systems of simple Lie algebras and gradings by weighted Dynkin diagrams.

Node conventions (1-based, as printed in the diagrams):

* ``B_n``: ``alpha_n`` is the short simple root.
* ``C_n``: ``alpha_n`` is the long simple root.
* ``D_n``: ``alpha_{n-1}`` and ``alpha_n`` are the two fork nodes.
* ``G2``: ``alpha_1`` short, ``alpha_2`` long.
* ``F4``: ``alpha_1, alpha_2`` short, ``alpha_3, alpha_4`` long.
* ``E6/E7/E8``: the chain ``1 - 2 - 3 - 5 - 6 (- 7 - 8)`` with ``alpha_4``
  attached to the trivalent node ``alpha_3``.

The Cartan matrix follows ``A[i][j] = alpha_j(h_i) = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)``
with squared lengths 2 for short roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

Root = Tuple[int, ...]

EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
CLASSICAL = ("A", "B", "C", "D")
FAMILIES = CLASSICAL + tuple(EXCEPTIONAL_RANKS)


class RootSystemError(ValueError):
    """Raised for invalid types or label vectors."""


@dataclass(frozen=True, order=True)
class AlgebraType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise RootSystemError("rank must be an integer")
        fixed = EXCEPTIONAL_RANKS.get(self.family)
        if fixed is not None and self.rank != fixed:
            raise RootSystemError(f"{self.family} has rank {fixed}, got {self.rank}")
        minimum = {"A": 1, "B": 2, "C": 2, "D": 3}.get(self.family, 1)
        if self.rank < minimum:
            raise RootSystemError(f"{self.family}_n requires n >= {minimum}, got {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraType":
        """Parse ``"B4"``, ``"B:4"``, ``"E8"`` or ``"G2"``."""
        t = text.strip().upper().replace("_", "")
        if t in EXCEPTIONAL_RANKS:
            return cls(t, EXCEPTIONAL_RANKS[t])
        fam, rest = t[:1], t[1:].lstrip(":")
        if fam not in CLASSICAL or not rest.isdigit():
            raise RootSystemError(f"cannot parse algebra type {text!r}")
        return cls(fam, int(rest))

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL_RANKS

    @property
    def name(self) -> str:
        return self.family if self.is_exceptional else f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name


def _edges_and_lengths(t: AlgebraType) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Squared lengths of simple roots and the (0-based) edges of the diagram."""
    n = t.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if t.family == "A":
        return [2] * n, chain
    if t.family == "B":
        return [4] * (n - 1) + [2], chain
    if t.family == "C":
        return [2] * (n - 1) + [4], chain
    if t.family == "D":
        return [2] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if t.family == "G2":
        return [2, 6], [(0, 1)]
    if t.family == "F4":
        return [2, 2, 4, 4], [(0, 1), (1, 2), (2, 3)]
    # E-types: chain 1-2-3-5-6-7-8, node 4 hangs off node 3.
    order = [0, 1, 2] + list(range(4, n))
    edges = [(order[k], order[k + 1]) for k in range(len(order) - 1)] + [(2, 3)]
    return [2] * n, edges


def inner_product_matrix(t: AlgebraType) -> List[List[int]]:
    lengths, edges = _edges_and_lengths(t)
    n = t.rank
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = lengths[i]
    for i, j in edges:
        v = -max(lengths[i], lengths[j]) // 2
        b[i][j] = b[j][i] = v
    return b


def cartan_matrix(t: AlgebraType) -> List[List[int]]:
    b = inner_product_matrix(t)
    return [[2 * b[i][j] // b[i][i] for j in range(t.rank)] for i in range(t.rank)]


@dataclass(frozen=True)
class RootSystem:
    type: AlgebraType
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    gram: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Root, ...]
    _index: Dict[Root, int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def dimension(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    @property
    def roots(self) -> Tuple[Root, ...]:
        neg = tuple(tuple(-a for a in r) for r in self.positive_roots)
        return self.positive_roots + neg

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        if v in self._index:
            return True
        return tuple(-a for a in v) in self._index

    def index(self, root: Sequence[int]) -> int:
        """Position of a positive root in ``positive_roots``."""
        return self._index[tuple(root)]

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j])

    def pairing(self, beta: Sequence[int], i: int) -> int:
        """``<beta, alpha_i^vee> = beta(h_i)``."""
        row = self.cartan_matrix[i]
        return sum(beta[j] * row[j] for j in range(self.rank))

    def coroot_coefficients(self, root: Sequence[int]) -> Tuple[int, ...]:
        """Coefficients of ``h_root`` in the simple coroots ``h_1..h_r``."""
        ll = self.inner(root, root)
        out = []
        for i in range(self.rank):
            num = root[i] * self.gram[i][i]
            if num % ll:
                raise RootSystemError("non-integral coroot")
            out.append(num // ll)
        return tuple(out)

    def height(self, root: Sequence[int]) -> int:
        return sum(root)


def build_root_system(t: AlgebraType) -> RootSystem:
    """Positive roots by root-string closure, ordered by height and then by
    decreasing coefficient tuple, so the simple roots come first as ``alpha_1..alpha_r``."""
    a = cartan_matrix(t)
    n = t.rank
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pair = sum(beta[j] * a[i][j] for j in range(n))
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        nxt.add(up)
        found |= nxt
        layer = sorted(nxt)
    ordered = tuple(sorted(found, key=lambda r: (sum(r), tuple(-c for c in r))))
    rs = RootSystem(
        type=t,
        cartan_matrix=tuple(tuple(r) for r in a),
        gram=tuple(tuple(r) for r in inner_product_matrix(t)),
        positive_roots=ordered,
    )
    rs._index.update({r: k for k, r in enumerate(ordered)})
    return rs


_CACHE: Dict[AlgebraType, RootSystem] = {}


def root_system(t: AlgebraType) -> RootSystem:
    """Cached ``build_root_system``."""
    rs = _CACHE.get(t)
    if rs is None:
        rs = _CACHE[t] = build_root_system(t)
    return rs


def expected_positive_root_count(t: AlgebraType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "G2": 6,
        "F4": 24,
        "E6": 36,
        "E7": 63,
        "E8": 120,
    }[t.family]


# ---------------------------------------------------------------- gradings


@dataclass(frozen=True)
class DynkinLabels:
    labels: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x not in (0, 1, 2) for x in self.labels):
            raise RootSystemError(f"labels must lie in {{0,1,2}}: {self.labels}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "DynkinLabels":
        return cls(tuple(int(v) for v in values))

    @property
    def is_even(self) -> bool:
        return all(x != 1 for x in self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __str__(self) -> str:
        return ",".join(map(str, self.labels))


def _check_labels(rs: RootSystem, labels: DynkinLabels) -> None:
    if len(labels.labels) != rs.rank:
        raise RootSystemError(f"expected {rs.rank} labels, got {len(labels.labels)}")


def root_weight(root: Sequence[int], labels: DynkinLabels) -> int:
    return sum(a * x for a, x in zip(root, labels.labels))


@dataclass(frozen=True)
class GradedDims:
    dims: Tuple[Tuple[int, int], ...]  # sorted (j, dim g_j) with dim > 0

    @property
    def mapping(self) -> Dict[int, int]:
        return dict(self.dims)

    def __getitem__(self, j: int) -> int:
        return self.mapping.get(j, 0)

    @property
    def total(self) -> int:
        return sum(d for _, d in self.dims)


def graded_dimensions(rs: RootSystem, labels: DynkinLabels) -> GradedDims:
    _check_labels(rs, labels)
    dims: Dict[int, int] = {0: rs.rank}
    for r in rs.positive_roots:
        w = root_weight(r, labels)
        dims[w] = dims.get(w, 0) + 1
        dims[-w] = dims.get(-w, 0) + 1
    return GradedDims(tuple(sorted((j, d) for j, d in dims.items() if d)))


@dataclass(frozen=True)
class Sl2Data:
    """Irreducible decomposition of ``g`` under an sl2-triple.

    ``n0`` counts trivial summands; ``pairs`` holds ``(m, n_{2m})`` with
    ``m > 0`` (``m`` is a Fraction only for non-even gradings).
    """

    n0: int
    pairs: Tuple[Tuple[Fraction, int], ...]

    @property
    def dimension(self) -> int:
        return self.n0 + sum(int(n * (2 * m + 1)) for m, n in self.pairs)

    def as_dict(self) -> Dict[Fraction, int]:
        out = {Fraction(0): self.n0} if self.n0 else {}
        out.update(dict(self.pairs))
        return out

    def m_values(self) -> Tuple[Fraction, ...]:
        return tuple(m for m, _ in self.pairs)


def sl2_multiplicities(gd: GradedDims) -> Sl2Data:
    d = gd.mapping
    for j, v in d.items():
        if d.get(-j, 0) != v:
            raise RootSystemError("graded dimensions are not symmetric")
    top = max(d)
    n0 = None
    pairs = []
    for j in range(0, top + 1):
        n = d.get(j, 0) - d.get(j + 2, 0)
        if n < 0:
            raise RootSystemError(f"inconsistent grading: n_{j} = {n} < 0")
        if j == 0:
            n0 = n
        elif n:
            pairs.append((Fraction(j, 2), n))
    return Sl2Data(n0=n0 or 0, pairs=tuple(pairs))


def expand_sl2_data(data: Sl2Data) -> Dict[int, int]:
    """Inverse of ``sl2_multiplicities``: graded dims ``j >= 0`` from the sl2-data."""
    out: Dict[int, int] = {}
    items = [(Fraction(0), data.n0)] + list(data.pairs)
    for m, n in items:
        top = int(2 * m)
        for j in range(top, -1, -2):
            out[j] = out.get(j, 0) + n
    return {j: v for j, v in sorted(out.items()) if v}


def exponents(rs: RootSystem) -> Tuple[int, ...]:
    """Exponents as the dual partition of the height distribution of positive roots."""
    counts: Dict[int, int] = {}
    for r in rs.positive_roots:
        counts[sum(r)] = counts.get(sum(r), 0) + 1
    out: List[int] = []
    top = max(counts)
    for k in range(1, top + 1):
        out.extend([k] * (counts.get(k, 0) - counts.get(k + 1, 0)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class WeightedPoset:
    nodes: Tuple[Tuple[Root, int], ...]
    edges: Tuple[Tuple[int, int, int], ...]  # (source index, target index, simple root 1-based)

    def weight_multiset(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for _, w in self.nodes:
            out[w] = out.get(w, 0) + 1
        return dict(sorted(out.items()))


def root_poset(rs: RootSystem, labels: DynkinLabels) -> WeightedPoset:
    _check_labels(rs, labels)
    nodes = tuple((r, root_weight(r, labels)) for r in rs.positive_roots)
    edges = []
    for k, r in enumerate(rs.positive_roots):
        for i in range(rs.rank):
            up = list(r)
            up[i] += 1
            up = tuple(up)
            if up in rs._index:
                edges.append((k, rs.index(up), i + 1))
    return WeightedPoset(nodes=nodes, edges=tuple(edges))


def dimension_of(t: AlgebraType) -> int:
    return root_system(t).dimension


def labels_from_mapping(rank: int, nonzero: Mapping[int, int]) -> DynkinLabels:
    """Labels with given 1-based ``{node: value}`` entries and zeros elsewhere."""
    vals = [0] * rank
    for node, v in nonzero.items():
        vals[node - 1] = v
    return DynkinLabels(tuple(vals))
