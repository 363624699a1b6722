"""Matrix realisations of sl_n, so_n and sp_2m over Q.

``so_n`` and ``sp_2m`` preserve the antidiagonal form ``J`` (with signs
``+1`` on the first half and ``-1`` on the second half for ``sp``), so the
diagonal matrices in the algebra form the standard Cartan subalgebra.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..classify import weighted_dynkin_from_partition
from ..partitions import Partition, complex_size, validate_partition
from ..rootsys import AlgebraType, DynkinLabels
from .linalg import RowSpace, dense_inverse, matmul
from .model import LieModel, LieModelError, Vec

SparseMat = Dict[Tuple[int, int], object]


def form_matrix(kind: str, n: int) -> List[List[int]]:
    j = [[0] * n for _ in range(n)]
    for i in range(n):
        j[i][n - 1 - i] = 1 if kind == "so" or i < n // 2 else -1
    return j


def _smul(a: SparseMat, b: SparseMat) -> SparseMat:
    by_row: Dict[int, List[Tuple[int, object]]] = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: SparseMat = {}
    for (i, k), v in a.items():
        for j, w in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + v * w
    return {k: v for k, v in out.items() if v}


def _commutator(a: SparseMat, b: SparseMat) -> SparseMat:
    ab, ba = _smul(a, b), _smul(b, a)
    out = dict(ab)
    for k, v in ba.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def classical_algebra(kind: str, n: int) -> LieModel:
    """Matrix model of ``sl_n``, ``so_n`` or ``sp_n`` (``n`` = matrix size)."""
    if kind not in ("sl", "so", "sp") or n < 2 or (kind == "sp" and n % 2):
        raise LieModelError(f"bad classical algebra ({kind}, {n})")
    idx = lambda i, j: i * n + j
    rs = RowSpace(n * n)
    if kind == "sl":
        rs.add({idx(i, i): 1 for i in range(n)})
    else:
        jm = form_matrix(kind, n)
        for a in range(n):
            for b in range(n):
                # (X^T J + J X)[a][b] = X[b'][a] J[b'][b] + J[a][a'] X[a'][b]
                bp, ap = n - 1 - b, n - 1 - a
                row: Dict[int, int] = {}
                row[idx(bp, a)] = row.get(idx(bp, a), 0) + jm[bp][b]
                row[idx(ap, b)] = row.get(idx(ap, b), 0) + jm[a][ap]
                rs.add(row)
    null = rs.nullspace()
    # order: diagonal (Cartan) elements first, then by position
    def key(v):
        f = next(c for c in v if c not in rs.rows)
        i, j = divmod(f, n)
        return (i != j, i, j)

    null.sort(key=key)
    mats: List[SparseMat] = []
    free: List[Tuple[int, int]] = []
    labels: List[str] = []
    for v in null:
        f = next(c for c in sorted(v) if c not in rs.rows)
        free.append(divmod(f, n))
        m = {divmod(c, n): (int(x) if Fraction(x).denominator == 1 else x) for c, x in v.items()}
        mats.append(m)
        i, j = divmod(f, n)
        labels.append(f"H{i + 1}" if i == j else f"X{i + 1},{j + 1}")
    pos = {p: k for k, p in enumerate(free)}
    model = LieModel(
        name=f"{kind}_{n}",
        labels=labels,
        table=[{} for _ in mats],
        cartan=[k for k, (i, j) in enumerate(free) if i == j],
        kind="matrix",
        meta={"family": kind, "n": n, "matrices": mats, "free": free, "pos": pos},
    )
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            c = _commutator(mats[a], mats[b])
            if not c:
                continue
            coords = from_matrix(model, c)
            model.table[a][b] = coords
            model.table[b][a] = {k: -v for k, v in coords.items()}
    return model


def to_matrix(model: LieModel, x: Vec) -> SparseMat:
    out: SparseMat = {}
    for k, c in x.items():
        for p, v in model.meta["matrices"][k].items():
            out[p] = out.get(p, 0) + c * v
    return {k: v for k, v in out.items() if v}


def to_dense(model: LieModel, x: Vec) -> List[List[object]]:
    n = model.meta["n"]
    m = [[0] * n for _ in range(n)]
    for (i, j), v in to_matrix(model, x).items():
        m[i][j] = v
    return m


def from_matrix(model: LieModel, m) -> Vec:
    """Coordinates of a matrix (sparse dict or dense list) lying in the model."""
    if not isinstance(m, dict):
        m = {(i, j): v for i, row in enumerate(m) for j, v in enumerate(row) if v}
    pos = model.meta["pos"]
    coords = {pos[p]: v for p, v in m.items() if p in pos and v}
    back = to_matrix(model, coords)
    keys = set(back) | {k for k, v in m.items() if v}
    if any(back.get(k, 0) != m.get(k, 0) for k in keys):
        raise LieModelError("matrix does not lie in the model")
    return coords


# ---------------------------------------------------------------- Jordan data


def _block_triple(k: int):
    """(e, h, f) on a k-dimensional irreducible, basis ordered by decreasing weight."""
    e = {(j, j + 1): 1 for j in range(k - 1)}
    f = {(j + 1, j): (j + 1) * (k - j - 1) for j in range(k - 1)}
    h = {(j, j): k - 1 - 2 * j for j in range(k) if k - 1 - 2 * j}
    return e, h, f


def jordan_triple_matrices(kind: str, p: Partition, tag: Optional[str] = None):
    """Dense matrices (e, h, f) of a standard triple with Jordan type ``p`` in the
    matrix model's coordinates; ``h`` is diagonal with decreasing entries."""
    v = validate_partition(kind, p)
    if not v.valid:
        raise LieModelError(f"invalid partition {p} for {kind}: {v.reason}")
    n = p.size
    # block basis: list of (block id, position, weight)
    blocks: List[Tuple[int, int]] = []  # (start offset, size)
    off = 0
    bigE: SparseMat = {}
    bigH: SparseMat = {}
    bigF: SparseMat = {}
    for k in p.rows():
        e, h, f = _block_triple(k)
        for src, dst in ((e, bigE), (h, bigH), (f, bigF)):
            for (i, j), val in src.items():
                dst[(off + i, off + j)] = val
        blocks.append((off, k))
        off += k
    weights = [0] * n
    for (i, _), val in bigH.items():
        weights[i] = val
    gram = [[Fraction(0)] * n for _ in range(n)]
    if kind != "sl":
        sym = 1 if kind == "so" else -1
        singles_parity = 1 if kind == "so" else 0  # k odd (so) / k even (sp) are self-dual
        pending: Dict[int, List[int]] = {}
        odd_count = 0
        for bi, (o, k) in enumerate(blocks):
            if k % 2 == singles_parity:
                eps = 1
                if kind == "so":
                    target = 1 if odd_count % 2 == 0 else -1
                    odd_count += 1
                    eps = target * (-1) ** ((k - 1) // 2)
                for i in range(k):
                    gram[o + i][o + k - 1 - i] = Fraction(eps * (-1) ** i)
            else:
                pending.setdefault(k, []).append(bi)
        for k, ids in pending.items():
            if len(ids) % 2:
                raise LieModelError("unpaired block")
            for a, b in zip(ids[0::2], ids[1::2]):
                oa, ob = blocks[a][0], blocks[b][0]
                for i in range(k):
                    val = Fraction((-1) ** i)
                    gram[oa + i][ob + k - 1 - i] = val
                    gram[ob + k - 1 - i][oa + i] = sym * val
    order = _adapted_order(kind, n, weights, gram)
    q = [[Fraction(0)] * n for _ in range(n)]
    for col, vec in enumerate(order):
        for r, val in vec.items():
            q[r][col] = Fraction(val)
    qi = dense_inverse(q)
    dense = lambda s: [[s.get((i, j), 0) for j in range(n)] for i in range(n)]
    conj = lambda s: matmul(matmul(qi, dense(s)), q)
    e, h, f = conj(bigE), conj(bigH), conj(bigF)
    if kind != "sl":
        qt = [list(r) for r in zip(*q)]
        if matmul(matmul(qt, gram), q) != form_matrix(kind, n):
            raise LieModelError("adapted basis does not reproduce the standard form")
    if kind == "so" and n % 2 == 0 and n >= 6 and v.very_even:
        want = weighted_dynkin_from_partition(AlgebraType("D", n // 2), p, tag or "I")
        if _d_labels(h) != want.labels:
            sw = _middle_swap(n)
            e, h, f = (matmul(matmul(sw, x), sw) for x in (e, h, f))
    return e, h, f


def _d_labels(h) -> Tuple[int, ...]:
    n = len(h)
    m = n // 2
    d = [h[i][i] for i in range(m)]
    labels = [d[i] - d[i + 1] for i in range(m - 1)] + [d[m - 2] + d[m - 1]]
    return tuple(labels)


def _middle_swap(n: int):
    m = n // 2
    s = [[int(i == j) for j in range(n)] for i in range(n)]
    s[m - 1][m - 1] = s[m][m] = 0
    s[m - 1][m] = s[m][m - 1] = 1
    return s


def _adapted_order(kind: str, n: int, weights: Sequence[int], gram) -> List[Dict[int, Fraction]]:
    by_w: Dict[int, List[int]] = {}
    for i, w in enumerate(weights):
        by_w.setdefault(w, []).append(i)
    if kind == "sl":
        return [{i: 1} for w in sorted(by_w, reverse=True) for i in by_w[w]]
    pos_ws = sorted((w for w in by_w if w > 0), reverse=True)
    front: List[Dict[int, Fraction]] = []
    back: List[Dict[int, Fraction]] = []
    for w in pos_ws:
        xs, zs = by_w[w], by_w[-w]
        g = [[gram[x][z] for z in zs] for x in xs]
        gi = dense_inverse(g)
        ys = [{zs[l]: gi[l][j] for l in range(len(zs)) if gi[l][j]} for j in range(len(xs))]
        front += [{x: Fraction(1)} for x in xs]
        back = list(reversed(ys)) + back
    zero = by_w.get(0, [])
    mid: List[Dict[int, Fraction]] = []
    if zero:
        if kind == "so":
            plus = [z for z in zero if gram[z][z] > 0]
            minus = [z for z in zero if gram[z][z] < 0]
            if len(plus) - len(minus) not in (0, 1):
                raise LieModelError("zero-weight form is not split")
            xs = [{a: Fraction(1), b: Fraction(1)} for a, b in zip(plus, minus)]
            ys = [{a: Fraction(1, 2), b: Fraction(-1, 2)} for a, b in zip(plus, minus)]
            centre = [{plus[-1]: Fraction(1)}] if len(plus) > len(minus) else []
            mid = xs + centre + list(reversed(ys))
        else:
            used = set()
            xs, ys = [], []
            for a in zero:
                if a in used:
                    continue
                b = next(b for b in zero if b not in used and b != a and gram[a][b])
                used |= {a, b}
                xs.append({a: Fraction(1)})
                ys.append({b: 1 / gram[a][b]})
            mid = xs + list(reversed(ys))
    return front + mid + back


def nilpotent_from_partition(model: LieModel, p: Partition, tag: Optional[str] = None) -> Vec:
    if model.kind != "matrix":
        raise LieModelError("partitions describe orbits in matrix models")
    kind, n = model.meta["family"], model.meta["n"]
    if p.size != n:
        raise LieModelError(f"partition of {p.size} does not fit {model.name}")
    e, _, _ = jordan_triple_matrices(kind, p, tag)
    return from_matrix(model, e)


def jordan_type(model: LieModel, x: Vec) -> Partition:
    """Jordan type of a nilpotent matrix element, from ranks of its powers."""
    from .linalg import rank as _rank

    n = model.meta["n"]
    m = to_dense(model, x)
    ranks = [n]
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    while ranks[-1]:
        power = matmul(power, m)
        rows = [{j: v for j, v in enumerate(r) if v} for r in power]
        ranks.append(_rank(rows, n))
        if len(ranks) > n + 1:
            raise LieModelError("element is not nilpotent")
    # number of blocks of size >= k is rank(x^{k-1}) - rank(x^k)
    ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    mult = {k: ge[k - 1] - (ge[k] if k < len(ge) else 0) for k in range(1, len(ge) + 1)}
    return Partition.from_mult(mult)
