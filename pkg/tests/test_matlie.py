from fractions import Fraction

import pytest

from artifact.matlie.chevalley import chevalley_algebra
from artifact.matlie.linalg import dense_inverse, matmul, nullspace, rank, solve
from artifact.matlie.matrix_models import (
    classical_algebra,
    form_matrix,
    jordan_type,
    nilpotent_from_partition,
    to_dense,
    to_matrix,
)
from artifact.matlie.oracle import (
    cayley,
    cayley_inverse,
    centralizer_of_centralizer,
    decompose,
    is_cayley_triple,
    is_magical_oracle,
    sigma_e,
)
from artifact.matlie.scalars import QI, I
from artifact.matlie.structure import verify_structure
from artifact.matlie.triples import jm_complete, triple_from_diagram, triple_from_partition
from artifact.partitions import Partition
from artifact.rootsys import AlgebraType, DynkinLabels

F = Fraction


def P(text):
    return Partition.parse(text)


def chev(name):
    return chevalley_algebra(AlgebraType.parse(name))


def dense_rank(m):
    return rank([{j: v for j, v in enumerate(row) if v} for row in m], len(m[0]))


# ---------------------------------------------------------------- scalars, linalg


def test_gaussian_rationals():
    assert I * I == -1  # [TRIVIAL]
    z = QI(F(1, 2), 3)
    assert z * z.conjugate() == F(37, 4)
    assert (z / z) == 1
    assert str(QI(1, -2)) == "1-2i" and str(QI(0, 1)) == "1i" and str(QI(3)) == "3"
    assert hash(QI(5)) == hash(F(5))


def test_nullspace_and_solve():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}]
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    v = ns[0]
    assert v[0] - v.get(1, 0) == 2 * v[0] and v.get(2) == v[0]  # [TRIVIAL] span of (1,-1,1)
    x = solve([{0: 1, 1: 0}, {0: 1, 1: 1}], {0: 3, 1: 1})
    assert x == [2, 1]
    assert solve([{0: 1}, {0: 2}], {1: 1}) is None


def test_dense_inverse():
    m = [[2, 1], [1, 1]]
    assert matmul(m, dense_inverse(m)) == [[1, 0], [0, 1]]
    with pytest.raises(ZeroDivisionError):
        dense_inverse([[1, 2], [2, 4]])


# ---------------------------------------------------------------- models


@pytest.mark.parametrize("kind, n, dim", [("sl", 2, 3), ("so", 5, 10), ("sp", 4, 10), ("sl", 4, 15), ("so", 8, 28)])
def test_classical_dims(kind, n, dim):
    assert classical_algebra(kind, n).dim == dim  # [TRIVIAL]


@pytest.mark.parametrize("name, dim", [("G2", 14), ("F4", 52), ("E8", 248), ("B3", 21), ("D4", 28)])
def test_chevalley_dims(name, dim):
    assert chev(name).dim == dim  # [TRIVIAL]


def test_jacobi_exhaustive_small():
    # [DERIVED] exhaustive sweeps
    for name in ("G2", "B3", "C3", "A3"):
        m = chev(name)
        count, failure = m.jacobi_sweep()
        assert failure is None and count == m.dim ** 3
    assert chev("G2").check_antisymmetry() is None
    assert classical_algebra("sp", 6).jacobi_sweep()[1] is None


def test_nilpotent_sl3():
    m = classical_algebra("sl", 3)
    e = to_dense(m, nilpotent_from_partition(m, P("3")))
    e2 = matmul(e, e)
    assert dense_rank(e) == 2 and dense_rank(e2) == 1 and not any(map(any, matmul(e2, e)))  # [TRIVIAL]


def test_nilpotent_so5_preserves_form():
    # [DERIVED] e^T J + J e = 0
    m = classical_algebra("so", 5)
    e = to_dense(m, nilpotent_from_partition(m, P("3,1,1")))
    j = form_matrix("so", 5)
    et = [list(r) for r in zip(*e)]
    a, b = matmul(et, j), matmul(j, e)
    assert all(x + y == 0 for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def test_nilpotent_sp4():
    m = classical_algebra("sp", 4)
    e = to_dense(m, nilpotent_from_partition(m, P("2,2")))
    assert dense_rank(e) == 2 and not any(map(any, matmul(e, e)))  # [TRIVIAL]


@pytest.mark.parametrize("kind, n, part", [("sl", 5, "3,2"), ("so", 7, "3,3,1"), ("sp", 6, "4,2"), ("so", 8, "3,2,2,1")])
def test_jordan_type_round_trip(kind, n, part):
    m = classical_algebra(kind, n)
    assert jordan_type(m, nilpotent_from_partition(m, P(part))) == P(part)


def test_jm_sl2():
    m = classical_algebra("sl", 2)
    t = jm_complete(m, nilpotent_from_partition(m, P("2")))
    assert to_dense(m, t.h) == [[1, 0], [0, -1]] and to_dense(m, t.f) == [[0, 0], [1, 0]]  # [TRIVIAL]


def test_jm_sl3():
    m = classical_algebra("sl", 3)
    t = jm_complete(m, nilpotent_from_partition(m, P("3")))
    assert to_dense(m, t.h) == [[2, 0, 0], [0, 0, 0], [0, 0, -2]]  # [PAPER] mu_j = j(k - j)
    f = to_dense(m, t.f)
    assert (f[1][0], f[2][1]) == (2, 2)


def test_jm_so5():
    m = classical_algebra("so", 5)
    t = jm_complete(m, nilpotent_from_partition(m, P("3,1,1")))
    h = to_dense(m, t.h)
    assert sorted(h[i][i] for i in range(5)) == [-2, 0, 0, 0, 2]  # [DERIVED]
    assert t.is_valid


# ---------------------------------------------------------------- triples and the oracle


def test_triple_from_diagram_centralizers():
    f4 = triple_from_diagram(chev("F4"), DynkinLabels((0, 0, 2, 2)))
    assert centralizer_of_centralizer(f4).dim_c == 3  # [PAPER]
    g2 = triple_from_diagram(chev("G2"), DynkinLabels((2, 2)))
    assert centralizer_of_centralizer(g2).dim_c == 0  # [PAPER]


def test_sigma_sl2():
    m = classical_algebra("sl", 2)
    t = triple_from_partition(m, P("2"))
    s = sigma_e(t)
    assert s.apply(t.e) == {k: -v for k, v in t.e.items()}  # [TRIVIAL]
    assert s.apply(t.f) == {k: -v for k, v in t.f.items()}
    assert s.apply(t.h) == t.h and s.fixed_dimension() == 1 and s.squares_to_identity()


def test_sigma_f4_fixed_dimension():
    s = sigma_e(triple_from_diagram(chev("F4"), DynkinLabels((0, 0, 2, 2))))
    assert s.fixed_dimension() == 24  # [DERIVED] dim of the maximal compact of f4^4 is 24
    assert s.squares_to_identity()


def test_oracle_sl3():
    m = classical_algebra("sl", 3)
    assert is_magical_oracle(triple_from_partition(m, P("3"))).magical  # [PAPER]
    res = is_magical_oracle(triple_from_partition(m, P("2,1")))
    assert not res.magical and res.witness is not None and not res.even  # [DERIVED]


def test_oracle_f4_non_catalog():
    # [DERIVED] (2,0,0,0) is the highest-root diagram; not magical
    res = is_magical_oracle(triple_from_diagram(chev("F4"), DynkinLabels((2, 0, 0, 0))))
    assert not res.magical


def test_centralizers():
    f4 = centralizer_of_centralizer(triple_from_diagram(chev("F4"), DynkinLabels((0, 0, 2, 2))))
    assert f4.dim_ge == 14 and f4.dim_center == 0  # [PAPER] g(e) = G2, z(c) = 0
    so9 = centralizer_of_centralizer(triple_from_partition(classical_algebra("so", 9), P("5,1^4")))
    assert so9.dim_ge == 10  # [PAPER] so_5
    sp4 = centralizer_of_centralizer(triple_from_partition(classical_algebra("sp", 4), P("2,2")))
    assert sp4.dim_ge == 3  # [PAPER] span{f, h, e}


def test_cayley_sl2_formula():
    # [DERIVED] with [e,f] = h the inverse transform is e^ = (f + e - ih)/2
    m = classical_algebra("sl", 2)
    t = triple_from_partition(m, P("2"))
    hat = cayley_inverse(t)
    want = {k: QI(F(1, 2)) * QI.coerce(t.f.get(k, 0) + t.e.get(k, 0)) - QI(0, F(1, 2)) * QI.coerce(t.h.get(k, 0))
            for k in range(3)}
    assert to_matrix(m, hat.e) == to_matrix(m, {k: v for k, v in want.items() if v})
    assert hat.is_valid


def test_cayley_round_trip_so5():
    m = classical_algebra("so", 5)
    t = triple_from_partition(m, P("3,1,1"))
    back = cayley(cayley_inverse(t))
    assert (back.e, back.h, back.f) == (t.e, t.h, t.f)  # [TRIVIAL]


def test_cayley_triple_property():
    t = triple_from_partition(classical_algebra("sp", 4), P("2,2"))
    s = sigma_e(t)
    assert is_magical_oracle(t, s).magical
    assert is_cayley_triple(cayley_inverse(t), s)  # [DERIVED]


def test_structure_f4_and_sp4():
    assert verify_structure(triple_from_diagram(chev("F4"), DynkinLabels((0, 0, 2, 2)))).ok  # [DERIVED]
    rep = verify_structure(triple_from_partition(classical_algebra("sp", 4), P("2,2")))
    assert rep.ok  # [TRIVIAL] a single m_j = 1


def test_structure_e6():
    t = triple_from_diagram(chev("E6"), DynkinLabels((0, 0, 2, 2, 0, 0)))
    assert decompose(t).multiplicities()[6] == 8  # [PAPER] n_6 = 8
    assert centralizer_of_centralizer(t).dim_ge == 14  # [PAPER]
