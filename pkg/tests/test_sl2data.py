from fractions import Fraction

import pytest

from artifact.classify import magical_catalog
from artifact.partitions import RealFormId
from artifact.sl2data import Sl2DataError, check_record, magical_record, real_rank, theta_structure

F = Fraction


def pairs(rec):
    return dict(rec.sl2_data.pairs)


def test_quaternionic_f4():
    r = magical_record("quat-F4")
    assert r.sl2_data.n0 == 3 and pairs(r) == {F(1): 1, F(3): 5, F(5): 1}  # [PAPER]
    assert r.c_type.label() == "so_3C" and r.ge_type.label() == "g2" and r.ge_exponents == (1, 5)  # [PAPER]
    assert r.m_c == 3 and r.cayley_real_form.label() == "R^2 + sl_3R"  # [PAPER]


def test_hermitian_a5():
    r = magical_record("hermitian-A:5")
    assert r.sl2_data.n0 == 8 and pairs(r) == {F(1): 9}  # [PAPER] n^2 - 1 and n^2 with n = 3
    assert r.c_type.label() == "sl_3C" and r.cayley_real_form.label() == "R + sl_3C"  # [PAPER]


def test_case3_b4_p3():
    r = magical_record("case3-B:4,3")
    assert r.sl2_data.n0 == 6  # [PAPER] (N - 2p)(N - 2p + 1)/2 with N = 9
    assert pairs(r)[F(2)] == 4  # [PAPER] N - 2p + 1 at weight 2(p - 1)
    assert r.canonical_real_form.spec() == "so:3,6"


def test_case1_records_have_trivial_c():
    for e in magical_catalog():
        if e.case_id.case == 1:
            r = magical_record(e.case_id)
            assert r.c_type.dimension == 0 and r.m_c == 0  # [TRIVIAL]


def test_real_ranks():
    assert real_rank("sl:5") == 4  # [TRIVIAL]
    assert real_rank("su*:3") == 2  # [DERIVED] standard tables
    assert real_rank(magical_record("quat-F4").cayley_real_form) == 4  # [TRIVIAL] 2 + 2
    e8 = magical_record("quat-E8")
    assert real_rank(e8.canonical_real_form) == real_rank(e8.cayley_real_form) == 4  # [PAPER]


def test_real_rank_errors():
    with pytest.raises(Sl2DataError):
        real_rank("e9^1")
    with pytest.raises(Sl2DataError):
        real_rank(magical_record("quat-F4").c_type)


def test_theta():
    assert theta_structure(magical_record("split-E7")).kind == "Borel"  # [PAPER]
    t3 = theta_structure(magical_record("case3-B:4,3"))
    assert magical_record("case3-B:4,3").canonical_real_form == RealFormId.parse("so:3,6")
    assert t3.flag == (1, 2, 7, 8, 9)  # [PAPER] flag pattern for so(3,6)
    t4 = theta_structure(magical_record("quat-E6"))
    assert t4.restricted == "F4" and t4.theta == (1, 2)  # [PAPER]


def test_center_of_c_is_line():
    # [DERIVED] p even in Case 3 leaves a one-dimensional c
    assert magical_record("case3-B:4,4").center_of_c_is_line
    assert not magical_record("case3-B:4,3").center_of_c_is_line


def test_all_records_check():
    bad = [str(e.case_id) for e in magical_catalog() if not check_record(magical_record(e.case_id)).ok]
    assert bad == []  # [DERIVED]


def test_unknown_case():
    with pytest.raises(ValueError):
        magical_record("quat-G2")
