from fractions import Fraction

import pytest

from artifact.classify import (
    ClassifyError,
    MagicalCaseId,
    canonical_real_form,
    case_for_diagram,
    complex_orbit_is_magical_by_criterion,
    default_cap,
    enumerate_magical,
    magical_catalog,
    magical_criterion,
    theorem_list,
    weighted_dynkin_from_partition,
)
from artifact.partitions import Partition, RealFormId, SignedYoungDiagram
from artifact.rootsys import AlgebraType, DynkinLabels


def rf(text):
    return RealFormId.parse(text)


def diagrams(text):
    return sorted(str(d) for d in enumerate_magical(rf(text)))


def test_criterion_sl3_principal():
    rep = magical_criterion(rf("sl:3"), SignedYoungDiagram.parse("3"))
    assert rep.criterion_value == 0 and rep.compact_centralizer and rep.magical  # [PAPER]


def test_criterion_su_star_4():
    rep = magical_criterion(rf("su*:2"), SignedYoungDiagram.parse("2"))
    assert rep.criterion_value == -6 and not rep.magical  # [PAPER] 6 - 6m with m = 2


def test_criterion_so_star():
    # [PAPER] 2 * value = 4 r_2 - 2m = 0 for so*(8) with r_2 = 2
    rep = magical_criterion(rf("so*:4"), SignedYoungDiagram.parse("2+^2"))
    assert 2 * rep.criterion_value == 0 and rep.magical


def test_enumerate_su22():
    assert diagrams("su:2,2") == ["2+^2", "2-^2"]  # [PAPER]


def test_enumerate_so23():
    assert diagrams("so:2,3") == ["3+,1-^2", "5-"]  # [DERIVED]


def test_enumerate_sp22_empty():
    assert diagrams("sp:2,2") == []  # [PAPER]


@pytest.mark.parametrize("text", ["sl:5", "su:3,3", "so:3,4", "so*:4", "spR:3", "su*:3", "so:1,5"])
def test_enumeration_matches_closed_form(text):
    # [DERIVED] brute force agrees with the closed-form list
    assert diagrams(text) == sorted(str(d) for d in theorem_list(rf(text)))


@pytest.mark.parametrize("kind, part, labels", [
    ("A4", "5", (2, 2, 2, 2)),  # [PAPER] principal orbit
    ("B2", "3,1,1", (2, 0)),  # [PAPER]
    ("B4", "5,1^4", (2, 2, 0, 0)),  # [PAPER]
    ("C3", "2^3", (0, 0, 2)),  # [DERIVED] Hermitian diagram of C_3
])
def test_weighted_dynkin(kind, part, labels):
    got = weighted_dynkin_from_partition(AlgebraType.parse(kind), Partition.parse(part))
    assert got == DynkinLabels(labels)


def test_catalog_rows():
    cat = {e.case_id.spec(): e for e in magical_catalog()}
    assert cat["quat-F4"].labels == DynkinLabels((0, 0, 2, 2))  # [PAPER]
    assert cat["quat-F4"].canonical_real_form.spec() == "f4^4"  # [PAPER]
    assert cat["hermitian-E7"].labels == DynkinLabels((0,) * 6 + (2,))  # [DERIVED] long-arm end node
    assert cat["hermitian-E7"].canonical_real_form.spec() == "e7^-25"  # [PAPER]
    assert cat["split-G2"].labels == DynkinLabels((2, 2))  # [PAPER]
    assert canonical_real_form(MagicalCaseId.parse("split-G2")).spec() == "g2^2"  # [PAPER]


def test_catalog_labels_even():
    assert all(e.labels.is_even for e in magical_catalog())  # [TRIVIAL] magical orbits are even


@pytest.mark.parametrize("text", ["split-A:3", "hermitian-D*:4", "hermitian-D*:4:II", "case3-B:4,3", "quat-E8"])
def test_case_id_round_trip(text):
    assert MagicalCaseId.parse(text).spec() == text


@pytest.mark.parametrize("text", ["foo-A:3", "quat", "split-A", "split-Q:3"])
def test_case_id_errors(text):
    with pytest.raises(ClassifyError):
        MagicalCaseId.parse(text)


def test_case_for_diagram():
    got = {c.spec() for c in case_for_diagram(rf("so:2,3"), SignedYoungDiagram.parse("3+,1-,1-"))}
    assert got == {"hermitian-B:2", "case3-B:2,2"}  # [DERIVED] p = 2 coincides with Case 2


def test_complex_orbit_criterion():
    assert complex_orbit_is_magical_by_criterion("sl", 3, Partition.parse("3"))  # [PAPER]
    assert not complex_orbit_is_magical_by_criterion("sl", 3, Partition.parse("2,1"))  # [DERIVED]


def test_default_cap(monkeypatch):
    monkeypatch.setenv("MAGICAL_CAP", "7")
    assert default_cap() == 7
    monkeypatch.setenv("MAGICAL_CAP", "zero")
    with pytest.raises(ClassifyError):
        default_cap()


def test_cap_limits_enumeration():
    with pytest.raises(ClassifyError):
        enumerate_magical(rf("sl:9"), cap=4)
