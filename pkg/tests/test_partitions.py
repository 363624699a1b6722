import pytest

from artifact.partitions import (
    Partition,
    PartitionError,
    RealFormId,
    SignedYoungDiagram,
    classical_real_forms,
    complex_centralizer,
    dual_partition,
    partitions_of,
    real_triple_centralizer,
    validate_complex_orbit,
    validate_real_orbit,
)
from artifact.rootsys import AlgebraType


def T(name):
    return AlgebraType.parse(name)


def test_parse_forms():
    assert Partition.parse("2^3,1") == Partition.from_rows([2, 2, 2, 1])
    assert Partition.parse("3,1,1").r == {3: 1, 1: 2}
    assert Partition.parse("3,1,1").size == 5


def test_dual_principal():
    # [TRIVIAL] one row of length n dualises to n rows of length 1
    assert dual_partition(Partition.parse("4")) == Partition.parse("1^4")


def test_dual_mixed():
    # [DERIVED] s_j = sum_{i >= j} r_i for r_2 = r_3 = 1
    assert Partition.parse("3,2").dual_sequence() == (2, 2, 1)
    assert dual_partition(Partition.parse("3,2")) == Partition.parse("2,2,1")


@pytest.mark.parametrize("n, count", [(1, 1), (4, 5), (6, 11), (10, 42)])
def test_partition_counts(n, count):
    assert len(partitions_of(n)) == count  # [TRIVIAL] p(n)


def test_complex_validity():
    assert validate_complex_orbit(T("B2"), Partition.parse("3,1,1")).valid  # [PAPER]
    assert not validate_complex_orbit(T("C2"), Partition.parse("3,1")).valid  # [PAPER]
    v = validate_complex_orbit(T("D4"), Partition.parse("4,4"))
    assert v.valid and v.very_even  # [PAPER]


def test_real_validity():
    so23 = RealFormId.parse("so:2,3")
    assert validate_real_orbit(so23, SignedYoungDiagram.parse("3+,1-,1-")).valid  # [DERIVED]
    assert validate_real_orbit(RealFormId.parse("spR:2"), SignedYoungDiagram.parse("2+^2")).valid  # [PAPER]
    bad = validate_real_orbit(RealFormId.parse("so:3,3"), SignedYoungDiagram.parse("4+,1+,1-"))
    assert not bad.valid and "odd multiplicity" in bad.reason  # [PAPER]


def test_signature_mismatch_rejected():
    # [TRIVIAL] 3+ has signature (2,1), not (1,2): a malformed request, not a non-orbit
    with pytest.raises(PartitionError, match="signature"):
        validate_real_orbit(RealFormId.parse("su:1,2"), SignedYoungDiagram.parse("3+"))


def test_complex_centralizers():
    dim_v, c = complex_centralizer(T("A2"), Partition.parse("3"))
    assert dim_v == 2 and c.dimension == 0  # [PAPER]
    _, c = complex_centralizer(T("B4"), Partition.parse("5,1^4"))
    assert c.dimension == 6 and c.label() == "so_4C"  # [PAPER]
    _, c = complex_centralizer(T("C2"), Partition.parse("2,2"))
    assert c.torus_rank == 1 and c.dimension == 1  # [PAPER]


def test_real_centralizers():
    su22 = real_triple_centralizer(RealFormId.parse("su:2,2"), SignedYoungDiagram.parse("2+^2"))
    assert su22.is_compact and su22.dimension == 3  # [PAPER] s(u_2 + u_0)
    sl4 = real_triple_centralizer(RealFormId.parse("sl:4"), SignedYoungDiagram.parse("4 I"))
    assert sl4.dimension == 0 and sl4.is_compact  # [PAPER]
    so23 = real_triple_centralizer(RealFormId.parse("so:2,3"), SignedYoungDiagram.parse("3+,1-,1-"))
    assert so23.is_compact and so23.dimension == 1  # [DERIVED] so(0,2)


def test_real_centralizer_rejects_invalid():
    with pytest.raises(PartitionError):
        real_triple_centralizer(RealFormId.parse("sl:4"), SignedYoungDiagram.parse("4"))


def test_flip_and_signature():
    d = SignedYoungDiagram.parse("3+,1-,1-")
    assert d.signature() == (2, 3)
    assert d.flipped() == SignedYoungDiagram.parse("3-,1+,1+")


@pytest.mark.parametrize("text", ["so", "so:x", "su:0,0", "sl:0", "xx:3"])
def test_real_form_parse_errors(text):
    with pytest.raises(PartitionError):
        RealFormId.parse(text)


def test_real_form_labels():
    assert RealFormId.parse("su*:3").label() == "su*_6"
    assert RealFormId.parse("e7^-5").spec() == "e7^-5"


def test_classical_real_forms_size_4():
    # [TRIVIAL] noncompact forms whose natural representation has size 4
    got = {r.spec() for r in classical_real_forms(4)}
    assert {"sl:4", "su:2,2", "su*:2", "so:2,2", "so*:2", "spR:2", "sp:1,1"} <= got
    assert "su:4,0" not in got
