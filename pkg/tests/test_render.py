from artifact.render import dynkin_ascii, poset_ascii, poset_dot
from artifact.rootsys import AlgebraType, DynkinLabels


def T(name):
    return AlgebraType.parse(name)


def test_dot_a2():
    # [DERIVED] three positive roots, two covering edges
    assert poset_dot(T("A2"), DynkinLabels((2, 2))) == (
        'digraph "A2 2,2" {\n'
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        '  r0 [label="10 | 2"];\n'
        '  r1 [label="01 | 2"];\n'
        '  r2 [label="11 | 4"];\n'
        '  r0 -> r2 [label="2"];\n'
        '  r1 -> r2 [label="1"];\n'
        "}\n"
    )


def test_dot_is_deterministic():
    a = poset_dot(T("F4"), DynkinLabels((0, 0, 2, 2)))
    assert a == poset_dot(T("F4"), DynkinLabels((0, 0, 2, 2)))
    assert a.count(" -> ") == len([ln for ln in a.splitlines() if "->" in ln])
    assert a.count("[label=") - a.count(" -> ") == 24  # [PAPER] 24 nodes


def test_poset_ascii():
    assert poset_ascii(T("A2"), DynkinLabels((2, 2))) == "  2 | 11:4\n  1 | 10:2 01:2\n"


def test_dynkin_chains():
    assert dynkin_ascii(T("A1"), DynkinLabels((2,))) == "2\n"
    assert dynkin_ascii(T("B4"), DynkinLabels((2, 2, 0, 0))) == "2---2---0==>0\n"
    assert dynkin_ascii(T("F4"), DynkinLabels((0, 0, 2, 2))) == "0---0<==2---2\n"
    assert dynkin_ascii(T("G2"), DynkinLabels((2, 2))) == "2<332\n"


def test_dynkin_branches():
    assert dynkin_ascii(T("D5"), DynkinLabels((2, 0, 0, 2, 2))) == "2---0---0---2\n        |\n        2\n"
    e7 = dynkin_ascii(T("E7"), DynkinLabels((0,) * 6 + (2,)))
    assert e7 == "0---0---0---0---0---2\n        |\n        0\n"
