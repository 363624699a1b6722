"""The ten acceptance criteria, one test each.

Each test prints a single ``[PASS]``/``[FAIL]`` line with a short summary.
Run ``python tests/test_acceptance.py`` for the lines alone.
"""

from __future__ import annotations

import itertools
import sys
import time
from fractions import Fraction

import pytest

from artifact.cayley import component_count, dimension_consistency
from artifact.classify import (
    complex_orbit_is_magical_by_criterion,
    enumerate_magical,
    magical_catalog,
    magical_criterion,
    theorem_list,
)
from artifact.matlie.chevalley import chevalley_algebra
from artifact.matlie.matrix_models import classical_algebra
from artifact.matlie.oracle import (
    cayley,
    cayley_inverse,
    centralizer_of_centralizer,
    is_cayley_triple,
    is_magical_oracle,
    sigma_e,
)
from artifact.matlie.structure import verify_structure
from artifact.matlie.triples import triple_from_diagram, triple_from_partition
from artifact.partitions import (
    Partition,
    RealFormId,
    SignedYoungDiagram,
    classical_real_forms,
    partitions_of,
    validate_partition,
    validate_real_orbit,
)
from artifact.rootsys import (
    AlgebraType,
    DynkinLabels,
    graded_dimensions,
    root_poset,
    root_system,
    sl2_multiplicities,
)
from artifact.sl2data import check_record, magical_record

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


def _matrix_orbits(max_size: int):
    """(kind, size, partition, tag) for every nonzero complex orbit."""
    for kind in ("sl", "so", "sp"):
        for n in range(2, max_size + 1):
            if (kind == "sp" and n % 2) or (kind == "so" and n < 3):
                continue
            for p in partitions_of(n):
                v = validate_partition(kind, p)
                if p.is_zero_orbit or not v.valid:
                    continue
                for tag in ("I", "II") if v.very_even else (None,):
                    yield kind, n, p, tag


# ---------------------------------------------------------------- criteria


def criterion_1():
    forms = mismatched = 0
    for size in range(2, 19):
        for rf in classical_real_forms(size):
            forms += 1
            got = sorted(map(str, enumerate_magical(rf, cap=18)))
            want = sorted(map(str, theorem_list(rf)))
            mismatched += got != want
    return mismatched == 0, f"{forms} real forms of size <= 18, {mismatched} mismatches"


def _signed_single_rows(rf: RealFormId, k: int, r: int):
    for p in range(r + 1):
        d = SignedYoungDiagram.from_counts({k: (p, r - p)})
        for cand in (d, SignedYoungDiagram(d.rows, "I")):
            if validate_real_orbit(rf, cand).valid:
                yield cand
                break


def criterion_2():
    bad = []
    checked = 0
    # su*(2m): the orbit with r_m = 1  [PAPER] 6 - 6m
    for m in range(2, 9):
        rf = RealFormId("su*", (m,))
        value = magical_criterion(rf, SignedYoungDiagram.parse(str(m))).criterion_value
        checked += 1
        if value != 6 - 6 * m:
            bad.append(f"su*({2 * m})")
    # so*(2m), only r_2 nonzero  [PAPER] 2 * value = 4 r_2 - 2m
    for m in range(2, 9, 2):
        rf = RealFormId("so*", (m,))
        r2 = m // 2
        for d in _signed_single_rows(rf, 2, r2):
            checked += 1
            if 2 * magical_criterion(rf, d).criterion_value != 4 * r2 - 2 * m:
                bad.append(f"so*({2 * m}) {d}")
    # sp(2m,R), one row length k with c^R compact (k even)  [PAPER] (2-k) r^2 - 2r + 2m
    for m in range(1, 9):
        rf = RealFormId("spR", (m,))
        for k in range(2, 2 * m + 1, 2):
            if (2 * m) % k:
                continue
            r = 2 * m // k
            for d in _signed_single_rows(rf, k, r):
                checked += 1
                if 2 * magical_criterion(rf, d).criterion_value != (2 - k) * r * r - 2 * r + 2 * m:
                    bad.append(f"sp({2 * m},R) {d}")
    return not bad, f"{checked} orbits checked" + (f"; mismatches {bad}" if bad else "")


def criterion_3():
    total = disagree = 0
    for kind, n, p, tag in _matrix_orbits(6):
        model = classical_algebra(kind, n)
        verdict = is_magical_oracle(triple_from_partition(model, p, tag)).magical
        total += 1
        disagree += verdict != complex_orbit_is_magical_by_criterion(kind, n, p)
    return disagree == 0, f"{total} complex orbits in sl_n, so_N, sp_2m (size <= 6), {disagree} disagreements"


# [PAPER] published centralizer dimensions of the exceptional catalog rows
EXCEPTIONAL_DIM_C = {
    "split-G2": 0, "split-F4": 0, "quat-F4": 3, "quat-E6": 8, "quat-E7": 21, "quat-E8": 52,
    "split-E6": 0, "split-E7": 0, "split-E8": 0, "hermitian-E7": 52,
}
# [DERIVED] even diagrams outside the catalog, confirmed realizable and non-magical by the oracle
NON_CATALOG = {
    "G2": (0, 2), "F4": (2, 0, 2, 2), "E6": (2, 2, 0, 2, 2, 2),
    "E7": (2, 2, 0, 2, 2, 2, 2), "E8": (2, 2, 0, 2, 2, 2, 2, 2),
}


def criterion_4():
    notes = []
    ok = True
    for name in EXCEPTIONAL:
        model = chevalley_algebra(AlgebraType.parse(name))
        samples = None if name in ("G2", "F4") else 100_000
        count, failure = model.jacobi_sweep(samples=samples, seed=1)
        ok &= failure is None and count >= (model.dim ** 3 if samples is None else samples)
        notes.append(f"{name} Jacobi {count}")
    for entry in magical_catalog():
        if not entry.case_id.type.is_exceptional:
            continue
        model = chevalley_algebra(entry.case_id.type)
        triple = triple_from_diagram(model, entry.labels)
        res = is_magical_oracle(triple)
        dim_c = centralizer_of_centralizer(triple, magical=True).dim_c if res.magical else None
        ok &= res.magical and dim_c == EXCEPTIONAL_DIM_C[entry.case_id.spec()]
    for name, labels in NON_CATALOG.items():
        model = chevalley_algebra(AlgebraType.parse(name))
        res = is_magical_oracle(triple_from_diagram(model, labels))
        ok &= not res.magical and res.witness is not None
    notes.append("catalog triples magical with the published dim c; one non-catalog diagram per type refuted")
    return ok, "; ".join(notes)


def criterion_5():
    rows = bad = 0
    for entry in magical_catalog():
        rec = magical_record(entry.case_id)
        got = sl2_multiplicities(graded_dimensions(root_system(entry.case_id.type), entry.labels))
        rows += 1
        bad += got != rec.sl2_data
    e8 = sl2_multiplicities(graded_dimensions(root_system(AlgebraType.parse("E8")), magical_record("quat-E8").diagram))
    e8_ok = (e8.n0, dict(e8.pairs)) == (52, {Fraction(1): 1, Fraction(3): 26, Fraction(5): 1})  # [PAPER]
    return bad == 0 and e8_ok, f"{rows} catalog diagrams (Case 3 up to N = 17), {bad} mismatches; E8 (52,1,26,1) {e8_ok}"


def criterion_6():
    rows = bad = 0
    for entry in magical_catalog():
        rec = magical_record(entry.case_id)
        rep = check_record(rec)
        rows += 1
        bad += not (rep.ok and dimension_consistency(rec).ok)
    return bad == 0, f"{rows} records: dim identity, real ranks, dim g(e), Cayley dimensions; {bad} failures"


def criterion_7():
    f4 = root_poset(root_system(AlgebraType.parse("F4")), DynkinLabels((0, 0, 2, 2)))
    f4_ok = f4.weight_multiset() == {0: 3, 2: 7, 4: 6, 6: 6, 8: 1, 10: 1}  # [PAPER]
    e8 = graded_dimensions(root_system(AlgebraType.parse("E8")), magical_record("quat-E8").diagram)
    e8_ok = e8[0] == 80 and e8[10] == 1  # [PAPER]
    return f4_ok and e8_ok, f"F4 weights {f4.weight_multiset()}; E8 dim g_0 = {e8[0]}, dim g_10 = {e8[10]}"


def criterion_8():
    notes = []
    ok = True
    for name in ("F4", "E6", "E7", "E8"):
        t0 = time.perf_counter()
        model = chevalley_algebra(AlgebraType.parse(name))
        rep = verify_structure(triple_from_diagram(model, magical_record(f"quat-{name}").diagram))
        ok &= rep.ok and len(rep.checks) == 7
        notes.append(f"{name} {'ok' if rep.ok else rep.failures()} ({time.perf_counter() - t0:.1f}s)")
    return ok, "; ".join(notes)


def criterion_9():
    got = tuple(
        component_count(f"quat-{fam}", form)
        for fam, form in (("F4", "adjoint"), ("E6", "simply_connected"), ("E6", "adjoint"),
                          ("E7", "simply_connected"), ("E7", "adjoint"))
    )
    return got == (3, 1, 3, 1, 2), f"(F4, E6sc, E6adj, E7sc, E7adj) = {got}"  # [PAPER]


def criterion_10():
    total = bad = 0
    for kind, n, p, tag in _matrix_orbits(6):
        triple = triple_from_partition(classical_algebra(kind, n), p, tag)
        sig = sigma_e(triple)
        if not is_magical_oracle(triple, sig).magical:
            continue
        total += 1
        hat = cayley_inverse(triple)
        back = cayley(hat)
        same = (back.e, back.h, back.f) == (triple.e, triple.h, triple.f)
        bad += not (same and is_cayley_triple(hat, sig))
    return bad == 0 and total > 0, f"{total} magical matrix triples: round trip and sigma(e^) = -f^, sigma(h^) = -h^; {bad} failures"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(k: int, ok: bool, detail: str, seconds: float) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {detail} ({seconds:.1f}s)"


def _run(k: int):
    t0 = time.perf_counter()
    ok, detail = CRITERIA[k - 1]()
    return ok, _line(k, ok, detail, time.perf_counter() - t0)


@pytest.mark.parametrize("k", range(1, 11))
def test_criterion(k, capsys):
    ok, line = _run(k)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(k) for k in range(1, 11)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
