"""Verification suites run by ``artifact verify``.

Each suite yields :class:`Check` rows; a suite passes when every row does.
``tables`` compares stored data with independent computations, ``oracle``
compares the dimension criterion with the involution test in explicit
models, and ``identities`` runs the exact dimension identities.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List

from .cayley import component_count, dimension_consistency
from .classify import (
    case_for_diagram,
    complex_orbit_is_magical_by_criterion,
    enumerate_magical,
    magical_catalog,
    magical_criterion,
    theorem_list,
)
from .matlie.chevalley import chevalley_algebra
from .matlie.matrix_models import classical_algebra
from .matlie.oracle import centralizer_of_centralizer, is_magical_oracle
from .matlie.triples import triple_from_diagram, triple_from_partition
from .partitions import classical_real_forms, partitions_of, validate_partition
from .rootsys import graded_dimensions, root_system, sl2_multiplicities
from .sl2data import check_record, magical_record

SUITES = ("tables", "oracle", "identities")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def tables_suite(max_size: int = 10) -> Iterator[Check]:
    for entry in magical_catalog():
        rec = magical_record(entry.case_id)
        rs = root_system(rec.algebra)
        grading = graded_dimensions(rs, rec.diagram)
        got = sl2_multiplicities(grading)
        yield Check("tables", f"sl2-data {entry.case_id}", got == rec.sl2_data, _sl2_text(got))
        yield Check("tables", f"dim g_0 {entry.case_id}", grading[0] == rec.g0_type.dimension, str(grading[0]))
    for rf in classical_real_forms(max_size):
        if rf.real_rank == 0:
            continue
        found = enumerate_magical(rf, cap=max_size)
        same = sorted(map(str, found)) == sorted(map(str, theorem_list(rf)))
        yield Check("tables", f"magical diagrams {rf.label()}", same, f"{len(found)} diagram(s)")
        for d in found:
            rows = case_for_diagram(rf, d) or []
            dim_c = magical_criterion(rf, d).dim_c
            ok = bool(rows) and all(magical_record(c).c_type.dimension == dim_c for c in rows)
            yield Check("tables", f"centralizer {rf.label()} {d}", ok, f"dim c = {dim_c}")


def _sl2_text(data) -> str:
    parts = [f"(0,{data.n0})"] + [f"({m},{n})" for m, n in data.pairs]
    return " ".join(parts)


def oracle_suite(max_size: int = 6, seed: int = 0) -> Iterator[Check]:
    for kind in ("sl", "so", "sp"):
        for n in range(2, max_size + 1):
            if (kind == "sp" and n % 2) or (kind == "so" and n < 3):
                continue
            model = classical_algebra(kind, n)
            for p in partitions_of(n):
                if p.is_zero_orbit or not validate_partition(kind, p).valid:
                    continue
                tags = ("I", "II") if validate_partition(kind, p).very_even else (None,)
                for tag in tags:
                    verdict = is_magical_oracle(triple_from_partition(model, p, tag)).magical
                    crit = complex_orbit_is_magical_by_criterion(kind, n, p)
                    name = f"{kind}_{n} [{p}]" + (f" {tag}" if tag else "")
                    yield Check("oracle", name, verdict == crit, f"oracle {verdict}, criterion {crit}")
    for entry in magical_catalog():
        t = entry.case_id.type
        if not t.is_exceptional:
            continue
        model = chevalley_algebra(t)
        triple = triple_from_diagram(model, entry.labels, seed=seed)
        res = is_magical_oracle(triple)
        detail = f"witness {res.witness}"
        ok = res.magical
        if ok:
            cz = centralizer_of_centralizer(triple, magical=True)
            want = magical_record(entry.case_id).c_type.dimension
            ok = cz.dim_c == want
            detail = f"dim c = {cz.dim_c} (table {want})"
        yield Check("oracle", f"exceptional {entry.case_id}", ok, detail)


def identities_suite() -> Iterator[Check]:
    for entry in magical_catalog():
        rec = magical_record(entry.case_id)
        rep = check_record(rec)
        yield Check("identities", f"record {entry.case_id}", rep.ok, ", ".join(rep.failures()))
        dc = dimension_consistency(rec)
        yield Check("identities", f"Cayley dimensions {entry.case_id}", dc.ok, f"{dc.lhs} = {dc.rhs}")
    want = {("F4", "adjoint"): 3, ("E6", "simply_connected"): 1, ("E6", "adjoint"): 3,
            ("E7", "simply_connected"): 1, ("E7", "adjoint"): 2}
    for (fam, form), n in want.items():
        got = component_count(f"quat-{fam}", form)
        yield Check("identities", f"components {fam} {form}", got == n, str(got))


RUNNERS: Dict[str, Callable[..., Iterator[Check]]] = {
    "tables": tables_suite,
    "oracle": oracle_suite,
    "identities": identities_suite,
}


def run_suites(names, seed: int = 0) -> List[Check]:
    out: List[Check] = []
    for name in names:
        runner = RUNNERS[name]
        out.extend(runner(seed=seed) if name == "oracle" else runner())
    return out
