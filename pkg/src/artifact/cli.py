"""Command-line front end.

Subcommands: ``classify``, ``oracle``, ``record``, ``render`` and ``verify``.
With ``--json`` every command prints one envelope object
``{"command", "args", "schema_version", "payload", "diagnostics"}`` whose
payload follows ``schemas/<command>.json``.  Numbers in payloads are exact:
integers, or strings ``"p/q"`` for non-integral rationals.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .cayley import FORMS, GenusContext, cayley_domain, component_count, dimension_consistency
from .classify import ClassifyError, MagicalCaseId, case_labels, default_cap, enumerate_magical, magical_criterion
from .matlie.chevalley import chevalley_algebra
from .matlie.matrix_models import classical_algebra
from .matlie.model import LieModelError
from .matlie.oracle import centralizer_of_centralizer, is_magical_oracle, sigma_e, triple_centralizer
from .matlie.scalars import to_json_number
from .matlie.structure import verify_structure
from .matlie.triples import triple_from_diagram, triple_from_partition
from .partitions import Partition, PartitionError, RealFormId, validate_partition
from .render import dynkin_ascii, poset_ascii, poset_dot
from .rootsys import AlgebraType, DynkinLabels, RootSystemError
from .sl2data import Sl2DataError, check_record, magical_record
from .suites import SUITES, run_suites

SCHEMA_VERSION = "1.0"
INPUT_ERRORS = (ClassifyError, PartitionError, RootSystemError, LieModelError, Sl2DataError, ValueError)


class CliError(Exception):
    """User-facing error: printed to stderr, exit status 2."""


def _num(x) -> object:
    return to_json_number(x)


def _labels(text: str) -> DynkinLabels:
    try:
        return DynkinLabels.of(int(x) for x in text.split(","))
    except ValueError as exc:
        raise CliError(f"bad label list {text!r}: {exc}") from None


# ---------------------------------------------------------------- classify


def cmd_classify(args) -> Dict:
    text = args.real_form.strip()
    if text.split("-", 1)[0] in ("split", "hermitian", "case3", "quat"):
        cid = MagicalCaseId.parse(text)
        rec = magical_record(cid)
        return {
            "real_form": rec.canonical_real_form.label(),
            "diagrams": [],
            "catalog": {"case": cid.spec(), "labels": list(case_labels(cid).labels), "centralizer": rec.c_real.label()},
        }
    rf = RealFormId.parse(text)
    cap = args.cap if args.cap is not None else default_cap()
    rows = []
    for d in enumerate_magical(rf, cap=cap):
        rep = magical_criterion(rf, d)
        rows.append({
            "diagram": str(d),
            "criterion": _num(rep.criterion_value),
            "dim_V": rep.dim_V,
            "dim_c": rep.dim_c,
            "centralizer": rep.centralizer.label(),
        })
    return {"real_form": rf.label(), "diagrams": rows, "catalog": None}


def _text_classify(p: Dict) -> str:
    if p["catalog"]:
        c = p["catalog"]
        return f"{c['case']}: labels {','.join(map(str, c['labels']))}, canonical real form {p['real_form']}, c = {c['centralizer']}\n"
    lines = [f"{p['real_form']}: {len(p['diagrams'])} magical diagram(s)"]
    for r in p["diagrams"]:
        lines.append(f"  {r['diagram']}  dim V = {r['dim_V']}, c = {r['centralizer']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- oracle


_MATRIX_KINDS = ("sl", "so", "sp")


def _oracle_triple(args):
    kind = args.type.strip()
    if kind.lower() in _MATRIX_KINDS:
        if args.n is None or args.partition is None:
            raise CliError("matrix models need --n and --partition")
        model = classical_algebra(kind.lower(), args.n)
        part = Partition.parse(args.partition)
        if part.size != args.n:
            raise CliError(f"partition {part} does not have size {args.n}")
        v = validate_partition(kind.lower(), part)
        if not v.valid:
            raise CliError(f"not realizable: {v.reason}")
        return triple_from_partition(model, part, args.tag if v.very_even else None)
    t = AlgebraType.parse(kind if args.n is None else f"{kind}{args.n}")
    if args.labels is None:
        raise CliError("Chevalley models need --labels")
    model = chevalley_algebra(t)
    return triple_from_diagram(model, _labels(args.labels), seed=args.seed)


def cmd_oracle(args) -> Dict:
    triple = _oracle_triple(args)
    sig = sigma_e(triple)
    res = is_magical_oracle(triple, sig)
    out = {
        "algebra": triple.model.name,
        "dim": triple.model.dim,
        "magical": res.magical,
        "witness": list(res.witness) if res.witness else None,
        "pairs_checked": res.pairs_checked,
        "fixed_dimension": res.fixed_dimension,
        "even": res.even,
        "sl2_data": [[_num(Fraction(j, 2)), n] for j, n in res.multiplicities.items()],
        "dim_c": len(triple_centralizer(triple)),
        "dim_ge": None,
        "structure": None,
    }
    if res.magical:
        cz = centralizer_of_centralizer(triple, magical=True)
        out["dim_ge"] = cz.dim_ge
        if args.structure:
            rep = verify_structure(triple, cz)
            out["structure"] = {k: bool(v) for k, v in rep.checks.items()}
    return out


def _text_oracle(p: Dict) -> str:
    verdict = "magical" if p["magical"] else f"not magical (witness {p['witness'][0]}, {p['witness'][1]})"
    lines = [f"{p['algebra']}: {verdict}", f"  dim c = {p['dim_c']}, dim Fix(sigma) = {p['fixed_dimension']}"]
    if p["dim_ge"] is not None:
        lines.append(f"  dim g(e) = {p['dim_ge']}")
    for k, v in (p["structure"] or {}).items():
        lines.append(f"  [{'ok' if v else 'FAIL'}] {k}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- record


def cmd_record(args) -> Dict:
    rec = magical_record(MagicalCaseId.parse(args.case))
    ctx = GenusContext(args.genus)
    dom = cayley_domain(rec, ctx)
    dc = dimension_consistency(rec)
    rep = check_record(rec)
    counts = None
    if rec.case_id.case == 4:
        counts = {form: component_count(rec, form) for form in FORMS}
    return {
        "case": rec.case_id.spec(),
        "algebra": rec.algebra.name,
        "labels": list(rec.diagram.labels),
        "canonical_real_form": rec.canonical_real_form.label(),
        "sl2_data": [[0, rec.sl2_data.n0]] + [[_num(m), n] for m, n in rec.sl2_data.pairs],
        "g0": rec.g0_type.label(),
        "c": rec.c_type.label(),
        "c_real": rec.c_real.label(),
        "ge": rec.ge_type.label(),
        "ge_exponents": list(rec.ge_exponents),
        "m_c": rec.m_c,
        "cayley_real_form": rec.cayley_real_form.label(),
        "theta": rec.theta.describe(),
        "cayley": {
            "group": dom.cayley_group,
            "twist_degree": dom.twist_degree,
            "differential_degrees": list(dom.differential_degrees),
            "h0_dims": list(dom.differential_dims),
            "vector_space_dim": dom.vector_space_dim,
            "m0ss_dim": dom.m0ss_dim,
            "genus": dom.genus,
        },
        "dimension_consistency": {"lhs": dc.lhs, "rhs": dc.rhs, "ok": dc.ok},
        "checks": dict(rep.checks),
        "component_count": counts,
    }


def _text_record(p: Dict) -> str:
    cay = p["cayley"]
    sl2 = " ".join(f"({m},{n})" for m, n in p["sl2_data"])
    lines = [
        f"{p['case']} ({p['algebra']}, labels {','.join(map(str, p['labels']))})",
        f"  canonical real form: {p['canonical_real_form']}",
        f"  sl2-data (m, n_2m): {sl2}",
        f"  g_0 = {p['g0']}; c = {p['c']} (compact form {p['c_real']})",
        f"  g(e) = {p['ge']}, exponents {p['ge_exponents']}, m_c = {p['m_c']}",
        f"  Cayley real form: {p['cayley_real_form']}",
        f"  positivity: {p['theta']}",
        f"  Cayley group {cay['group']}, twist K^{cay['twist_degree']}",
        f"  differentials K^d for d in {cay['differential_degrees']}: h0 = {cay['h0_dims']} (genus {cay['genus']})",
        f"  dimension identity: {p['dimension_consistency']['lhs']} = {p['dimension_consistency']['rhs']}",
    ]
    if p["component_count"]:
        lines.append("  components: " + ", ".join(f"{k} {v}" for k, v in p["component_count"].items()))
    bad = [k for k, v in p["checks"].items() if not v]
    lines.append("  checks: " + ("all pass" if not bad else "FAILED " + "; ".join(bad)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- render


def cmd_render(args) -> Dict:
    spec = args.poset or args.dynkin
    t = AlgebraType.parse(spec)
    labels = _labels(args.labels)
    if len(labels) != t.rank:
        raise CliError(f"expected {t.rank} labels for {t.name}, got {len(labels)}")
    if args.poset:
        text = poset_dot(t, labels) if args.format == "dot" else poset_ascii(t, labels)
        kind = "poset"
    else:
        if args.format == "dot":
            raise CliError("Dynkin diagrams render as ASCII only")
        text = dynkin_ascii(t, labels)
        kind = "dynkin"
    return {"kind": kind, "algebra": t.name, "labels": list(labels.labels), "format": args.format, "text": text}


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> Dict:
    names = SUITES if args.suite == "all" else (args.suite,)
    checks = run_suites(names, seed=args.seed)
    rows = [{"suite": c.suite, "name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]
    failed = sum(not c.ok for c in checks)
    return {"suites": list(names), "checks": rows, "passed": len(rows) - failed, "failed": failed}


def _text_verify(p: Dict) -> str:
    lines = [f"[{'ok' if r['ok'] else 'FAIL'}] {r['suite']}: {r['name']}" + (f" ({r['detail']})" if r["detail"] else "") for r in p["checks"]]
    lines.append(f"{p['passed']} passed, {p['failed']} failed")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON envelope")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    parser = argparse.ArgumentParser(prog="artifact", description="Magical nilpotent orbits toolkit.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="magical diagrams of a real form")
    p.add_argument("--real-form", required=True, help="e.g. so:2,3, su*:3, spR:4, or a case id such as quat-F4")
    p.add_argument("--cap", type=int, default=None, help="maximal matrix size (default: $MAGICAL_CAP or 18)")

    p = sub.add_parser("oracle", parents=[common], help="test a triple in an explicit model")
    p.add_argument("--type", required=True, help="sl/so/sp (matrix model) or a root type such as F4, B4, B:4")
    p.add_argument("--n", type=int, default=None, help="matrix size, or rank for classical root types")
    p.add_argument("--labels", default=None, help="weighted Dynkin diagram, e.g. 0,0,2,2")
    p.add_argument("--partition", default=None, help="Jordan type, e.g. 2,1")
    p.add_argument("--tag", choices=("I", "II"), default="I", help="very-even orbit tag")
    p.add_argument("--structure", action="store_true", help="also run the structural checks")

    p = sub.add_parser("record", parents=[common], help="structural record of a magical case")
    p.add_argument("--case", required=True, help="e.g. quat-E8, hermitian-C:4, case3-B:4,3, split-A:2")
    p.add_argument("--genus", type=int, default=2)

    p = sub.add_parser("render", parents=[common], help="DOT or ASCII rendering")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--poset", help="root type for the weighted root poset")
    g.add_argument("--dynkin", help="root type for the labelled Dynkin diagram")
    p.add_argument("--labels", required=True)
    p.add_argument("--format", choices=("dot", "ascii"), default=None)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    return parser


COMMANDS = {
    "classify": (cmd_classify, _text_classify),
    "oracle": (cmd_oracle, _text_oracle),
    "record": (cmd_record, _text_record),
    "render": (cmd_render, lambda p: p["text"]),
    "verify": (cmd_verify, _text_verify),
}


def _echo(args) -> Dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "json")}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "render" and args.format is None:
        args.format = "dot" if args.poset else "ascii"
    run, text = COMMANDS[args.command]
    try:
        payload = run(args)
    except (CliError, *INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    status = 1 if args.command == "verify" and payload["failed"] else 0
    if args.json:
        env = {
            "command": args.command,
            "args": _echo(args),
            "schema_version": SCHEMA_VERSION,
            "payload": payload,
            "diagnostics": [],
        }
        sys.stdout.write(json.dumps(env, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text(payload))
    return status


if __name__ == "__main__":
    sys.exit(main())
