"""Command-line front end.

    dercurve analyze 6 7 9 10
    dercurve family arslan --h 2
    dercurve family backelin --n 2 --sweep 8:10
    dercurve poincare --h1 3 --h2 1 --coeffs 1,5

Reports are JSON on stdout (sorted keys). Exit codes: 0 success,
1 input/validation error, 2 the projective closure is not Cohen-Macaulay.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .dermod import derivation_module
from .errors import DercurveError, NotCohenMacaulay
from .families import ArslanInstance, BackelinInstance, FamilyReport, validate_family
from .numsgp import NumericalSemigroup
from .plane import PlaneSemigroup
from .poincare import (
    TruncatedSeries,
    der_series,
    der_series_rational,
    parse_coeffs,
    parse_rational,
    relation_text,
)

EXIT_OK, EXIT_INPUT, EXIT_NOT_CM = 0, 1, 2

PARTIAL_NOTE = (
    "D1 generators point along d/du and D2 generators along d/dv; some closed-form "
    "listings of the Arslan family swap these two directions"
)


def _semigroup_dict(S: NumericalSemigroup) -> dict:
    return {
        "generators": list(S.generators),
        "frobenius": S.frobenius,
        "gaps_count": len(S.gaps),
        "apery": S.apery(),
        "pf": sorted(S.pseudo_frobenius),
        "type": S.type,
        "homogeneous": S.is_homogeneous,
    }


def _series_dict(h1: int, h2: int, coeffs=None, rational=None) -> dict:
    out = {"h1": h1, "h2": h2, "relation": relation_text(h1, h2)}
    if coeffs is not None:
        series = der_series(h1, h2, TruncatedSeries(tuple(coeffs)))
        out["truncated"] = list(series.coeffs)
        out["truncated_wire"] = ",".join(map(str, series.coeffs))
    if rational is not None:
        out["rational"] = der_series_rational(h1, h2, rational).wire()
    return out


def analyze_report(gens, coeffs=None, rational=None) -> dict:
    S = NumericalSemigroup(gens)
    P = PlaneSemigroup(S)
    verdict = P.cm_check()
    report = {
        "command": "analyze",
        "input": {"generators": list(gens)},
        "semigroup": _semigroup_dict(S),
        "plane": {
            "gamma2": list(P.gamma2.generators),
            "gamma2_raw": list(P.gamma2_raw),
            "gamma2_is_N": P.gamma2.is_N,
            "cm": verdict.to_dict(),
        },
    }
    if not verdict.equal:
        raise NotCohenMacaulay(verdict.counterexample)
    M = derivation_module(P)
    report["derivations"] = {
        "generators": [g.to_dict() for g in M.generators],
        "mu": M.mu,
        "ideal": [list(p) for p in M.ideal],
        "minimal_ideal": [list(p) for p in M.minimal_ideal],
        "minimal_ideal_count": M.minimal_ideal_count,
        "annihilation": M.annihilation,
    }
    report["poincare"] = _series_dict(M.h1, M.h2, coeffs, rational)
    notes = [PARTIAL_NOTE]
    if M.mu != M.minimal_ideal_count:
        notes.append(
            f"mu={M.mu} listed generators but the ideal has {M.minimal_ideal_count} "
            f"minimal generators (constant term 1+h1+h2={1 + M.h1 + M.h2})"
        )
    report["notes"] = notes
    return report


def family_report(rep: FamilyReport) -> dict:
    out = {
        "label": rep.label,
        "params": rep.params,
        "generators": list(rep.generators),
        "passed": rep.passed,
        "checks": [c.to_dict() for c in rep.checks],
        "notes": list(rep.notes),
    }
    if rep.module is not None:
        M = rep.module
        out["mu"] = M.mu
        out["minimal_ideal_count"] = M.minimal_ideal_count
        out["relation"] = relation_text(M.h1, M.h2)
    return out


def _validate(instance):
    return family_report(validate_family(instance))


def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError as exc:
        raise DercurveError(f"--sweep expects LO:HI, got {text!r}") from exc
    return range(lo, hi + 1)


def _family_instances(args) -> list:
    if args.kind == "arslan":
        hs = _parse_range(args.sweep) if args.sweep else [args.h]
        if None in hs:
            raise DercurveError("arslan needs --h or --sweep")
        return [ArslanInstance(h) for h in hs]
    if args.n is None:
        raise DercurveError("backelin needs --n")
    rs = _parse_range(args.sweep) if args.sweep else [args.r]
    if None in rs:
        raise DercurveError("backelin needs --r or --sweep")
    return [BackelinInstance(args.n, r) for r in rs]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _human(report: dict) -> str:
    lines = []
    if report.get("command") == "analyze":
        sg, der = report["semigroup"], report["derivations"]
        lines.append(f"semigroup  {sg['generators']}  F={sg['frobenius']}  PF={sg['pf']}  type={sg['type']}")
        lines.append(f"gamma2     {report['plane']['gamma2']}  cm={report['plane']['cm']['status']}"
                     f" (bound {report['plane']['cm']['bound']})")
        for g in der["generators"]:
            lines.append(f"  {g['kind']:<13} {g['text']}")
        lines.append(f"mu={der['mu']}  minimal ideal generators={der['minimal_ideal_count']}"
                     f"  annihilation={der['annihilation']}")
        lines.append(f"P_Der = {report['poincare']['relation']}")
        lines += [f"note: {n}" for n in report["notes"]]
    elif "checks" in report:
        lines.append(f"{report['label']}  {'PASS' if report['passed'] else 'FAIL'}")
        for c in report["checks"]:
            flag = "info" if c["informational"] else ("ok" if c["passed"] else "FAIL")
            lines.append(f"  {flag:<4} {c['name']:<32} {c['actual']}")
    else:
        lines.append(_dump(report))
    return "\n".join(lines)


def _emit(report, human: bool) -> None:
    if isinstance(report, list) and human:
        print("\n\n".join(_human(r) for r in report))
    elif human:
        print(_human(report))
    else:
        print(_dump(report))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dercurve", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="full pipeline for one generator list")
    an.add_argument("gens", nargs="+", type=int)
    an.add_argument("--coeffs", help="P_K coefficients, e.g. 1,5,12")
    an.add_argument("--rational", help="P_K as 'p;q' ascending coefficient lists")
    an.add_argument("--human", action="store_true")

    fa = sub.add_parser("family", help="validate the closed forms of a curve family")
    fa.add_argument("kind", choices=["arslan", "backelin"])
    fa.add_argument("--h", type=int)
    fa.add_argument("--n", type=int)
    fa.add_argument("--r", type=int)
    fa.add_argument("--sweep", help="LO:HI range over h (arslan) or r (backelin)")
    fa.add_argument("--jobs", type=int, default=1)
    fa.add_argument("--human", action="store_true")

    po = sub.add_parser("poincare", help="transform a residue-field series")
    po.add_argument("--h1", type=int, required=True)
    po.add_argument("--h2", type=int, required=True)
    po.add_argument("--coeffs")
    po.add_argument("--rational")
    po.add_argument("--human", action="store_true")
    return ap


def _run(args) -> tuple[object, int]:
    if args.command == "analyze":
        coeffs = parse_coeffs(args.coeffs) if args.coeffs else None
        rational = parse_rational(args.rational) if args.rational else None
        return analyze_report(args.gens, coeffs, rational), EXIT_OK

    if args.command == "family":
        instances = _family_instances(args)
        if args.jobs > 1 and len(instances) > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                reports = list(pool.map(_validate, instances))
        else:
            reports = [_validate(i) for i in instances]
        code = EXIT_OK if all(r["passed"] for r in reports) else EXIT_INPUT
        return (reports if args.sweep else reports[0]), code

    if not args.coeffs and not args.rational:
        raise DercurveError("poincare needs --coeffs or --rational")
    if args.h1 < 1 or args.h2 < 1:
        raise DercurveError("h1 and h2 must be positive")
    coeffs = parse_coeffs(args.coeffs) if args.coeffs else None
    rational = parse_rational(args.rational) if args.rational else None
    report = {"command": "poincare", **_series_dict(args.h1, args.h2, coeffs, rational)}
    return report, EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = _run(args)
    except NotCohenMacaulay as exc:
        _emit({"error": exc.to_dict()}, False)
        return EXIT_NOT_CM
    except DercurveError as exc:
        _emit({"error": exc.to_dict()}, False)
        return EXIT_INPUT
    except ValueError as exc:
        _emit({"error": {"type": "ValueError", "message": str(exc)}}, False)
        return EXIT_INPUT
    _emit(report, args.human)
    return code


if __name__ == "__main__":
    sys.exit(main())
