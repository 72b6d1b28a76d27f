"""Sweep both families through validate_family and print a summary table.

    python3 scripts/reproduce_families.py --arslan 2:10 --backelin 2:8,2:9,2:10,3:11,3:12
"""
import argparse
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from dercurve.families import arslan, backelin, validate_family


@dataclass
class SweepConfig:
    arslan_h: list[int] = field(default_factory=lambda: list(range(2, 11)))
    backelin_nr: list[tuple[int, int]] = field(default_factory=lambda: [(2, 8), (2, 9), (2, 10), (3, 11), (3, 12)])
    jobs: int = 1


def _row(spec):
    family, params = spec
    t0 = time.perf_counter()
    inst = arslan(*params) if family == "arslan" else backelin(*params)
    rep = validate_family(inst)
    M = rep.module
    failed = [c.name for c in rep.checks if not c.passed and not c.informational]
    return (rep.label, inst.generators, rep.row("type").actual,
            M.mu if M else None, M.minimal_ideal_count if M else None,
            rep.passed, failed, time.perf_counter() - t0)


def run(cfg: SweepConfig):
    specs = [("arslan", (h,)) for h in cfg.arslan_h] + [("backelin", nr) for nr in cfg.backelin_nr]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            return list(pool.map(_row, specs))
    return [_row(s) for s in specs]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--arslan", default="2:10", help="inclusive range LO:HI of h")
    ap.add_argument("--backelin", default="2:8,2:9,2:10,3:11,3:12", help="comma list of n:r")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)
    lo, hi = map(int, args.arslan.split(":"))
    nr = [tuple(map(int, p.split(":"))) for p in args.backelin.split(",") if p]
    rows = run(SweepConfig(list(range(lo, hi + 1)), nr, args.jobs))

    print(f"{'instance':<20} {'generators':<26} {'type':>4} {'mu':>4} {'beta0':>5} {'ok':>4} {'sec':>6}")
    for label, gens, typ, mu, b0, ok, failed, sec in rows:
        print(f"{label:<20} {str(gens):<26} {typ!s:>4} {mu!s:>4} {b0!s:>5} {'yes' if ok else 'NO':>4} {sec:6.2f}"
              + (f"  failed: {', '.join(failed)}" if failed else ""))
    return 0 if all(r[5] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
