"""Chern data, resolutions, stability and jump lines for the nested arrangements I-V.

    python3 scripts/nested_family.py [--height 2] [--no-jumps]
"""

import argparse
import time

from linarr import catalog
from linarr.bundle import chern, fit_dual_curve, jump_scan, scan_lines, stability
from linarr.derivations import resolve


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--height", type=int, default=2)
    ap.add_argument("--no-jumps", action="store_true", help="skip the jump-line scans")
    args = ap.parse_args()

    print(f"{'':4} {'d':>2} {'(c1n,c2n)':>10}  {'resolution':<34} stability")
    for name, level in catalog.ROMAN.items():
        A = catalog.nested(level)
        c = chern(A)
        print(f"{name:4} {A.d:>2} {str((c.c1n, c.c2n)):>10}  {str(resolve(A)):<34} "
              f"{stability(A).verdict}")
    if args.no_jumps:
        return

    for name, level in catalog.ROMAN.items():
        A = catalog.nested(level)
        if not stability(A).semistable:
            continue
        t0 = time.perf_counter()
        reports = scan_lines(A, args.height)
        jumps = [r for r in reports if r.is_jump]
        print(f"\n{name}: {len(jumps)} jump lines among {len(reports)} candidates "
              f"({time.perf_counter() - t0:.1f}s)")
        for r in jumps:
            tag = "in A" if r.in_arrangement else "    "
            print(f"  {str(r.line):>10}  ({r.splitting.a1},{r.splitting.a2})  {tag}  "
                  f"|A''|={r.restriction_count}  threshold={r.threshold_fired}")
        c = chern(A)
        if jumps and c.c1n == 0 and c.c2n >= 1:
            non_jumps = [r.line for r in reports if not r.is_jump]
            curve = fit_dual_curve([r.line for r in jumps], c.c2n, non_jumps)
            print(f"  jump curve of degree {c.c2n}: {curve}")


if __name__ == "__main__":
    main()
