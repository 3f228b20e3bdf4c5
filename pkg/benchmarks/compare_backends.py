#!/usr/bin/env python3
"""Benchmark the identity-scan backends against each other.

The quartic basis scan dominates end-to-end runtime, so this compares the
compiled kernel with the pure-Python fallback on the standard construction
sizes and the largest split null extensions.  Verdicts are asserted equal;
timings go to stdout as a small table.

Usage: python benchmarks/compare_backends.py [--repeat N]
"""

import argparse
import time

from jsplit import _scan
from jsplit.bimodule import regular_bimodule, skew_bimodule
from jsplit.josp import build_josp_table
from jsplit.splitting import trivial_extension
from jsplit.superalgebra import check_super_jordan


def cases():
    yield "Josp(2|2)", build_josp_table(2, 1)
    yield "Josp(1|4)", build_josp_table(1, 2)
    yield "Josp(3|2)", build_josp_table(3, 1)
    A = build_josp_table(2, 1)
    yield "Josp(2|2)+Reg", trivial_extension(A, regular_bimodule(A)).E
    M = skew_bimodule(1, 2)
    yield "Josp(1|4)+Skew", trivial_extension(M.algebra, M).E


def bench(algebra, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        report = check_super_jordan(algebra, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, report.holds


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _scan.HAVE_COMPILED:
        print("compiled kernel not available; nothing to compare")
        return 1
    header = f"{'case':<18}{'dim':>5}{'quadruples':>12}" \
             f"{'compiled':>12}{'pure':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, algebra in cases():
        tc, okc = bench(algebra, "compiled", args.repeat)
        tp, okp = bench(algebra, "pure", args.repeat)
        assert okc == okp, f"backend verdicts differ on {name}"
        quads = algebra.dim ** 4
        print(f"{name:<18}{algebra.dim:>5}{quads:>12}"
              f"{tc * 1000:>10.1f}ms{tp * 1000:>10.1f}ms{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
