#!/usr/bin/env python3
"""Benchmark the compiled support-scan kernel against its pure-Python twin.

Both backends run the same lexicographic scan and must return identical
results; the point of the extension is the roughly two orders of magnitude
between them on the hot loop.

Usage: python benchmarks/bench_kernel.py [--full]
"""

from __future__ import annotations

import argparse
import math
import time

from cyclolc import _kernel
from cyclolc._kernel import pure
from cyclolc.sequences import build_q, build_u, gated_params_for_family


def bench(label, prob, k, count, runner):
    t0 = time.perf_counter()
    result = runner(prob, k, 0, count)
    dt = time.perf_counter() - t0
    rate = count / dt if dt else float("inf")
    print(f"  {label:<10} {count:>9} supports in {dt:7.3f}s  ({rate:>12,.0f}/s)")
    return result, dt


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="larger scan sizes")
    args = parser.parse_args()

    if _kernel.BACKEND != "compiled":
        print("warning: compiled kernel unavailable; comparing pure against itself")
    fast = _kernel.scan_range
    slow = pure.scan_range

    params13, triples13 = gated_params_for_family(13)
    u13 = build_u(params13, triples13[0])
    params29, triples29 = gated_params_for_family(29)
    q29 = build_q(params29, triples29[0])

    cases = [
        ("u, period 26, k=6", pure.build_problem(13, u13.terms, 26), 6, 60_000),
        ("q, period 29, k=5", pure.build_problem(29, q29.terms, 29), 5, 118_755),
    ]
    if args.full:
        cases.append(("u, period 26, k=9", pure.build_problem(13, u13.terms, 26), 9, math.comb(26, 9)))

    for label, prob, k, count in cases:
        count = min(count, math.comb(prob.n_positions, k))
        print(f"{label}:")
        got_fast, t_fast = bench(_kernel.BACKEND, prob, k, count, fast)
        got_slow, t_slow = bench("pure", prob, k, count, slow)
        assert got_fast == got_slow, (got_fast, got_slow)
        if t_fast:
            print(f"  speedup    {t_slow / t_fast:,.1f}x (results identical)")


if __name__ == "__main__":
    main()
