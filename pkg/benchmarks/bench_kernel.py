#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times the three hot paths (length evaluation, group multiplication, twisted
Demazure powers) and one end-to-end enumeration with all checks enabled.

Usage: python benchmarks/bench_kernel.py [--config type=G2;lattice=coroot]
"""

import argparse
import random
import time

from adlv._backend import compiled_available
from adlv.demazure import dem_twisted_power
from adlv.harness import run_harness
from adlv.weyl import EAWGroup


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(config: str, backend: str) -> dict:
    g = EAWGroup.from_config(config, backend=backend)
    els = [w.raw for w in g.elements_upto(10)]
    rng = random.Random(42)
    pairs = [(rng.choice(els), rng.choice(els)) for _ in range(20_000)]
    kern = g.kernel

    def run_lengths():
        for raw in els:
            kern.length(*raw)

    def run_muls():
        for a, b in pairs:
            kern.mul(*a, *b)

    sigma = g.auto()
    sample = [g.element(*raw) for raw in els[:: max(1, len(els) // 50)]]

    def run_dem_powers():
        for w in sample:
            dem_twisted_power(w, 40, sigma)

    results = {
        f"length x{len(els)}": timeit(run_lengths),
        "mul x20000": timeit(run_muls),
        f"dem power^40 x{len(sample)}": timeit(run_dem_powers),
    }

    g2 = EAWGroup.from_config("type=A2;lattice=coweight", backend=backend)
    results["enumerate A2cw l<=6 (all checks)"] = timeit(
        lambda: run_harness(g2.parse_sigma("swap(1,2)"), 6, "all"), repeat=1
    )
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--config", default="type=G2;lattice=coroot")
    args = parser.parse_args()

    backends = ["pure"] + (["compiled"] if compiled_available() else [])
    if len(backends) == 1:
        print("compiled kernel not available; timing the pure backend only")
    rows = {b: bench_backend(args.config, b) for b in backends}

    width = max(len(k) for k in rows["pure"])
    print(f"\nkernel benchmark on {args.config}")
    header = f"{'case'.ljust(width)}  " + "  ".join(f"{b:>10}" for b in backends)
    print(header)
    print("-" * len(header))
    for case in rows["pure"]:
        cells = "  ".join(f"{rows[b][case] * 1000:>8.1f}ms" for b in backends)
        line = f"{case.ljust(width)}  {cells}"
        if "compiled" in rows:
            line += f"   ({rows['pure'][case] / rows['compiled'][case]:.1f}x)"
        print(line)


if __name__ == "__main__":
    main()
