#!/usr/bin/env python3
"""Benchmark the compiled cyclotomic kernels against the pure-Python ones.

Micro level: raw field multiplication and fused add-multiply at conductor
28 (the hot inner loop of everything else).  Macro level: group closure
plus a full state-space computation, on whichever backend this process
imported (set LGORB_PURE=1 and rerun to get the pure macro numbers).

Usage: python benchmarks/bench_kernels.py
"""

import random
import time

from lgorb import _kernels_py
from lgorb.exactnum import _field

try:
    from lgorb import _cycore
except ImportError:
    _cycore = None


def random_raw(rng, phi):
    nums = [rng.randint(-40, 40) for _ in range(phi)]
    return tuple(nums), rng.randint(1, 12)


def bench_kernel(module, pairs, rows, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for (an, ad), (bn, bd) in pairs:
            module.mul(an, ad, bn, bd, rows)
    mul_time = time.perf_counter() - t0
    t0 = time.perf_counter()
    acc = pairs[0][0]
    for _ in range(repeat):
        for (an, ad), (bn, bd) in pairs:
            acc = module.addmul(acc[0], acc[1], an, ad, bn, bd, rows)
    addmul_time = time.perf_counter() - t0
    return mul_time, addmul_time


def micro():
    rng = random.Random(1)
    field = _field(28)
    rows = field.mul_rows()
    pairs = [(random_raw(rng, field.phi), random_raw(rng, field.phi)) for _ in range(200)]
    repeat = 50
    ops = len(pairs) * repeat
    print(f"micro: {ops} field multiplications at conductor 28")
    results = {}
    for name, module in [("pure", _kernels_py)] + ([("compiled", _cycore)] if _cycore else []):
        mul_time, addmul_time = bench_kernel(module, pairs, rows, repeat)
        results[name] = (mul_time, addmul_time)
        print(
            f"  {name:9s} mul {ops / mul_time / 1e3:8.1f} kop/s   "
            f"addmul {ops / addmul_time / 1e3:8.1f} kop/s"
        )
    if _cycore:
        speed = results["pure"][0] / results["compiled"][0]
        speed2 = results["pure"][1] / results["compiled"][1]
        print(f"  speedup   mul {speed:.2f}x   addmul {speed2:.2f}x")
    else:
        print("  compiled kernel not built; only pure numbers shown")


def macro():
    from lgorb import compute_hh, kernel_backend
    from lgorb.catalog import catalog_group, klein_quartic

    print(f"macro (backend = {kernel_backend}):")
    f, w = klein_quartic()
    t0 = time.perf_counter()
    group = catalog_group("slf", hat=True)
    t1 = time.perf_counter()
    report = compute_hh(f, group, w)
    t2 = time.perf_counter()
    print(f"  closure of the order-336 extension: {t1 - t0:6.2f} s")
    print(f"  state-space computation (total {report.total_dim}):  {t2 - t1:6.2f} s")
    print("  (rerun with LGORB_PURE=1 for the pure-Python macro numbers)")


if __name__ == "__main__":
    micro()
    macro()
