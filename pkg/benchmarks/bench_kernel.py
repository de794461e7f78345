"""Benchmark the compiled kernel against the pure-Python fallback.

Times the hot operations (cyclotomic polynomial multiply-reduce and exact
matrix multiplication) on workloads shaped like the engine's: small dense
matrices over Q(zeta_N) with modest integer growth.

Run:  python benchmarks/bench_kernel.py
"""

import random
import time

from gcenter import _cykernel, _pykernel  # type: ignore[attr-defined]
from gcenter.scalars import _phi_lower


def _random_elems(rng, m, count, spread=40):
    out = []
    for _ in range(count):
        nums = [rng.randint(-spread, spread) for _ in range(m)]
        den = rng.randint(1, spread)
        out.append((tuple(nums), den))
    return out


def bench_poly_mul(kernel, order, count=4000, seed=1):
    rng = random.Random(seed)
    phi = _phi_lower(order)
    elems = _random_elems(rng, len(phi), count * 2)
    t0 = time.perf_counter()
    for i in range(count):
        an, ad = elems[2 * i]
        bn, bd = elems[2 * i + 1]
        kernel.poly_mul_mod(an, ad, bn, bd, phi)
    return time.perf_counter() - t0


def bench_mat_mul(kernel, order, n=24, reps=6, seed=2):
    rng = random.Random(seed)
    phi = _phi_lower(order)
    a = _random_elems(rng, len(phi), n * n, spread=12)
    b = _random_elems(rng, len(phi), n * n, spread=12)
    t0 = time.perf_counter()
    for _ in range(reps):
        kernel.mat_mul(list(a), list(b), n, n, n, phi)
    return time.perf_counter() - t0


def main():
    print(f"{'benchmark':<28}{'pure (s)':>12}{'compiled (s)':>14}"
          f"{'speedup':>10}")
    for order in (4, 8, 24):
        tp = bench_poly_mul(_pykernel, order)
        tc = bench_poly_mul(_cykernel, order)
        print(f"{'poly_mul_mod N=' + str(order):<28}{tp:>12.4f}"
              f"{tc:>14.4f}{tp / tc:>9.2f}x")
    for order in (4, 8):
        tp = bench_mat_mul(_pykernel, order)
        tc = bench_mat_mul(_cykernel, order)
        print(f"{'mat_mul 24x24 N=' + str(order):<28}{tp:>12.4f}"
              f"{tc:>14.4f}{tp / tc:>9.2f}x")


if __name__ == "__main__":
    main()
