"""Compare the compiled and numpy kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from fuzzyuss import kernels


def membership_case(rng, levels=1001, points=100_000):
    grid = np.linspace(0, 1, levels)
    lower = 15 + grid**2
    upper = 20 - 2 * np.sqrt(grid)
    z = rng.uniform(14, 21, points)
    return (z, grid, lower, upper)


def vertex_case(rng, m, n):
    normals = rng.integers(-4, 5, (m, n)).astype(float)
    center = normals @ rng.normal(size=n)
    width = rng.uniform(0.5, 3, m)
    return (normals, center - width, center + width, 1e-10, 1e-9)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()

    if kernels.compiled is None:
        print("compiled extension not built; only the numpy kernels are timed")
    rng = np.random.default_rng(0)
    cases = [
        ("pl_membership 1001 levels x 1e5 points", "pl_membership", membership_case(rng)),
        ("scan_vertices m=3 n=2", "scan_vertices", vertex_case(rng, 3, 2)),
        ("scan_vertices m=8 n=3", "scan_vertices", vertex_case(rng, 8, 3)),
        ("scan_vertices m=12 n=4", "scan_vertices", vertex_case(rng, 12, 4)),
    ]
    backends = [("numpy", kernels.python)] + ([("compiled", kernels.compiled)] if kernels.compiled else [])

    print(f"{'case':42s}" + "".join(f"{name:>14s}" for name, _ in backends) + ("   speedup" if len(backends) == 2 else ""))
    for label, fn, case in cases:
        times = []
        for _, mod in backends:
            f = getattr(mod, fn)
            number = max(1, int(0.2 / max(timeit.timeit(lambda: f(*case), number=1), 1e-7)))
            best = min(timeit.repeat(lambda: f(*case), number=number, repeat=args.repeat)) / number
            times.append(best)
        row = f"{label:42s}" + "".join(f"{t * 1e3:12.3f}ms" for t in times)
        if len(times) == 2:
            row += f"   {times[0] / times[1]:6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
