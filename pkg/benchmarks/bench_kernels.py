"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times polynomial multiplication, exact division, the in-place IntPoly
updates used by the series evaluator, and a slice of the third identity's
grid under each available backend.
"""
from __future__ import annotations

import argparse
import random
import timeit

from pfaffstringy import kernels, qhypergeom


def _poly(rng, n, bound=50):
    c = [rng.randint(-bound, bound) for _ in range(n)]
    c[-1] = c[-1] or 1
    return c


def workloads(rng):
    a, b = _poly(rng, 200), _poly(rng, 150)
    prod = kernels._pykernels.mul(a, b)
    small = [(_poly(rng, 12), _poly(rng, 9)) for _ in range(200)]

    def mul_large():
        kernels.mul(a, b)

    def mul_small():
        for x, y in small:
            kernels.mul(x, y)

    def divexact():
        kernels.divexact(prod, b)

    def intpoly():
        p = kernels.IntPoly([1], 0)
        acc = kernels.IntPoly([0], 0)
        for e in range(1, 40):
            p.mul_binomial(1, -1, e % 7 + 1)
            p.shift(1)
            acc.iadd(p)
        acc.terms()

    grid = dict(qhypergeom.DEFAULT_GRIDS[3])
    grid["n"] = range(3, 5)
    grid["b"] = range(-2, 3)

    def identity3():
        rep = qhypergeom.verify_identity(3, grid)
        assert rep.failed == 0

    return [("mul 200x150", mul_large, 200), ("mul 200 small pairs", mul_small, 50),
            ("divexact 349/150", divexact, 200), ("IntPoly updates", intpoly, 200),
            ("identity 3 slice", identity3, 1)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available()
    results = {}
    for name in backends:
        kernels.set_backend(name)
        for label, fn, number in workloads(random.Random(0)):
            best = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
            results.setdefault(label, {})[name] = best
    kernels.set_backend(backends[0])

    head = f"{'workload':<22}" + "".join(f"{b:>14}" for b in backends)
    if len(backends) == 2:
        head += f"{'speedup':>10}"
    print(head)
    for label, row in results.items():
        line = f"{label:<22}" + "".join(f"{row[b] * 1e3:>11.3f} ms" for b in backends)
        if len(backends) == 2:
            line += f"{row['python'] / row['c']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
