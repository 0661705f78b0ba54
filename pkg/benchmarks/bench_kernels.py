"""Compare the compiled and pure-Python geometry kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload runs on identical inputs under both backends; the table shows
the best wall time of ``--repeat`` runs and the speed-up of the compiled one.
"""

import argparse
import math
import random
import timeit

from kandinsky import _pykernels

try:
    from kandinsky import _ckernels
except ImportError:
    _ckernels = None


def _shapes(n, seed):
    rng = random.Random(seed)
    return [(rng.randrange(3), rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8),
             rng.uniform(0.04, 0.35)) for _ in range(n)]


def workloads():
    pairs = list(zip(_shapes(20000, 1), _shapes(20000, 2)))
    field = _shapes(32, 3)
    codes, xs, ys, sizes = (list(c) for c in zip(*field))
    probes = _shapes(2000, 4)
    rng = random.Random(5)
    clouds = []
    for _ in range(5):
        n = rng.randint(8, 16)
        clouds.append(([rng.uniform(0.2, 0.8) for _ in range(n)],
                       [rng.uniform(0.2, 0.8) for _ in range(n)]))

    def clearance(k):
        def run():
            for a, b in pairs:
                k.clearance(*a, *b)
        return run

    def placement(k):
        def run():
            for code, x, y, s in probes:
                k.min_clearance(code, x, y, s, codes, xs, ys, sizes, len(field))
        return run

    def grid_search(k):
        def run():
            for cx, cy in clouds:
                for kind in (1, 2):
                    k.grid_search(kind, cx, cy, 0.0, 1.0, 0.0, 1.0, 0.15, 0.45, 0.01, math.inf)
        return run

    return [("clearance x20000", clearance), ("min_clearance x2000 vs 32", placement),
            ("grid_search 5 clouds x2 kinds", grid_search)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':32} {'python s':>10} {'cython s':>10} {'speed-up':>9}")
    for name, make in workloads():
        py = min(timeit.repeat(make(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:32} {py:10.4f} {'n/a':>10} {'n/a':>9}")
            continue
        c = min(timeit.repeat(make(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:32} {py:10.4f} {c:10.4f} {py / c:8.1f}x")


if __name__ == "__main__":
    main()
