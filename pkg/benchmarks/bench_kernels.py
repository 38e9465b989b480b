"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from picloc import _pycore

try:
    from picloc import _ccore
except ImportError:
    _ccore = None


def _matrices(seed, count, rows, cols, bound=5, density=0.4):
    rng = random.Random(seed)
    return [[[rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(cols)]
             for _ in range(rows)] for _ in range(count)]


def _coboundaries(seed, count):
    """Sparse +-1 matrices shaped like simplicial coboundaries."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r, c = rng.randint(10, 30), rng.randint(10, 30)
        m = [[0] * c for _ in range(r)]
        for row in m:
            for j in rng.sample(range(c), min(3, c)):
                row[j] = rng.choice((-1, 1))
        out.append((m, r, c))
    return out


def _run_snf(core, cases):
    for m, r, c in cases:
        try:
            core.snf(m, r, c)
        except OverflowError:
            pass


def _run_hnf(core, cases):
    for m, r, c in cases:
        core.hnf(m, r, c)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ccore is None:
        print("compiled kernels not built; nothing to compare")
        return
    dense = [(m, 6, 6) for m in _matrices(1, 300, 6, 6)]
    sparse = _coboundaries(2, 200)
    jobs = [
        ("snf dense 6x6 (x300)", lambda core: _run_snf(core, dense)),
        ("snf coboundary (x200)", lambda core: _run_snf(core, sparse)),
        ("hnf coboundary (x200)", lambda core: _run_hnf(core, sparse)),
        ("canonical complexes n=5", lambda core: core.canonical_complexes(5)),
    ]
    print(f"{'kernel':<26}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, fn in jobs:
        tp = min(timeit.repeat(lambda: fn(_pycore), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(_ccore), number=1, repeat=args.repeat))
        print(f"{name:<26}{tp:>10.4f}{tc:>10.4f}{tp / tc:>8.1f}x")
    tc = min(timeit.repeat(lambda: _ccore.canonical_complexes(6), number=1, repeat=1))
    print(f"{'canonical complexes n=6':<26}{'-':>10}{tc:>10.4f}")


if __name__ == "__main__":
    main()
