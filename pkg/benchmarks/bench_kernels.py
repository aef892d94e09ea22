"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are fed identical inputs; their outputs are checked for
equality before timings are reported.
"""

import argparse
import random
import timeit

from toriented import _pykernels

try:
    from toriented import _ckernels
except ImportError:
    _ckernels = None


def random_rows(rng, count, nrows, ncols):
    return [[rng.getrandbits(ncols) for _ in range(nrows)] for _ in range(count)]


def sweep_gens(n):
    nonzero = list(range(1, 1 << n))
    return [[w for j, w in enumerate(nonzero) if (mask >> j) & 1] for mask in range(1 << len(nonzero))]


def workloads(rng):
    small = random_rows(rng, 2000, 12, 6)
    wide = random_rows(rng, 500, 60, 60)
    cayley = [(14, rng.sample(range(1, 1 << 14), 20)) for _ in range(20)]
    sweep = sweep_gens(4)

    def echelon_small(k):
        for rows in small:
            k.echelon(rows, 6)

    def echelon_wide(k):
        for rows in wide:
            k.echelon(rows, 60)

    def cayley_big(k):
        for n, gens in cayley:
            k.cayley_color(n, gens)

    def sweep_n4(k):
        for gens in sweep:
            k.echelon(gens, 4)
            k.cayley_color(4, gens)

    return {
        "echelon 2000 x (12x6)": echelon_small,
        "echelon 500 x (60x60)": echelon_wide,
        "cayley_color 20 x n=14": cayley_big,
        "exhaustive n=4 sweep": sweep_n4,
    }


def _frozen(x):
    return tuple(_frozen(y) for y in x) if isinstance(x, (list, tuple)) else x


class _Recorder:
    """Wraps a kernel module and records every result, for cross-checking."""

    def __init__(self, mod):
        self.mod, self.out = mod, []

    def echelon(self, rows, ncols):
        self.out.append(self.mod.echelon(rows, ncols))

    def cayley_color(self, n, gens):
        self.out.append(self.mod.cayley_color(n, gens))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    work = workloads(random.Random(args.seed))
    if _ckernels is None:
        print("compiled kernels not built; timing the Python fallback only")

    print(f"{'workload':<26}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, fn in work.items():
        if _ckernels is not None:
            py, cy = _Recorder(_pykernels), _Recorder(_ckernels)
            fn(py)
            fn(cy)
            if _frozen(py.out) != _frozen(cy.out):
                raise SystemExit(f"{name}: backends disagree")
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<26}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        t_cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<26}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
