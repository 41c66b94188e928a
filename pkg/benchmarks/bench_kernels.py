"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--config GF343] [--sizes 8 32 128] [--repeat 5]
"""

import argparse
import random
import timeit

from skewres import GF4, GF25, GF343, get_field
from skewres import _pykernels

try:
    from skewres import _ckernels
except ImportError:
    _ckernels = None

CONFIGS = {"GF4": GF4, "GF25": GF25, "GF343": GF343}


def _rand(R, F, n):
    out = [R.randrange(F.order) for _ in range(n)]
    out[-1] = R.randrange(1, F.order)
    return out


def bench(ctx, op, a, b, repeat, number):
    if op == "skew_mul":
        fn = lambda: ctx.skew_mul(a, b, 0, 1)  # noqa: E731
    else:
        fn = lambda: ctx.right_divmod(a, b, 1)  # noqa: E731
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config", choices=sorted(CONFIGS), default="GF343")
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 32, 128, 512])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    F = get_field(CONFIGS[args.config])
    py = _pykernels.KernelContext(F.tables, F.r)
    cy = _ckernels.KernelContext(F.tables, F.r) if _ckernels else None
    if cy is None:
        print("compiled kernels not built; timing the Python fallback only")
    R = random.Random(0)
    print(f"{'op':<13}{'n':>6}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for n in args.sizes:
        number = max(1, 20000 // (n * n) + 1)
        a, b = _rand(R, F, n), _rand(R, F, n)
        num = _rand(R, F, 2 * n)
        for op, x, y in (("skew_mul", a, b), ("right_divmod", num, b)):
            tp = bench(py, op, x, y, args.repeat, number) * 1e6
            if cy is None:
                print(f"{op:<13}{n:>6}{tp:>14.1f}{'-':>14}{'-':>10}")
                continue
            assert list(py.skew_mul(a, b, 0, 1)) == list(cy.skew_mul(a, b, 0, 1))
            tc = bench(cy, op, x, y, args.repeat, number) * 1e6
            print(f"{op:<13}{n:>6}{tp:>14.1f}{tc:>14.1f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
