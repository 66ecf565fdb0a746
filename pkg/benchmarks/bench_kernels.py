"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the two kernel implementations on the workloads that dominate the
engine: exact-rational convolution, unit inversion, the residue pair sweep,
and an end-to-end correlation-form computation.  Results are exact and
identical either way; only the wall time differs.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time
from fractions import Fraction

from hurwitzrec import _kernels, _pure

try:
    from hurwitzrec import _speed
except ImportError:
    _speed = None


def timeit(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_conv(impl, reps):
    rng = random.Random(11)
    a = [Fraction(rng.randint(-99, 99), rng.randint(1, 60)) for _ in range(64)]
    b = [Fraction(rng.randint(-99, 99), rng.randint(1, 60)) for _ in range(64)]
    return timeit(lambda: impl.conv(a, b, 127), reps)


def bench_unit_inverse(impl, reps):
    rng = random.Random(12)
    a = [Fraction(rng.randint(-20, 20), rng.randint(1, 30)) for _ in range(48)]
    a[0] = Fraction(3, 7)
    return timeit(lambda: impl.unit_inverse(a, 48), reps)


def bench_pair_sweep(impl, reps):
    rng = random.Random(13)

    def mk_terms(n):
        out = []
        for _ in range(n):
            a = rng.randint(2, 12)
            rest = tuple(
                sorted((rng.randint(2, 10) for _ in range(rng.randint(1, 4))), reverse=True)
            )
            out.append((a, rng.randint(-9, 9), rng.randint(1, 9), rest))
        return out

    table = {}
    for a in range(2, 13):
        for b in range(2, 13):
            table[(a, b)] = tuple(
                (p, rng.randint(-999, 999), rng.randint(1, 999))
                for p in range(2, 2 + (a + b) // 2)
            )
    rows = lambda a, b: table[(a, b)]
    ta, tb = mk_terms(220), mk_terms(220)

    def run():
        out = {}
        impl.pair_sweep(out, ta, tb, rows)

    return timeit(run, reps)


def bench_engine(use_speed, reps):
    # full w(3, 3): a recursion workload well past the acceptance range
    from hurwitzrec.toprec import LambertEngine, required_order

    saved = (_kernels.conv, _kernels.unit_inverse, _kernels.pair_sweep, _kernels.acc_pair)
    impl = _speed if use_speed else _pure
    _kernels.conv = impl.conv
    _kernels.unit_inverse = impl.unit_inverse
    _kernels.pair_sweep = impl.pair_sweep
    _kernels.acc_pair = impl.acc_pair
    try:
        return timeit(
            lambda: LambertEngine(order=required_order(3, 3)).w(3, 3), reps
        )
    finally:
        (_kernels.conv, _kernels.unit_inverse, _kernels.pair_sweep, _kernels.acc_pair) = saved


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="fewer repetitions")
    args = parser.parse_args()
    reps = 1 if args.quick else 3

    if _speed is None:
        print("compiled kernels are not built; nothing to compare")
        print("(build with: pip install -e . --no-build-isolation)")
        return

    rows = [
        ("conv 64x64 -> 127", bench_conv(_pure, reps), bench_conv(_speed, reps)),
        ("unit_inverse n=48", bench_unit_inverse(_pure, reps), bench_unit_inverse(_speed, reps)),
        ("pair_sweep 220x220", bench_pair_sweep(_pure, reps), bench_pair_sweep(_speed, reps)),
        ("engine w(3,3)", bench_engine(False, reps), bench_engine(True, reps)),
    ]
    print(f"{'kernel':<22} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for name, pure_t, fast_t in rows:
        print(f"{name:<22} {pure_t*1e3:>10.2f}ms {fast_t*1e3:>10.2f}ms {pure_t/fast_t:>8.1f}x")


if __name__ == "__main__":
    main()
