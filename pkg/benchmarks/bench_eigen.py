"""Timing comparison of the compiled and pure-Python eigensolver kernels.

Runs the tridiagonal QL path (values, then values + vectors) and the
dense Householder + QL path on the same matrices through both backends.

    python benchmarks/bench_eigen.py [--sizes 50 100 200] [--repeats 5]
"""

import argparse
import time

import numpy as np

from expwell.eigen import _pykernels

try:
    from expwell.eigen import _kernels
except ImportError:
    _kernels = None


def _test_tridiag(n):
    # first-moment style matrix: well separated, positive nodes
    k = np.arange(n, dtype=float)
    return 2.0 * k + 1.0, -np.sqrt((k[:-1] + 1.0) ** 2)


def _test_dense(n, rng):
    a = rng.standard_normal((n, n))
    return (a + a.T) / 2.0


def _time(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_tridiag(impl, n, repeats, vectors):
    diag, off = _test_tridiag(n)

    def run():
        d = diag.copy()
        e = np.zeros(n)
        e[: n - 1] = off
        z = np.eye(n) if vectors else None
        assert impl.ql_implicit_shift(d, e, z, 50 * n) >= 0

    return _time(run, repeats)


def bench_dense(impl, n, repeats, rng):
    a0 = _test_dense(n, rng)

    def run():
        a = a0.copy()
        d = np.empty(n)
        e = np.empty(n)
        impl.householder_reduce(a, d, e, None)
        assert impl.ql_implicit_shift(d, e, None, 50 * n) >= 0

    return _time(run, repeats)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled kernels not built; timing the pure-Python backend only")
    backends = [("python", _pykernels)]
    if _kernels is not None:
        backends.append(("compiled", _kernels))

    rng = np.random.default_rng(0)
    print(f"{'case':<28} {'n':>5} " + "".join(f"{name:>12}" for name, _ in backends)
          + ("     speedup" if _kernels else ""))
    cases = [
        ("tridiag QL (values)", lambda impl, n: bench_tridiag(impl, n, args.repeats, False)),
        ("tridiag QL (vectors)", lambda impl, n: bench_tridiag(impl, n, args.repeats, True)),
        ("dense Householder+QL", lambda impl, n: bench_dense(impl, n, args.repeats, rng)),
    ]
    for label, runner in cases:
        for n in args.sizes:
            times = [runner(impl, n) for _, impl in backends]
            row = f"{label:<28} {n:>5} " + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) == 2:
                row += f" {times[0] / times[1]:>10.1f}x"
            print(row)


if __name__ == "__main__":
    main()
