"""Compare the numba and pure-numpy elimination paths.

    python benchmarks/bench_kernels.py [--repeat N]

Part one replays the largest integer matrices that an oracle run actually
reduces (captured by wrapping the kernel), so the sizes and sparsity are
the real ones.  Part two times whole oracle runs with each path.
"""

import argparse
import time

import numpy as np

from liesuper import _kernels as K
from liesuper import catalog, linalg, oracle
from liesuper.free import _build
from liesuper.oracle import _hopf, oracle_report, presentation_of

WORKLOADS = ["H_2", "H(1,0)+A(3|0)", "H(0,1)+A(1|4)", "H(2,0)+A(0|1)"]


def capture(tag: str, keep: int = 3) -> list[np.ndarray]:
    seen = []
    real = K.gauss_jordan

    def spy(a):
        seen.append(np.array(a, copy=True))
        return real(a)

    oracle.gauss_jordan = linalg.gauss_jordan = spy
    try:
        _hopf.cache_clear()
        oracle_report(presentation_of(catalog.parse_tag(tag), minimal=True).with_class_bound(3))
    finally:
        oracle.gauss_jordan = linalg.gauss_jordan = real
    return sorted(seen, key=lambda a: a.size, reverse=True)[:keep]


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def row(label: str, fast: float, slow: float) -> None:
    print(f"{label:<34}{fast:>11.4f}{slow:>11.4f}{slow / fast:>9.1f}x", flush=True)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed")

    K.set_numba_enabled(True)
    K.gauss_jordan(np.eye(3, dtype=np.int64))  # compile outside the timings

    print(f"{'workload':<34}{'numba [s]':>11}{'numpy [s]':>11}{'ratio':>10}")
    for tag in WORKLOADS[:2]:
        for a in capture(tag, keep=2):
            res = {}
            for flag in (True, False):
                K.set_numba_enabled(flag)
                res[flag] = best_of(lambda: K.gauss_jordan(a), args.repeat)
            row(f"kernel {a.shape[0]}x{a.shape[1]} ({tag})", res[True], res[False])
    for tag in WORKLOADS:
        P = presentation_of(catalog.parse_tag(tag), minimal=True).with_class_bound(3)
        res = {}
        for flag in (True, False):
            K.set_numba_enabled(flag)

            def run():
                _hopf.cache_clear()
                _build.cache_clear()
                oracle_report(P)

            res[flag] = best_of(run, args.repeat)
        row(f"oracle {tag}, class 3", res[True], res[False])
    K.set_numba_enabled(True)


if __name__ == "__main__":
    main()
