"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py            # default sizes
    python benchmarks/bench_kernels.py --scale 0.1 --repeat 1
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from bqzeta.kernels import BACKENDS


def workloads(scale: float):
    N = max(1000, int(10**6 * scale))
    a = BACKENDS["python"].r2_counts(N) // 4
    values = a.astype(np.float64)
    M = max(50, int(2000 * scale))
    return [
        (f"r2_counts({N})", lambda k: k.r2_counts(N)),
        (f"divisor_class_counts({N})", lambda k: k.divisor_class_counts(N)),
        (f"convolve_i64(a, a), N={N}", lambda k: k.convolve_i64(a, a)),
        (f"dirichlet_sum(N={N}, s=3+2i)", lambda k: k.dirichlet_sum(values, 3 + 2j)),
        (f"lattice_sum({M}, 3)", lambda k: k.lattice_sum(M, 3.0)),
        (f"primes_upto({N})", lambda k: k.primes_upto(N)),
    ]


def run(scale: float = 1.0, repeat: int = 3) -> list[tuple[str, dict[str, float]]]:
    rows = []
    for name, fn in workloads(scale):
        times = {}
        for backend, module in sorted(BACKENDS.items()):
            times[backend] = min(timeit.repeat(lambda: fn(module), number=1, repeat=repeat))
        rows.append((name, times))
    return rows


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scale", type=float, default=1.0, help="problem-size multiplier")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    backends = sorted(BACKENDS)
    header = f"{'kernel':40s}" + "".join(f"{b + ' [ms]':>16s}" for b in backends)
    if len(backends) == 2:
        header += f"{'speed-up':>12s}"
    print(header)
    for name, times in run(args.scale, args.repeat):
        line = f"{name:40s}" + "".join(f"{times[b] * 1e3:16.2f}" for b in backends)
        if len(backends) == 2:
            line += f"{times['python'] / times['cython']:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
