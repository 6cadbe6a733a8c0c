"""Compare the numba and numpy kernels on random rank matrices.

    python benchmarks/bench_kernels.py [--n 50 200 800] [--m 6] [--repeat 5]
"""

import argparse
import time

import numpy as np

from lexchoice import kernels


def best_of(fn, arg, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(arg)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, nargs="+", default=[50, 200, 800])
    parser.add_argument("--m", type=int, default=6)
    parser.add_argument("--ranks", type=int, default=12)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not kernels.HAS_NUMBA:
        print("numba unavailable (or LEXCHOICE_DISABLE_JIT set): numpy timings only")
    rng = np.random.default_rng(args.seed)

    # compile outside the timed region
    if kernels.HAS_NUMBA:
        warm = rng.integers(0, args.ranks, size=(4, args.m))
        kernels.degree_matrix_numba(warm)
        kernels.transitivity_violation_numba(kernels.degree_matrix_numba(warm) >= 0)

    print(f"{'kernel':<14}{'n':>6}{'numpy s':>12}{'numba s':>12}{'speedup':>10}")
    for n in args.n:
        values = rng.integers(0, args.ranks, size=(n, args.m))
        D = kernels.degree_matrix_numpy(values)
        weak = D >= 0
        cases = [("degree_matrix", kernels.degree_matrix_numpy,
                  getattr(kernels, "degree_matrix_numba", None), values)]
        if n <= 400:  # numpy triple scan materialises n**3 booleans
            cases.append(("transitivity", kernels.transitivity_violation_numpy,
                          getattr(kernels, "transitivity_violation_numba", None), weak))
        for name, np_fn, nb_fn, arg in cases:
            t_np = best_of(np_fn, arg, args.repeat)
            if nb_fn is None:
                print(f"{name:<14}{n:>6}{t_np:>12.5f}{'-':>12}{'-':>10}")
                continue
            if name == "degree_matrix":
                assert np.array_equal(np_fn(arg), nb_fn(arg))
            else:
                assert np_fn(arg) == nb_fn(arg)
            t_nb = best_of(nb_fn, arg, args.repeat)
            print(f"{name:<14}{n:>6}{t_np:>12.5f}{t_nb:>12.5f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
