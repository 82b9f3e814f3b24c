"""Time the pure-Python kernels against the compiled core.

    python benchmarks/bench_kernels.py --n 4 6 8 10 --repeat 5
"""
import argparse
import timeit

import numpy as np

from relaysimp import gen_random
from relaysimp._kernels import backends


def cases(mod, net):
    ell, r = net.arrays()
    M = mod.cut_matrix(ell, r)
    states = np.arange(0, 1 << net.n, max(1, (1 << net.n) // (net.n + 1)), dtype=np.int64)
    w = np.full(len(states), 1.0 / len(states))
    return {
        "cut_matrix": lambda: mod.cut_matrix(ell, r),
        "fd_min_cut": lambda: mod.fd_min_cut(ell, r),
        "fixed_schedule_cut_values": lambda: mod.fixed_schedule_cut_values(ell, r, states, w),
        "solve_schedule_lp": lambda: mod.solve_schedule_lp(M),
    }


def best_time(fn, repeat):
    number = 1
    # grow the loop count until one timing run takes at least 20 ms
    while timeit.timeit(fn, number=number) < 0.02 and number < 10**5:
        number *= 10
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[4, 6, 8, 10])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    mods = backends()
    if "cython" not in mods:
        print("compiled core not built; only the Python backend is timed")
    names = sorted(mods)
    print(f"{'kernel':<28}{'n':>4}" + "".join(f"{m + ' (s)':>16}" for m in names)
          + ("    speedup" if len(names) == 2 else ""))
    for n in args.n:
        net = gen_random(n, args.seed)
        timed = {m: {k: best_time(fn, args.repeat) for k, fn in cases(mods[m], net).items()}
                 for m in names}
        for kernel in timed[names[0]]:
            row = f"{kernel:<28}{n:>4}" + "".join(f"{timed[m][kernel]:>16.3e}" for m in names)
            if len(names) == 2:
                row += f"{timed['python'][kernel] / timed['cython'][kernel]:>10.1f}x"
            print(row)


if __name__ == "__main__":
    main()
