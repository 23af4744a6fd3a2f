"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--repeats 20]
"""
import argparse
import timeit

import numpy as np

from entroplan import kernels


def cases(rng):
    east, south = kernels.carve_maze(16, 16, rng.random(256), 0, 0, impl="python")
    probs = rng.dirichlet(np.ones(8), size=(1024, 8))
    t = 512
    return {
        "carve_maze 16x16": lambda impl: kernels.carve_maze(16, 16, rng.random(256), 0, 0, impl=impl),
        "flood_fill 16x16": lambda impl: kernels.flood_fill(east, south, 0, 0, impl=impl),
        "mark_visited b=3": lambda impl: kernels.mark_visited(np.zeros((16, 16), np.uint8), 8, 8, 3, impl=impl),
        "gae T=512": lambda impl: kernels.gae(
            rng.normal(size=t), rng.normal(size=t), rng.normal(size=t), np.zeros(t), 0.99, 0.95, impl=impl
        ),
        "lambda_returns 15x1024": lambda impl: kernels.lambda_returns(
            rng.normal(size=(15, 1024)), np.ones((15, 1024)), rng.normal(size=(16, 1024)), 0.997, 0.95, impl=impl
        ),
        "grouped_entropy 1024x8x8": lambda impl: kernels.grouped_entropy(probs, impl=impl),
    }


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=20)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    rng = np.random.default_rng(0)
    print(f"{'kernel':<26}" + "".join(f"{b:>14}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in cases(rng).items():
        times = []
        for b in backends:
            number = 5
            best = min(timeit.repeat(lambda: fn(b), number=number, repeat=args.repeats)) / number
            times.append(best)
        row = f"{name:<26}" + "".join(f"{1e6 * t:>11.1f} us" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
