"""Compiled kernels versus the numpy fallback.

Run with ``python3 benchmarks/bench_kernels.py``. Prints one line per kernel
with the best-of-N wall time for each backend and the speedup.
"""
import argparse
import timeit

import numpy as np

from evimit import _fallback
from evimit._backend import get_kernels


def cases(size, batch):
    rng = np.random.default_rng(0)
    rgb = rng.uniform(0, 1, (size, size, 3))
    curr, prev = rng.normal(size=(2, size, size))
    x = rng.normal(size=(batch, size, size, 6)).astype(np.float32)
    return {
        "log_luminance": lambda k: k.log_luminance(rgb, 1 / 255),
        "shifted_events": lambda k: k.shifted_events(curr, prev, 1, 1, 0.2),
        "im2col": lambda k: k.im2col(x, 4, 2),
        "col2im": lambda k: k.col2im(_fallback.im2col(x, 4, 2).copy(), x.shape, 4, 2),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=64)
    p.add_argument("--batch", type=int, default=64)
    p.add_argument("--repeat", type=int, default=7)
    args = p.parse_args(argv)
    compiled = get_kernels("compiled")
    print(f"{'kernel':<16}{'compiled ms':>13}{'numpy ms':>11}{'speedup':>9}")
    for name, fn in cases(args.size, args.batch).items():
        times = []
        for k in (compiled, _fallback):
            number = max(1, int(0.2 / max(timeit.timeit(lambda: fn(k), number=1), 1e-6)))
            best = min(timeit.repeat(lambda: fn(k), number=number, repeat=args.repeat)) / number
            times.append(best * 1e3)
        print(f"{name:<16}{times[0]:>13.3f}{times[1]:>11.3f}{times[1] / times[0]:>8.1f}x")


if __name__ == "__main__":
    main()
