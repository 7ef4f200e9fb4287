"""Compare compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--orders 64 256 1024] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from starlike_area import _backend
from starlike_area.family import FamilyParams, SchwarzSpec, synthesize_from_schwarz
from starlike_area.verify import conjecture_trial


def cases(order, rng):
    a = rng.uniform(-1, 1, order + 1) + 1j * rng.uniform(-1, 1, order + 1)
    a[0] = 1.0
    a /= np.arange(1, order + 2) ** 2
    z = 0.9 * np.exp(2j * np.pi * rng.random(4096))
    N = min(order, 200)
    u = np.triu(rng.uniform(0, 1, (N, N))) + np.diag(np.arange(1, N + 1.0) ** 2)
    rhs = np.arange(1, N + 1.0)
    spec = SchwarzSpec(1j, 0.8, (0.3, -0.2 + 0.5j))
    params = FamilyParams(0.8, 1 / 3)
    k = _backend
    return {
        "reciprocal": lambda: k.kernels.reciprocal(a),
        "log1": lambda: k.kernels.log1(a),
        "exp": lambda: k.kernels.exp(a),
        "horner x4096": lambda: k.kernels.horner(a, z),
        f"back_substitute {N}": lambda: k.kernels.back_substitute(u, rhs),
        "synthesize member": lambda: synthesize_from_schwarz(spec, params, order),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--orders", type=int, nargs="+", default=[64, 256, 1024])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = _backend.available()
    if "compiled" not in backends:
        print("compiled kernels not built; only the python backend is timed")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<22}{'order':>7}" + "".join(f"{b:>14}" for b in backends) + f"{'speedup':>10}")
    for order in args.orders:
        bench = cases(order, rng)
        for name, fn in bench.items():
            times = {}
            for b in backends:
                _backend.use(b)
                number = max(1, int(0.05 / max(timeit.timeit(fn, number=1), 1e-7)))
                times[b] = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
            speed = times["python"] / times["compiled"] if "compiled" in times else float("nan")
            print(f"{name:<22}{order:>7}" + "".join(f"{times[b] * 1e3:>12.3f}ms" for b in backends) + f"{speed:>9.1f}x")
    for b in backends:
        _backend.use(b)
        t = timeit.timeit(lambda: conjecture_trial(FamilyParams(0.8, 1 / 3), [0.3, 0.6, 0.9], 200, seed=1), number=1)
        print(f"conjecture_trial 200 samples, order 256, {b}: {t:.2f}s")


if __name__ == "__main__":
    main()
