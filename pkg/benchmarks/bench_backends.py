"""Compare the compiled and interpreted cores on the same inputs.

Usage: python3 benchmarks/bench_backends.py [--n N] [--pure-n M] [--seed S]
"""
import argparse
import time

import numpy as np

from invgauss._backend import load_compiled, load_pure


def timed(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def workload(mod, x, p, mu, phi):
    out = np.empty_like(x)
    iters = np.empty(x.size, dtype=np.intc)
    stops = np.empty(x.size, dtype=np.intc)
    return {
        "density": lambda: mod.log_density_array(x, mu, phi, out, False),
        "cdf": lambda: mod.cdf_array(x, mu, phi, out, True, False),
        "log cdf": lambda: mod.cdf_array(x, mu, phi, out, True, True),
        "quantile": lambda: mod.quantile_array(p, mu, phi, out, iters, stops, True, False,
                                               200, 1e-14),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000, help="evaluations for the compiled core")
    ap.add_argument("--pure-n", type=int, default=5_000, help="evaluations for the interpreted core")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    mu = 10.0 ** rng.uniform(-2, 2, args.n)
    phi = 10.0 ** rng.uniform(-2, 2, args.n)
    x = mu * 10.0 ** rng.uniform(-1.5, 1.5, args.n)
    p = rng.random(args.n)

    try:
        fast = load_compiled()
    except ImportError:
        fast = None
        print("compiled core not built; timing the interpreted core only")
    slow = load_pure()
    m = min(args.pure_n, args.n)

    print(f"{'operation':<10} {'compiled /s':>14} {'interpreted /s':>16} {'speed-up':>9}")
    slow_ops = workload(slow, x[:m], p[:m], mu[:m], phi[:m])
    fast_ops = workload(fast, x, p, mu, phi) if fast else {}
    for name, run in slow_ops.items():
        slow_rate = m / timed(run)
        if fast:
            fast_rate = args.n / timed(fast_ops[name])
            print(f"{name:<10} {fast_rate:>14,.0f} {slow_rate:>16,.0f} {fast_rate / slow_rate:>8.1f}x")
        else:
            print(f"{name:<10} {'-':>14} {slow_rate:>16,.0f} {'-':>9}")


if __name__ == "__main__":
    main()
