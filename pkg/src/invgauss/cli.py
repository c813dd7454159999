"""Command-line front end.

Subcommands ``density``, ``cdf``, ``quantile`` and ``sample`` evaluate the
library.  ``selftest`` checks accuracy identities and ``bench`` times
quantile evaluation.  Exit codes: 0 success, 1 selftest failure,
2 bad arguments or input.
"""
from __future__ import annotations

import argparse
import decimal
import json
import math
import sys
import time
import warnings
from decimal import Decimal

import numpy as np

from . import __version__
from ._backend import BACKEND, core, load_pure
from .api import RecyclingWarning, map_cdf, map_density, map_quantile, recycle
from .model import IgParams, resolve_dispersion
from .quantile import QuantileOptions
from .sampling import ALGORITHM_ID, RngStream, sample

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_USAGE = 2

P_GRID = (1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.1, 0.5, 0.9, 0.99, 0.999, 0.9999, 0.99999, 0.999999)
ROUNDTRIP_P_TOL = 2.3e-16
ROUNDTRIP_Q_TOL = 5e-16
IDENTITY_TOL = 5e-15
EPS = 2.0 ** -52


class UsageError(Exception):
    """Bad command-line input; reported with exit code 2."""


def parse_token(token: str, position: int) -> float:
    """Parse one numeric token; ``NA``/``nan`` are missing, ``Inf`` allowed."""
    t = token.strip()
    low = t.lower()
    if low in ("na", "nan"):
        return math.nan
    if low in ("inf", "+inf", "infinity"):
        return math.inf
    if low in ("-inf", "-infinity"):
        return -math.inf
    try:
        return float(t)
    except ValueError:
        raise UsageError(f"non-numeric token {token!r} at position {position}") from None


def parse_tokens(tokens) -> np.ndarray:
    return np.array([parse_token(t, i + 1) for i, t in enumerate(tokens)], dtype=float)


def read_input(path: str) -> np.ndarray:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read input file {path}: {exc.strerror}") from None
    return parse_tokens(text.split())


def format_value(v: float, digits: int) -> str:
    if math.isnan(v):
        return "NA"
    if math.isinf(v):
        return "Inf" if v > 0 else "-Inf"
    if digits >= 17:
        # shortest string that reads back to the same double
        text = repr(float(v))
        return text[:-2] if text.endswith(".0") else text
    return f"{v:.{digits}g}"


def _json_value(v: float):
    return float(v) if math.isfinite(v) else format_value(v, 17)


def emit(records, fmt: str, digits: int, out=None):
    """Write ``(input, mean, dispersion, result)`` records."""
    out = out or sys.stdout
    if fmt == "plain":
        for rec in records:
            print(format_value(rec[3], digits), file=out)
    elif fmt == "csv":
        print("input,mean,dispersion,result", file=out)
        for rec in records:
            print(",".join(format_value(v, 17) for v in rec), file=out)
    else:
        rows = [dict(zip(("input", "mean", "dispersion", "result"), map(_json_value, rec)))
                for rec in records]
        json.dump(rows, out, indent=1)
        print(file=out)


def _param_group(sub):
    sub.add_argument("--mean", nargs="+", default=["1"], metavar="MU")
    grp = sub.add_mutually_exclusive_group()
    grp.add_argument("--dispersion", nargs="+", metavar="PHI")
    grp.add_argument("--shape", nargs="+", metavar="LAMBDA", help="shape = 1 / dispersion")


def _output_group(sub, digits=4):
    sub.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    sub.add_argument("--digits", type=int, default=digits,
                     help="significant digits in plain output")


def _tail_group(sub):
    grp = sub.add_mutually_exclusive_group()
    grp.add_argument("--lower-tail", dest="lower_tail", action="store_true", default=True)
    grp.add_argument("--upper-tail", dest="lower_tail", action="store_false")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invgauss",
        description="Inverse Gaussian distribution: density, cdf, quantile, sampling.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    for name, flag, helptext in (
        ("density", "--x", "density at each x"),
        ("cdf", "--q", "tail probability at each q"),
        ("quantile", "--p", "quantile at each probability p"),
    ):
        sub = subs.add_parser(name, help=helptext)
        sub.add_argument(flag, dest="values", nargs="+", metavar=flag[2:].upper())
        sub.add_argument("--input", help="file of whitespace-separated values")
        _param_group(sub)
        if name != "density":
            _tail_group(sub)
        sub.add_argument("--log", action="store_true",
                         help="log scale (log-density, or log probabilities)")
        if name == "quantile":
            sub.add_argument("--maxit", type=int, default=200)
            sub.add_argument("--tol", type=float, default=1e-14)
        _output_group(sub)

    sub = subs.add_parser("sample", help="random variates")
    sub.add_argument("--n", type=int, default=1)
    sub.add_argument("--seed", type=int, default=None)
    _param_group(sub)
    _output_group(sub, digits=17)

    sub = subs.add_parser("selftest", help="accuracy self-checks")
    sub.add_argument("--cases", type=int, default=100, help="random identity cases")
    sub.add_argument("--seed", type=int, default=20160101)
    sub.add_argument("--oracle-report", help="JSON report from the oracle harness")

    sub = subs.add_parser("bench", help="quantile throughput")
    sub.add_argument("--n", type=int, default=1_000_000)
    sub.add_argument("--seed", type=int, default=1)
    sub.add_argument("--compare", action="store_true",
                     help="also time the interpreted core on a subsample")
    sub.add_argument("--compare-n", type=int, default=20_000)
    _param_group(sub)
    return parser


def _params(args):
    mean = parse_tokens(args.mean)
    if args.shape is not None:
        with np.errstate(divide="ignore"):
            return mean, resolve_dispersion(shape=parse_tokens(args.shape))
    if args.dispersion is not None:
        return mean, parse_tokens(args.dispersion)
    return mean, np.array([1.0])


def _values(args):
    vals = parse_tokens(args.values) if args.values else np.empty(0)
    if args.input:
        vals = np.concatenate([vals, read_input(args.input)])
    if args.values is None and not args.input:
        raise UsageError("no input values given")
    return vals


def cmd_evaluate(args) -> int:
    x = _values(args)
    mean, disp = _params(args)
    if args.command == "density":
        res = map_density(x, mean, disp, log=args.log)
    elif args.command == "cdf":
        res = map_cdf(x, mean, disp, lower_tail=args.lower_tail, log_p=args.log)
    else:
        opts = QuantileOptions(maxit=args.maxit, tol=args.tol)
        res = map_quantile(x, mean, disp, lower_tail=args.lower_tail, log_p=args.log,
                           options=opts)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RecyclingWarning)
        _, (xs, mus, phis) = recycle(x, mean, disp)
    emit(zip(xs.tolist(), mus.tolist(), phis.tolist(), res.values.tolist()),
         args.format, args.digits)
    return EXIT_OK


def cmd_sample(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    mean, disp = _params(args)
    if mean.size != 1 or disp.size != 1:
        raise UsageError("sample takes a single mean and dispersion")
    params = IgParams(mean[0], disp[0])
    draws = sample(args.n, params, RngStream(args.seed))
    emit(((float(i + 1), params.mean, params.dispersion, v) for i, v in enumerate(draws.tolist())),
         args.format, args.digits)
    return EXIT_OK


def identity_cases(n: int, seed: int):
    """Fixed desk cases plus seeded random ``(mu, phi, q1)`` triples.

    Random cases draw the pivotal value from [0.5, 50] and take ``q1`` as
    the smaller root, so both tails are well away from underflow.
    """
    cases = [(1.5, 0.7, 0.1), (1.5, 0.7, 0.01)]
    rng = np.random.default_rng(seed)
    for _ in range(n):
        mu = 10.0 ** rng.uniform(-2, 2)
        phi = 10.0 ** rng.uniform(-2, 2)
        z = rng.uniform(0.5, 50.0)
        s = phi * mu * z
        q1 = mu / (1.0 + 0.5 * s + math.sqrt(s) * math.sqrt(1.0 + 0.25 * s))
        cases.append((mu, phi, q1))
    return cases


def identity_pair(mu: float, phi: float, q1: float):
    """Pivotal value ``z`` and conjugate root ``q2`` for ``q1``.

    Both are computed in 50-digit decimal arithmetic and rounded once, with
    ``q2`` taken as the larger root for the rounded ``z``.
    """
    with decimal.localcontext() as ctx:
        ctx.prec = 50
        m, f, q = Decimal(mu), Decimal(phi), Decimal(q1)
        z = float((q - m) ** 2 / (f * m * m * q))
        b = 2 * m + f * m * m * Decimal(z)
        q2 = float((b + (b * b - 4 * m * m).sqrt()) / 2)
    return z, q2


def identity_error(mu: float, phi: float, q1: float):
    """Relative gap between the two-tail sum and the chi-square tail.

    Returns ``(error, tolerance)``.  The tolerance adds the effect of
    rounding ``q1`` and ``q2`` to double, which is large when the
    distribution is narrow.
    """
    z, q2 = identity_pair(mu, phi, q1)
    lhs = core.cdf(q1, mu, phi, True, False) + core.cdf(q2, mu, phi, False, False)
    ref = core.chisq1_sf(z, False)
    swing = q1 * core.density(q1, mu, phi) + q2 * core.density(q2, mu, phi)
    return abs(lhs - ref) / ref, IDENTITY_TOL + 2 * EPS * swing / ref


def roundtrip_errors(mu: float = 1.0, phi: float = 1.0):
    """Max ``|p - F(Q(p))|`` and max ``|Q(F(q)) - q| / q`` over the grid."""
    qs = [core.quantile(p, mu, phi, True, False, 200, 1e-14) for p in P_GRID]
    perr = max(abs(p - core.cdf(q, mu, phi, True, False)) for p, q in zip(P_GRID, qs))
    qerr = max(abs(core.quantile(core.cdf(q, mu, phi, True, False), mu, phi, True, False,
                                 200, 1e-14) - q) / q for q in qs)
    return perr, qerr


def cmd_selftest(args) -> int:
    ok = True
    checks = [identity_error(*c) for c in identity_cases(args.cases, args.seed)]
    desk = max(e for e, _ in checks[:2])
    rand = max((e / t for e, t in checks[2:]), default=0.0)
    print(f"backend: {BACKEND}")
    print(f"chi-square identity, desk cases: max rel error {desk:.3e} (tol {IDENTITY_TOL:.1e})")
    print(f"chi-square identity, {len(checks) - 2} random cases: max error/tolerance {rand:.3f} "
          f"(tol {IDENTITY_TOL:.1e} plus input rounding)")
    ok &= desk <= IDENTITY_TOL and rand <= 1.0
    perr, qerr = roundtrip_errors()
    print(f"roundtrip |p - F(Q(p))|: max {perr:.3e} (tol {ROUNDTRIP_P_TOL:.1e})")
    print(f"roundtrip |Q(F(q)) - q|/q: max {qerr:.3e} (tol {ROUNDTRIP_Q_TOL:.1e})")
    ok &= perr <= ROUNDTRIP_P_TOL and qerr <= ROUNDTRIP_Q_TOL
    if args.oracle_report:
        try:
            with open(args.oracle_report) as fh:
                report = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read oracle report {args.oracle_report}: {exc}") from None
        worst = float(report["max_rel_error"])
        print(f"oracle report: {len(report['cases'])} cases, max rel error {worst:.3e}")
        ok &= worst <= IDENTITY_TOL
    print("selftest " + ("passed" if ok else "FAILED"))
    return EXIT_OK if ok else EXIT_SELFTEST


def _time_quantiles(mod, p, mu, phi):
    out = np.empty_like(p)
    iters = np.empty(p.size, dtype=np.intc)
    stops = np.empty(p.size, dtype=np.intc)
    t0 = time.perf_counter()
    mod.quantile_array(p, mu, phi, out, iters, stops, True, False, 200, 1e-14)
    return time.perf_counter() - t0, iters


def cmd_bench(args) -> int:
    if args.n <= 0:
        raise UsageError("--n must be positive")
    mean, disp = _params(args)
    gen = np.random.default_rng(args.seed)
    p = gen.random(args.n)
    _, (p, mu, phi) = recycle(p, mean, disp)
    secs, iters = _time_quantiles(core, p, mu, phi)
    print(f"backend: {BACKEND}")
    print(f"{args.n} quantiles in {secs:.3f} s: {args.n / secs:,.0f} per second, "
          f"mean {iters.mean():.2f} Newton steps")
    if args.compare:
        m = min(args.compare_n, args.n)
        pure_secs, _ = _time_quantiles(load_pure(), p[:m], mu[:m], phi[:m])
        rate = m / pure_secs
        print(f"interpreted core: {m} quantiles in {pure_secs:.3f} s: {rate:,.0f} per second "
              f"(speed-up {(args.n / secs) / rate:.1f}x)")
    return EXIT_OK


COMMANDS = {
    "density": cmd_evaluate,
    "cdf": cmd_evaluate,
    "quantile": cmd_evaluate,
    "sample": cmd_sample,
    "selftest": cmd_selftest,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"invgauss {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
