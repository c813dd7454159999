# cython: language_level=3, cdivision=True, boundscheck=False, wraparound=False, initializedcheck=False
"""Scalar numerical core for the inverse Gaussian distribution.

Written in Cython pure-Python mode: the same source runs under CPython
and compiles to the ``invgauss._core`` extension.  Every function here
works on plain doubles; array entry points loop over 1-d float64 views.
"""
import cython
from cython.cimports.libc.math import (
    exp, expm1, fabs, hypot, isinf, isnan, lgamma, log, log1p, sqrt,
)

COMPILED = cython.compiled

INF = cython.declare(cython.double, float("inf"))
NAN = cython.declare(cython.double, float("nan"))
DBL_MIN = cython.declare(cython.double, 2.2250738585072014e-308)
_SPLITTER = cython.declare(cython.double, 134217729.0)
_Z_CF = cython.declare(cython.double, 3.0)
_TABLE_LO = cython.declare(cython.double, -1.0)
_TABLE_INV_STEP = cython.declare(cython.double, 16.0)
_TABLE_N = cython.declare(cython.int, 65)

# case codes shared with ``invgauss.model.CaseTag``
LEFT_LIMIT = cython.declare(cython.int, 0)
RIGHT_LIMIT = cython.declare(cython.int, 1)
SPIKE_AT_MEAN = cython.declare(cython.int, 2)
SPIKE_AT_ZERO = cython.declare(cython.int, 3)
INVERSE_CHISQUARE = cython.declare(cython.int, 4)
REGULAR = cython.declare(cython.int, 5)
INVALID = cython.declare(cython.int, 6)
MISSING = cython.declare(cython.int, 7)

# Newton stop codes shared with ``invgauss.quantile.StopReason``
STOP_NONE = cython.declare(cython.int, 0)
STOP_TOLERANCE = cython.declare(cython.int, 1)
STOP_SIGN_CHANGE = cython.declare(cython.int, 2)
STOP_MAX_ITER = cython.declare(cython.int, 3)

# Python-visible copies of the codes
CASE_CODES = {
    "LEFT_LIMIT": LEFT_LIMIT, "RIGHT_LIMIT": RIGHT_LIMIT,
    "SPIKE_AT_MEAN": SPIKE_AT_MEAN, "SPIKE_AT_ZERO": SPIKE_AT_ZERO,
    "INVERSE_CHISQUARE": INVERSE_CHISQUARE, "REGULAR": REGULAR,
    "INVALID": INVALID, "MISSING": MISSING,
}
STOP_CODES = {
    "NONE": STOP_NONE, "TOLERANCE": STOP_TOLERANCE,
    "SIGN_CHANGE": STOP_SIGN_CHANGE, "MAX_ITER": STOP_MAX_ITER,
}

# --- generated by tools/gen_tables.py ---
_LOG_SQRT_2PI = cython.declare(cython.double, 0.9189385332046728)
_INV_SQRT_2PI = cython.declare(cython.double, 0.3989422804014327)
_INV_SQRT_2PI_LO = cython.declare(cython.double, -2.49232720227773e-17)
_SQRT_2PI = cython.declare(cython.double, 2.5066282746310007)
_LOG_PI = cython.declare(cython.double, 1.1447298858494002)
_LN2 = cython.declare(cython.double, 0.6931471805599453)
_MILLS_R = cython.declare(cython.double[65], [
    3.4770518117036944,
    3.2121085202385324,
    2.974446534599346,
    2.760754582597662,
    2.5681717549665746,
    2.394220671899879,
    2.2367512937134175,
    2.0938935767151805,
    1.9640174953579939,
    1.845699212201463,
    1.7376923896570995,
    1.6389038111465684,
    1.548372621547658,
    1.4652526135589392,
    1.3887970826457579,
    1.3183458523761462,
    1.2533141373155003,
    1.1931829647319152,
    1.1374909212036046,
    1.0858270274680037,
    1.0378245758537268,
    0.9931557904881572,
    0.9515271920712067,
    0.9126755670832122,
    0.8763644564536923,
    0.84238109145213,
    0.8105337152790304,
    0.7806492378708634,
    0.7525711790634081,
    0.7261578617139919,
    0.7012808218544301,
    0.6778234075911775,
    0.6556795424187984,
    0.6347526319769262,
    0.6149545961509297,
    0.5962050108690213,
    0.5784303460476311,
    0.5615632879362914,
    0.545542135658217,
    0.5303102630712526,
    0.5158156382179634,
    0.502010393620417,
    0.48885044152757373,
    0.47629512896051,
    0.4643069280394422,
    0.4528511576306266,
    0.44189573283260003,
    0.43141093924000323,
    0.4213692292880545,
    0.41174503829897713,
    0.4025146181296721,
    0.3936558865630575,
    0.3851482907984346,
    0.3769726835829615,
    0.3691112106902634,
    0.3615472085963405,
    0.35426511132979366,
    0.34725036558519645,
    0.3404893532870847,
    0.3339693208791821,
    0.32767831469055203,
    0.3216051217986081,
    0.31573921586941,
    0.3100707075093594,
    0.3045902987101033,
])
_MILLS_D = cython.declare(cython.double[65], [
    -4.477051811703695,
    -4.011351737723624,
    -3.6026407177744275,
    -3.2431130983606007,
    -2.926128816224931,
    -2.646026711931167,
    -2.397969558570886,
    -2.177815136902289,
    -1.982008747678997,
    -1.8074934053381402,
    -1.6516346461214124,
    -1.5121574409833027,
    -1.3870931553869146,
    -1.2747348650423012,
    -1.1735996353307196,
    -1.0823966157735092,
    -1.0,
    -0.9254260647042553,
    -0.8578136348495494,
    -0.7964074323497493,
    -0.7405438560365682,
    -0.6896388154724509,
    -0.6431773029732974,
    -0.6007044394010946,
    -0.5618177717731538,
    -0.5261606360581769,
    -0.493416427950606,
    -0.46330364896378146,
    -0.43557161570244396,
    -0.40999673735738157,
    -0.3863792808773737,
    -0.36454055538327107,
    -0.34432045758120156,
    -0.3255753285245158,
    -0.3081760793302041,
    -0.2920065495930372,
    -0.27696206744046115,
    -0.2629481845836175,
    -0.24987956346995174,
    -0.2376789968350743,
    -0.22627654267305497,
    -0.2156087599680984,
    -0.20561803251769264,
    -0.19625196987913932,
    -0.1874628759309762,
    -0.17920727679448925,
    -0.17144550093887498,
    -0.1641413052224937,
    -0.15726154142389107,
    -0.15077585850835967,
    -0.14465643647444684,
    -0.13887774814331177,
    -0.1334163457035221,
    -0.1282506692144016,
    -0.12336087461062437,
    -0.11872867904642008,
    -0.11433722167551583,
    -0.11017093818793403,
    -0.10621544762140273,
    -0.10245745013719823,
    -0.09888463460098185,
    -0.09548559494141469,
    -0.09224975437544616,
    -0.08916729669125677,
    -0.08622910386969011,
])
_GL_X = cython.declare(cython.double[6], [
    0.1252334085114689,
    0.3678314989981802,
    0.5873179542866175,
    0.7699026741943047,
    0.9041172563704748,
    0.9815606342467192,
])
_GL_W = cython.declare(cython.double[6], [
    0.2491470458134027,
    0.23349253653835464,
    0.20316742672306565,
    0.1600783285433461,
    0.10693932599531888,
    0.04717533638651202,
])
# --- end generated ---

# Acklam's rational approximation to the normal quantile
_QA = cython.declare(cython.double[6], [
    -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
    1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00,
])
_QB = cython.declare(cython.double[5], [
    -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
    6.680131188771972e+01, -1.328068155288572e+01,
])
_QC = cython.declare(cython.double[6], [
    -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
    -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00,
])
_QD = cython.declare(cython.double[4], [
    7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
    3.754408661907416e+00,
])
_Q_LOW = cython.declare(cython.double, 0.02425)


# ---------------------------------------------------------------------------
# libm wrappers.  CPython's math module raises where C returns inf/nan, so
# the interpreted build maps those cases by hand.

@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _log(x: cython.double) -> cython.double:
    if cython.compiled:
        return log(x)
    if x > 0.0:
        return log(x)
    if x == 0.0:
        return -INF
    return NAN


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _exp(x: cython.double) -> cython.double:
    if cython.compiled:
        return exp(x)
    if x > 709.0:
        return INF if x > 709.782712893384 else exp(x)
    return exp(x)


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _log1p(x: cython.double) -> cython.double:
    if cython.compiled:
        return log1p(x)
    if x > -1.0:
        return log1p(x)
    if x == -1.0:
        return -INF
    return NAN


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _expm1(x: cython.double) -> cython.double:
    if cython.compiled:
        return expm1(x)
    if x > 709.0:
        return INF if x > 709.782712893384 else expm1(x)
    return expm1(x)


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _sqrt(x: cython.double) -> cython.double:
    if cython.compiled:
        return sqrt(x)
    if x >= 0.0:
        return sqrt(x)
    return NAN


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _lgamma(x: cython.double) -> cython.double:
    if cython.compiled:
        return lgamma(x)
    if x > 0.0:
        return lgamma(x)
    return INF


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _div(a: cython.double, b: cython.double) -> cython.double:
    # IEEE division for the interpreted build
    if cython.compiled:
        return a / b
    if b != 0.0:
        return a / b
    if isnan(a) or a == 0.0:
        return NAN
    if (a > 0.0) == (str(b)[0] != "-"):
        return INF
    return -INF


@cython.ccall
def log1p_exact(x: cython.double) -> cython.double:
    """``log(1 + x)`` without cancellation; ``-inf`` at -1, NaN below."""
    return _log1p(x)


@cython.ccall
def expm1_exact(x: cython.double) -> cython.double:
    """``exp(x) - 1`` without cancellation."""
    return _expm1(x)


# ---------------------------------------------------------------------------
# double-double arithmetic

@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _two_sum(a: cython.double, b: cython.double) -> tuple[cython.double, cython.double]:
    s: cython.double = a + b
    bb: cython.double = s - a
    return s, (a - (s - bb)) + (b - bb)


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _fast_two_sum(a: cython.double, b: cython.double) -> tuple[cython.double, cython.double]:
    s: cython.double = a + b
    return s, b - (s - a)


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _two_prod(a: cython.double, b: cython.double) -> tuple[cython.double, cython.double]:
    p: cython.double = a * b
    t: cython.double = _SPLITTER * a
    ah: cython.double = t - (t - a)
    al: cython.double = a - ah
    t = _SPLITTER * b
    bh: cython.double = t - (t - b)
    bl: cython.double = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _dd_mul_d(ah: cython.double, al: cython.double,
              b: cython.double) -> tuple[cython.double, cython.double]:
    p: cython.double
    e: cython.double
    p, e = _two_prod(ah, b)
    return _fast_two_sum(p, e + al * b)


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _dd_mul(ah: cython.double, al: cython.double,
            bh: cython.double, bl: cython.double) -> tuple[cython.double, cython.double]:
    p: cython.double
    e: cython.double
    p, e = _two_prod(ah, bh)
    return _fast_two_sum(p, e + (ah * bl + al * bh))


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _dd_div(ah: cython.double, al: cython.double,
            bh: cython.double, bl: cython.double) -> tuple[cython.double, cython.double]:
    q1: cython.double = ah / bh
    ph: cython.double
    pl: cython.double
    sh: cython.double
    sl: cython.double
    ph, pl = _dd_mul_d(bh, bl, q1)
    sh, sl = _two_sum(ah, -ph)
    sl = sl - pl + al
    return _fast_two_sum(q1, (sh + sl) / bh)


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _dd_sqrt(ah: cython.double, al: cython.double) -> cython.double:
    # sqrt of a double-double, rounded to double
    s: cython.double = sqrt(ah)
    if s == 0.0:
        return 0.0
    ph: cython.double
    pl: cython.double
    ph, pl = _two_prod(s, s)
    return s + ((ah - ph) - pl + al) / (2.0 * s)


# ---------------------------------------------------------------------------
# Mills ratio R(x) = (1 - Phi(x)) / phi(x) and friends

@cython.cfunc
@cython.exceptval(check=False)
def _mills_table(x: cython.double) -> tuple[cython.double, cython.double]:
    # Taylor expansion about the nearest table center, valid on [-1, 3].
    # Returns (R(x), 1 - x R(x)).
    j: cython.int = cython.cast(cython.int, (x - _TABLE_LO) * _TABLE_INV_STEP + 0.5)
    if j < 0:
        j = 0
    elif j > _TABLE_N - 1:
        j = _TABLE_N - 1
    c: cython.double = _TABLE_LO + j / _TABLE_INV_STEP
    t: cython.double = x - c
    a_prev: cython.double = _MILLS_R[j]
    a_cur: cython.double = _MILLS_D[j]
    a_next: cython.double
    tp: cython.double = t
    tail: cython.double = a_cur * t
    slope: cython.double = a_cur
    term: cython.double
    k: cython.int
    dterm: cython.double
    for k in range(1, 30):
        a_next = (c * a_cur + a_prev) / (k + 1)
        dterm = (k + 1) * a_next * tp
        slope += dterm
        tp *= t
        term = a_next * tp
        tail += term
        a_prev = a_cur
        a_cur = a_next
        if fabs(dterm) < 1e-18 and fabs(term) < 1e-19:
            break
    return _MILLS_R[j] + tail, -slope


@cython.cfunc
@cython.exceptval(check=False)
def _mills_cf(x: cython.double) -> cython.double:
    # bottom-up continued fraction, x >= 3
    n: cython.int = cython.cast(cython.int, 10.0 + 600.0 / (x * x))
    v: cython.double = x
    k: cython.int
    for k in range(n, 0, -1):
        v = x + k / v
    return 1.0 / v


@cython.cfunc
@cython.exceptval(check=False)
def _mills(x: cython.double) -> cython.double:
    r: cython.double
    c1: cython.double
    e_hi: cython.double
    e_lo: cython.double
    if isnan(x):
        return x
    if x >= _Z_CF:
        if isinf(x):
            return 0.0
        return _mills_cf(x)
    if x >= _TABLE_LO:
        r, c1 = _mills_table(x)
        return r
    # reflection: R(x) = sqrt(2 pi) exp(x^2/2) - R(-x)
    e_hi, e_lo = _half_square(x)
    return _SQRT_2PI * (_exp(e_hi) * (1.0 + e_lo)) - _mills(-x)


@cython.ccall
def mills_ratio(x: cython.double) -> cython.double:
    """Mills ratio ``R(x) = (1 - Phi(x)) / phi(x)`` to near machine precision."""
    return _mills(x)


@cython.cfunc
@cython.exceptval(check=False)
def _cf_diff(z: cython.double, h: cython.double) -> tuple[cython.double, cython.double, cython.double]:
    # R(z) - R(z + h) for z >= 3 as D / (Vz Vx), returned as parts
    x: cython.double = z + h
    n: cython.int = cython.cast(cython.int, 10.0 + 600.0 / (z * z))
    vz: cython.double = z
    vx: cython.double = x
    d: cython.double = h
    k: cython.int
    for k in range(n, 0, -1):
        d = h - k * ((d / vz) / vx)
        vz = z + k / vz
        vx = x + k / vx
    return d, vz, vx


@cython.cfunc
@cython.exceptval(check=False)
def _gl_c1(a: cython.double, w: cython.double) -> cython.double:
    # integral of 1 - t R(t) over [a, a + w] inside the table range
    n: cython.int = 1
    while n < w:
        n += 1
    pw: cython.double = w / n
    half: cython.double = 0.5 * pw
    total: cython.double = 0.0
    acc: cython.double
    mid: cython.double
    lo_v: cython.double
    hi_v: cython.double
    r: cython.double
    p: cython.int
    i: cython.int
    for p in range(n):
        mid = a + (p * pw + half)
        acc = 0.0
        for i in range(6):
            r, lo_v = _mills_table(mid - half * _GL_X[i])
            r, hi_v = _mills_table(mid + half * _GL_X[i])
            acc += _GL_W[i] * (lo_v + hi_v)
        total += acc * half
    return total


@cython.cfunc
@cython.exceptval(check=False)
def _mills_diff(z: cython.double, h: cython.double) -> cython.double:
    # R(z) - R(z + h) for z >= -1, h > 0 without cancellation
    d: cython.double
    vz: cython.double
    vx: cython.double
    gap: cython.double
    if isinf(h):
        return _mills(z)
    if z >= _Z_CF:
        d, vz, vx = _cf_diff(z, h)
        return (d / vz) / vx
    gap = _Z_CF - z
    if h <= gap:
        return _gl_c1(z, h)
    d, vz, vx = _cf_diff(_Z_CF, h - gap)
    return _gl_c1(z, gap) + (d / vz) / vx


@cython.cfunc
@cython.exceptval(check=False)
def _log_mills_diff(z: cython.double, h: cython.double) -> cython.double:
    d: cython.double
    vz: cython.double
    vx: cython.double
    if z >= _Z_CF and not isinf(h):
        d, vz, vx = _cf_diff(z, h)
        return _log(d) - _log(vz) - _log(vx)
    return _log(_mills_diff(z, h))


@cython.ccall
def mills_diff(z: cython.double, h: cython.double) -> cython.double:
    """``R(z) - R(z + h)`` for ``z >= -1`` and ``h >= 0`` without cancellation."""
    if isnan(z) or isnan(h) or z < -1.0 or h < 0.0:
        return NAN
    if h == 0.0 or isinf(z):
        return 0.0
    return _mills_diff(z, h)


# ---------------------------------------------------------------------------
# Gaussian factor exp(-E) / sqrt(2 pi) times a positive scale

@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _gauss(e_hi: cython.double, e_lo: cython.double, s: cython.double) -> cython.double:
    ph: cython.double
    pl: cython.double
    if e_hi < 708.0:
        # s / sqrt(2 pi) kept as a double-double until the final product
        ph, pl = _two_prod(s, _INV_SQRT_2PI)
        pl += s * _INV_SQRT_2PI_LO
        return exp(-e_hi) * (ph + (pl - ph * e_lo))
    return _exp((-e_hi - _LOG_SQRT_2PI) + (_log(s) - e_lo))


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _log_gauss(e_hi: cython.double, e_lo: cython.double, log_s: cython.double) -> cython.double:
    return (-e_hi - _LOG_SQRT_2PI) + (log_s - e_lo)


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _half_square(t: cython.double) -> tuple[cython.double, cython.double]:
    # t^2 / 2 as a double-double (exact halving)
    p: cython.double
    e: cython.double
    if fabs(t) > 1e150:
        return 0.5 * t * t, 0.0
    p, e = _two_prod(t, t)
    return 0.5 * p, 0.5 * e


# ---------------------------------------------------------------------------
# standard normal

@cython.cfunc
@cython.exceptval(check=False)
def _norm_logcdf(t: cython.double) -> cython.double:
    # log Phi(t)
    e_hi: cython.double
    e_lo: cython.double
    if isnan(t):
        return t
    if t == -INF:
        return -INF
    if t == INF:
        return 0.0
    e_hi, e_lo = _half_square(t)
    if t <= 1.0:
        return _log_gauss(e_hi, e_lo, _log(_mills(-t)))
    return _log1p(-_gauss(e_hi, e_lo, _mills(t)))


@cython.cfunc
@cython.exceptval(check=False)
def _norm_cdf(t: cython.double) -> cython.double:
    # Phi(t)
    e_hi: cython.double
    e_lo: cython.double
    if isnan(t):
        return t
    if t == -INF:
        return 0.0
    if t == INF:
        return 1.0
    e_hi, e_lo = _half_square(t)
    if t < 0.0:
        return _gauss(e_hi, e_lo, _mills(-t))
    return 1.0 - _gauss(e_hi, e_lo, _mills(t))


@cython.ccall
def norm_logcdf(z: cython.double, lower_tail: cython.bint = True) -> cython.double:
    """Log of the standard normal cdf (``lower_tail``) or survival function."""
    return _norm_logcdf(z if lower_tail else -z)


@cython.ccall
def norm_cdf(z: cython.double, lower_tail: cython.bint = True) -> cython.double:
    """Standard normal cdf (``lower_tail``) or survival function."""
    return _norm_cdf(z if lower_tail else -z)


@cython.cfunc
@cython.exceptval(check=False)
def _canonical_log_prob(p: cython.double, lower: cython.bint,
                        log_p: cython.bint) -> tuple[cython.double, cython.bint]:
    # Map a probability to (log q, lower') where q <= 1/2 is the mass in the
    # tail lower'.  Returns NaN for inputs outside the domain.
    if log_p:
        if not p <= 0.0:
            return NAN, lower
        if p > -_LN2:
            return _log(-_expm1(p)), not lower
        return p, lower
    if not (p >= 0.0 and p <= 1.0):
        return NAN, lower
    if p > 0.5:
        return _log(1.0 - p), not lower
    return _log(p), lower


@cython.cfunc
@cython.exceptval(check=False)
def _norm_quantile_lower(lp: cython.double) -> cython.double:
    # x <= 0 with log Phi(x) = lp, lp <= log(1/2)
    x: cython.double
    q: cython.double
    r: cython.double
    u: cython.double
    lc: cython.double
    p: cython.double
    it: cython.int
    if lp == -INF:
        return -INF
    p = _exp(lp)
    if p == 0.5:
        return 0.0
    if p < _Q_LOW:
        q = _sqrt(-2.0 * lp)
        x = ((((( _QC[0] * q + _QC[1]) * q + _QC[2]) * q + _QC[3]) * q + _QC[4]) * q + _QC[5]) / \
            ((((_QD[0] * q + _QD[1]) * q + _QD[2]) * q + _QD[3]) * q + 1.0)
    else:
        q = p - 0.5
        r = q * q
        x = ((((( _QA[0] * r + _QA[1]) * r + _QA[2]) * r + _QA[3]) * r + _QA[4]) * r + _QA[5]) * q / \
            (((((_QB[0] * r + _QB[1]) * r + _QB[2]) * r + _QB[3]) * r + _QB[4]) * r + 1.0)
    # Halley refinement on the log scale
    for it in range(3):
        lc = _norm_logcdf(x)
        u = -_mills(-x) * _expm1(lp - lc)
        if isnan(u) or isinf(u):
            break
        u = u / (1.0 + 0.5 * x * u)
        x -= u
        if fabs(u) <= 1e-17 * fabs(x):
            break
    return x


@cython.ccall
def norm_quantile(p: cython.double, lower_tail: cython.bint = True,
                  log_p: cython.bint = False) -> cython.double:
    """Standard normal quantile.

    ``p`` is a lower- or upper-tail probability, on the log scale when
    ``log_p`` is true.  Out-of-domain input gives NaN.
    """
    lp: cython.double
    lower: cython.bint
    x: cython.double
    if isnan(p):
        return p
    lp, lower = _canonical_log_prob(p, lower_tail, log_p)
    if isnan(lp):
        return NAN
    x = _norm_quantile_lower(lp)
    return x if lower else -x


# ---------------------------------------------------------------------------
# chi-square with one degree of freedom

@cython.cfunc
@cython.exceptval(check=False)
def _half_inverse(a: cython.double, b: cython.double) -> tuple[cython.double, cython.double]:
    # 1 / (2 a b) as a double-double
    p: cython.double
    e: cython.double
    p, e = _two_prod(a, b)
    if not (p > 1e-290 and p < 1e290):
        return _div(0.5, p), 0.0
    return _dd_div(0.5, 0.0, p, e)


@cython.cfunc
@cython.exceptval(check=False)
def _erf_series(w: cython.double) -> cython.double:
    # sum w^(2n+1) / (2n+1)!!, so that Phi(w) - 1/2 = phi(w) * sum
    t: cython.double = w
    s: cython.double = w
    w2: cython.double = w * w
    n: cython.int
    for n in range(1, 60):
        t *= w2 / (2 * n + 1)
        s += t
        if t < 1e-17 * s:
            break
    return s


@cython.cfunc
@cython.exceptval(check=False)
def _chisq1_tail(e_hi: cython.double, e_lo: cython.double, w: cython.double,
                 upper: cython.bint, log_p: cython.bint) -> cython.double:
    # P(chi2_1 > w^2) when upper, else P(chi2_1 <= w^2); E = w^2 / 2
    g: cython.double
    if upper:
        if log_p:
            if w < 1.0:
                return _log1p(-2.0 * _gauss(e_hi, e_lo, _erf_series(w)))
            return _LN2 + _log_gauss(e_hi, e_lo, _log(_mills(w)))
        return 2.0 * _gauss(e_hi, e_lo, _mills(w))
    if w < 1.0:
        g = 2.0 * _gauss(e_hi, e_lo, _erf_series(w))
        return _log(g) if log_p else g
    g = 2.0 * _gauss(e_hi, e_lo, _mills(w))
    return _log1p(-g) if log_p else 1.0 - g


@cython.ccall
def chisq1_sf(z: cython.double, log_p: cython.bint = False) -> cython.double:
    """Upper tail ``P(chi2_1 > z) = 2 Phi(-sqrt(z))`` of one-degree chi-square."""
    if isnan(z):
        return z
    if z <= 0.0:
        return 0.0 if log_p else 1.0
    if isinf(z):
        return -INF if log_p else 0.0
    return _chisq1_tail(0.5 * z, 0.0, _sqrt(z), True, log_p)


# ---------------------------------------------------------------------------
# gamma distribution (starting values only)

@cython.cfunc
@cython.exceptval(check=False)
def _gamma_log_tails(x: cython.double, k: cython.double) -> tuple[cython.double, cython.double]:
    # (log P(k, x), log Q(k, x)) of the regularized incomplete gamma
    lpre: cython.double
    s: cython.double
    term: cython.double
    ap: cython.double
    b: cython.double
    c: cython.double
    d: cython.double
    an: cython.double
    delta: cython.double
    f: cython.double
    lp: cython.double
    lq: cython.double
    u: cython.double
    v: cython.double
    xn: cython.double
    n: cython.int
    if x <= 0.0:
        return -INF, 0.0
    if isinf(x):
        return 0.0, -INF
    lpre = k * _log(x) - x - _lgamma(k)
    if x >= k + 1.0 and x >= 1.0:
        # modified Lentz continued fraction for Q
        b = x + 1.0 - k
        c = 1e300
        d = 1.0 / b
        f = d
        for n in range(1, 100000):
            an = -n * (n - k)
            b += 2.0
            d = an * d + b
            if fabs(d) < 1e-300:
                d = 1e-300
            c = b + an / c
            if fabs(c) < 1e-300:
                c = 1e-300
            d = 1.0 / d
            delta = d * c
            f *= delta
            if fabs(delta - 1.0) < 1e-16:
                break
        lq = lpre + _log(f)
        return _log1p(-_exp(lq)), lq
    if k < 1.0 and x < 2.0:
        # Q = 1 - x^k / Gamma(k+1) - x^k / Gamma(k+1) * k * sum_{n>=1} (-x)^n / (n! (k+n))
        u = -_expm1(k * _log(x) - _lgamma(k + 1.0))
        s = 0.0
        xn = 1.0
        for n in range(1, 200):
            xn *= -x / n
            term = xn / (k + n)
            s += term
            if fabs(term) < 1e-17 * fabs(s):
                break
        v = -_exp(k * _log(x) - _lgamma(k + 1.0)) * k * s
        lq = _log(u + v)
        if u + v < 0.5:
            return _log1p(-(u + v)), lq
    # power series for P
    ap = k
    s = 1.0 / k
    term = s
    for n in range(1, 100000):
        ap += 1.0
        term *= x / ap
        s += term
        if term < 1e-17 * s:
            break
    lp = lpre + _log(s)
    return lp, _log1p(-_exp(lp))


@cython.cfunc
@cython.exceptval(check=False)
def _gamma_quantile_std(lp: cython.double, k: cython.double, lower: cython.bint) -> cython.double:
    # unit-scale gamma quantile, log tail probability lp
    z: cython.double
    c: cython.double
    x: cython.double
    u: cython.double
    g: cython.double
    dg: cython.double
    ltail: cython.double
    lpo: cython.double
    lqo: cython.double
    ldens: cython.double
    step: cython.double
    it: cython.int
    z = _norm_quantile_lower(lp) if lp <= -_LN2 else -_norm_quantile_lower(_log(-_expm1(lp)))
    if not lower:
        z = -z
    # Wilson-Hilferty
    c = 1.0 - 1.0 / (9.0 * k) + z / (3.0 * _sqrt(k))
    # P(k, x) ~ x^k / Gamma(k + 1) for small x
    lpo = lp if lower else _log(-_expm1(lp))
    u = (lpo + _lgamma(k + 1.0)) / k
    if u < -708.0:
        return _exp(u)
    if c > 0.0 and k >= 0.1:
        x = k * c * c * c
    elif u < 0.0:
        x = _exp(u)
    else:
        lqo = _log(-_expm1(lp)) if lower else lp
        x = -lqo - _lgamma(k)
        if x < 1.0:
            x = 1.0
    if not (x > 0.0) or isinf(x):
        x = k
    if k > 1e5 and fabs(z) < 5.0:
        return x
    u = _log(x)
    for it in range(100):
        lpo, lqo = _gamma_log_tails(x, k)
        ltail = lpo if lower else lqo
        ldens = (k - 1.0) * u - x - _lgamma(k)
        g = ltail - lp
        # d log F / d log x
        dg = _exp(ldens - ltail + u)
        if not lower:
            dg = -dg
        if not (dg != 0.0) or isnan(g) or isinf(dg):
            break
        step = g / dg
        if step > 2.0:
            step = 2.0
        elif step < -2.0:
            step = -2.0
        u -= step
        x = _exp(u)
        if fabs(step) < 1e-14:
            break
    return x


@cython.ccall
def gamma_quantile(p: cython.double, shape_k: cython.double, scale_theta: cython.double,
                   lower_tail: cython.bint = True, log_p: cython.bint = False) -> cython.double:
    """Gamma quantile, accurate enough for Newton starting values."""
    lp: cython.double
    if isnan(p) or isnan(shape_k) or isnan(scale_theta):
        return NAN
    if not (shape_k > 0.0 and scale_theta > 0.0) or isinf(shape_k):
        return NAN
    if log_p:
        if p > 0.0:
            return NAN
        lp = p
    else:
        if p < 0.0 or p > 1.0:
            return NAN
        lp = _log(p)
    if lp == -INF:
        return 0.0 if lower_tail else INF
    if lp == 0.0:
        return INF if lower_tail else 0.0
    return scale_theta * _gamma_quantile_std(lp, shape_k, lower_tail)


# ---------------------------------------------------------------------------
# inverse Gaussian model

@cython.ccall
def classify(x: cython.double, mu: cython.double, phi: cython.double) -> cython.int:
    """Special-case code for the triple ``(x, mu, phi)``."""
    if isnan(x):
        return MISSING
    if x < 0.0:
        return LEFT_LIMIT
    if x == INF:
        return RIGHT_LIMIT
    if (not isnan(mu) and mu <= 0.0) or (not isnan(phi) and phi < 0.0):
        return INVALID
    if isnan(phi):
        return MISSING
    if phi == INF:
        return SPIKE_AT_ZERO if x == 0.0 else RIGHT_LIMIT
    if isnan(mu):
        return MISSING
    if phi == 0.0:
        if x < mu:
            return LEFT_LIMIT
        if x == mu:
            return SPIKE_AT_MEAN
        return RIGHT_LIMIT
    if x == 0.0:
        return LEFT_LIMIT
    if mu == INF:
        return INVERSE_CHISQUARE
    return REGULAR


@cython.ccall
def param_class(mu: cython.double, phi: cython.double) -> cython.int:
    """Code describing the parameter pair alone (no evaluation point)."""
    if (not isnan(mu) and mu <= 0.0) or (not isnan(phi) and phi < 0.0):
        return INVALID
    if isnan(phi):
        return MISSING
    if phi == INF:
        return SPIKE_AT_ZERO
    if isnan(mu):
        return MISSING
    if phi == 0.0:
        return SPIKE_AT_MEAN
    if mu == INF:
        return INVERSE_CHISQUARE
    return REGULAR


@cython.cfunc
@cython.exceptval(check=False)
def _mode(mu: cython.double, phi: cython.double) -> cython.double:
    kappa: cython.double = 1.5 * phi * mu
    if kappa <= 1.0:
        return mu / (hypot(1.0, kappa) + kappa)
    return (1.0 / (1.5 * phi)) / (hypot(1.0, 1.0 / kappa) + 1.0)


@cython.ccall
def mode(mu: cython.double, phi: cython.double) -> cython.double:
    """Mode of IG(mu, phi); NaN unless both parameters are finite and positive."""
    if param_class(mu, phi) != REGULAR:
        return NAN
    return _mode(mu, phi)


@cython.cfunc
@cython.exceptval(check=False)
def _exponent(q: cython.double, mu: cython.double,
              phi: cython.double) -> tuple[cython.double, cython.double]:
    # (q - mu)^2 / (2 phi mu^2 q) as a double-double, or a plain double
    # (low part 0) when intermediates leave the safe range
    dh: cython.double
    dl: cython.double
    nh: cython.double
    nl: cython.double
    mh: cython.double
    ml: cython.double
    z: cython.double
    if (mu > 1e-140 and mu < 1e140 and phi > 1e-140 and phi < 1e140
            and q > 1e-140 and q < 1e140):
        dh, dl = _two_sum(q, -mu)
        if dh == 0.0 or fabs(dh) > 1e-140:
            nh, nl = _dd_mul(dh, dl, dh, dl)
            mh, ml = _two_prod(mu, mu)
            mh, ml = _dd_mul_d(mh, ml, phi)
            mh, ml = _dd_mul_d(mh, ml, q)
            if mh > 1e-280 and mh < 1e280:
                if nh == 0.0:
                    return 0.0, 0.0
                return _dd_div(nh, nl, 2.0 * mh, 2.0 * ml)
    z = ((q - mu) / mu) / (_sqrt(q) * _sqrt(phi))
    return 0.5 * z * z, 0.0


@cython.cfunc
@cython.exceptval(check=False)
def _sqrt_product(a: cython.double, b: cython.double) -> cython.double:
    # sqrt(a b) with a double-double product
    p: cython.double
    e: cython.double
    p, e = _two_prod(a, b)
    if p > 1e-290 and p < 1e290:
        return _dd_sqrt(p, e)
    return _sqrt(a) * _sqrt(b)


@cython.cfunc
@cython.exceptval(check=False)
def _regular_log_density(q: cython.double, mu: cython.double, phi: cython.double,
                         e_hi: cython.double, e_lo: cython.double) -> cython.double:
    return (-e_hi - _LOG_SQRT_2PI) - ((0.5 * _log(phi) + 1.5 * _log(q)) + e_lo)


@cython.cfunc
@cython.exceptval(check=False)
def _invchisq_log_density(x: cython.double, phi: cython.double) -> cython.double:
    e_hi: cython.double
    e_lo: cython.double
    e_hi, e_lo = _half_inverse(phi, x)
    return (-e_hi - _LOG_SQRT_2PI) - ((0.5 * _log(phi) + 1.5 * _log(x)) + e_lo)


@cython.ccall
def log_density(x: cython.double, mu: cython.double, phi: cython.double) -> cython.double:
    """Log-density of IG(mu, phi) at ``x`` including all limiting cases."""
    e_hi: cython.double
    e_lo: cython.double
    case: cython.int = classify(x, mu, phi)
    if case == REGULAR:
        e_hi, e_lo = _exponent(x, mu, phi)
        return _regular_log_density(x, mu, phi, e_hi, e_lo)
    if case == INVERSE_CHISQUARE:
        return _invchisq_log_density(x, phi)
    if case == LEFT_LIMIT or case == RIGHT_LIMIT:
        return -INF
    if case == SPIKE_AT_MEAN or case == SPIKE_AT_ZERO:
        return INF
    return NAN


@cython.ccall
def density(x: cython.double, mu: cython.double, phi: cython.double) -> cython.double:
    """Density of IG(mu, phi) at ``x``; spikes give ``inf``.

    Evaluated on the natural scale where it is representable, which avoids
    magnifying the rounding of the log-density.
    """
    e_hi: cython.double
    e_lo: cython.double
    s: cython.double
    case: cython.int = classify(x, mu, phi)
    if case == REGULAR:
        e_hi, e_lo = _exponent(x, mu, phi)
    elif case == INVERSE_CHISQUARE:
        e_hi, e_lo = _half_inverse(phi, x)
    else:
        return _exp(log_density(x, mu, phi))
    # 1 / sqrt(phi x^3)
    s = _div(1.0, _sqrt_product(phi, x) * x)
    if e_hi < 700.0 and s > 1e-290 and s < 1e290:
        return _gauss(e_hi, e_lo, s)
    return _exp(log_density(x, mu, phi))


@cython.cfunc
@cython.exceptval(check=False)
def _standardize(q: cython.double, mu: cython.double, phi: cython.double,
                 e_hi: cython.double, e_lo: cython.double) -> tuple[cython.double, cython.double]:
    # (z, h) with z = (q - mu) / (mu sqrt(phi q)) and h = 2 / sqrt(phi q)
    z: cython.double
    r: cython.double = _sqrt_product(phi, q)
    if e_lo != 0.0 or e_hi == 0.0:
        z = _dd_sqrt(2.0 * e_hi, 2.0 * e_lo)
    else:
        z = fabs(((q - mu) / mu) / r)
    if q < mu:
        z = -z
    return z, _div(2.0, r)


@cython.cfunc
@cython.exceptval(check=False)
def _regular_cdf(q: cython.double, mu: cython.double, phi: cython.double,
                 e_hi: cython.double, e_lo: cython.double,
                 lower: cython.bint, log_p: cython.bint) -> cython.double:
    # The smaller tail is computed directly and the larger one as its
    # complement, so the two always sum to one up to a final rounding.
    z: cython.double
    h: cython.double
    rz: cython.double
    rx: cython.double
    d: cython.double
    g: cython.double
    small_lower: cython.bint
    z, h = _standardize(q, mu, phi, e_hi, e_lo)
    d = 0.0
    small_lower = z < -1.0
    if z < 0.0 and not small_lower:
        d = _mills_diff(z, h)
        small_lower = _gauss(e_hi, e_lo, d) > 0.5
    if small_lower:
        # phi(z) (R(-z) + R(z + h))
        rz = _mills(-z)
        rx = _mills(z + h)
        if lower and log_p:
            return _log_gauss(e_hi, e_lo, _log(rz)) + _log1p(rx / rz)
        g = _gauss(e_hi, e_lo, rz + rx)
    else:
        # phi(z) (R(z) - R(z + h))
        if not lower and log_p:
            return _log_gauss(e_hi, e_lo, _log_mills_diff(z, h))
        if z >= 0.0:
            d = _mills_diff(z, h)
        g = _gauss(e_hi, e_lo, d)
    if lower == small_lower:
        return _log(g) if log_p else g
    return _log1p(-g) if log_p else 1.0 - g


@cython.cfunc
@cython.exceptval(check=False)
def _invchisq_cdf(q: cython.double, phi: cython.double,
                  lower: cython.bint, log_p: cython.bint) -> cython.double:
    # P(X <= q) = P(chi2_1 >= 1 / (phi q))
    e_hi: cython.double
    e_lo: cython.double
    e_hi, e_lo = _half_inverse(phi, q)
    return _chisq1_tail(e_hi, e_lo, _dd_sqrt(2.0 * e_hi, 2.0 * e_lo), lower, log_p)


@cython.ccall
def cdf(q: cython.double, mu: cython.double, phi: cython.double,
        lower_tail: cython.bint = True, log_p: cython.bint = False) -> cython.double:
    """Lower or upper tail probability of IG(mu, phi), optionally as a log."""
    e_hi: cython.double
    e_lo: cython.double
    low: cython.bint
    case: cython.int = classify(q, mu, phi)
    if case == REGULAR:
        e_hi, e_lo = _exponent(q, mu, phi)
        return _regular_cdf(q, mu, phi, e_hi, e_lo, lower_tail, log_p)
    if case == INVERSE_CHISQUARE:
        return _invchisq_cdf(q, phi, lower_tail, log_p)
    if case == INVALID or case == MISSING:
        return NAN
    # limits and spikes: all mass at or below q unless LeftLimit
    low = case == LEFT_LIMIT
    if low == lower_tail:
        return -INF if log_p else 0.0
    return 0.0 if log_p else 1.0


@cython.ccall
def log_tail_asymptotic(q: cython.double, mu: cython.double, phi: cython.double) -> cython.double:
    """Large-``q`` asymptotic approximation to the log upper tail probability."""
    qm: cython.double
    pm: cython.double
    if param_class(mu, phi) != REGULAR or isnan(q):
        return NAN
    qm = q / mu
    pm = phi * mu
    return (1.0 / pm - 0.5 * _LOG_PI - _log(2.0 * pm)
            - 1.5 * _log1p(qm / (2.0 * pm)) - qm / (2.0 * pm))


# ---------------------------------------------------------------------------
# quantile

@cython.cfunc
@cython.exceptval(check=False)
def _log_cdf_tail(q: cython.double, mu: cython.double, phi: cython.double,
                  lower: cython.bint) -> cython.double:
    e_hi: cython.double
    e_lo: cython.double
    e_hi, e_lo = _exponent(q, mu, phi)
    return _regular_cdf(q, mu, phi, e_hi, e_lo, lower, True)


@cython.cfunc
@cython.exceptval(check=False)
def _newton_step(q: cython.double, mu: cython.double, phi: cython.double,
                 lp: cython.double, lower: cython.bint) -> tuple[cython.double, cython.double]:
    # (step, delta) for target log probability lp in the given tail
    e_hi: cython.double
    e_lo: cython.double
    lc: cython.double
    ld: cython.double
    delta: cython.double
    ldiff: cython.double
    step: cython.double
    e_hi, e_lo = _exponent(q, mu, phi)
    lc = _regular_cdf(q, mu, phi, e_hi, e_lo, lower, True)
    ld = _regular_log_density(q, mu, phi, e_hi, e_lo)
    delta = lp - lc
    if delta == 0.0:
        return 0.0, 0.0
    if fabs(delta) < 1e-5:
        ldiff = _log(fabs(delta)) + lp + _log1p(-0.5 * delta)
    elif delta > 0.0:
        ldiff = lp + _log(-_expm1(-delta))
    else:
        ldiff = lc + _log(-_expm1(delta))
    step = _exp(ldiff - ld)
    if (delta < 0.0) == lower:
        step = -step
    return step, delta


@cython.cfunc
@cython.exceptval(check=False)
def _root_scale(z: cython.double, pm: cython.double) -> cython.double:
    # sqrt(q_m) solving (q_m - 1) / sqrt(q_m pm) = z
    a: cython.double = z * _sqrt(pm)
    b: cython.double = _sqrt(a * a + 4.0)
    if a < 0.0:
        return 2.0 / (b - a)
    return 0.5 * (a + b)


@cython.cfunc
@cython.exceptval(check=False)
def _log_upper_bound(z: cython.double, pm: cython.double) -> cython.double:
    # log of a lower bound on the upper tail at standardized point z >= 0,
    # from convergent bounds on the Mills ratio
    s: cython.double = _root_scale(z, pm)
    h: cython.double = 2.0 / (s * _sqrt(pm))
    x: cython.double = z + h
    z2: cython.double = z * z
    b1: cython.double = h / (x * x + 3.0)
    b2: cython.double = z * (z2 + 5.0) / ((z2 + 6.0) * z2 + 3.0) - 1.0 / x
    if b2 > b1:
        b1 = b2
    return -0.5 * z2 - _LOG_SQRT_2PI + _log(b1)


@cython.cfunc
@cython.exceptval(check=False)
def _upper_start(lp: cython.double, pm: cython.double) -> cython.double:
    # standardized q_m whose bound-implied tail mass is at least exp(lp)
    lo: cython.double = 0.0
    hi: cython.double = -_norm_quantile_lower(lp)
    mid: cython.double
    it: cython.int
    if not _log_upper_bound(lo, pm) >= lp:
        return NAN
    for it in range(60):
        mid = 0.5 * (lo + hi)
        if _log_upper_bound(mid, pm) >= lp:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-6 * hi:
            break
    mid = _root_scale(lo, pm)
    return mid * mid


@cython.cfunc
@cython.exceptval(check=False)
def _start(lp: cython.double, lower: cython.bint,
           mu: cython.double, phi: cython.double) -> cython.double:
    # starting value bracketed by the mode and the target quantile
    m: cython.double = _mode(mu, phi)
    pm: cython.double = phi * mu
    q0: cython.double
    s: cython.double
    if lp >= -11.512925464970229:  # log(1e-5)
        return m
    if lower:
        # root of Phi(z(q)) = p; tends to 1 / (phi q_norm^2) for large pm
        s = _root_scale(_norm_quantile_lower(lp), pm)
        q0 = mu * (s * s)
        if q0 > 0.0 and q0 <= m and _log_cdf_tail(q0, mu, phi, True) >= lp:
            return q0
        return m
    q0 = mu * _upper_start(lp, pm)
    if not (q0 >= m and not isinf(q0) and _log_cdf_tail(q0, mu, phi, False) >= lp):
        q0 = (pm * mu) * _gamma_quantile_std(lp, 1.0 / pm, False)
        if not (q0 >= m and not isinf(q0) and _log_cdf_tail(q0, mu, phi, False) >= lp):
            return m
    return q0


@cython.cfunc
@cython.exceptval(check=False)
def _newton(lp: cython.double, lower: cython.bint, mu: cython.double, phi: cython.double,
            q0: cython.double, maxit: cython.int, tol: cython.double,
            trace: object) -> tuple[cython.double, cython.int, cython.int]:
    q: cython.double = q0
    qn: cython.double
    step: cython.double
    delta: cython.double
    direction: cython.int = 0
    s: cython.int
    it: cython.int = 0
    while it < maxit:
        step, delta = _newton_step(q, mu, phi, lp, lower)
        it += 1
        if trace is not None:
            trace.append((q, step, delta))
        if step == 0.0 or isnan(step):
            return q, it, STOP_TOLERANCE
        s = 1 if step > 0.0 else -1
        if direction == 0:
            direction = s
        elif s != direction:
            return q, it, STOP_SIGN_CHANGE
        qn = q + step
        if qn <= 0.0:
            qn = 0.5 * q
        if fabs(step) <= tol * (q if q > DBL_MIN else DBL_MIN):
            return qn, it, STOP_TOLERANCE
        q = qn
    return q, it, STOP_MAX_ITER


@cython.cfunc
@cython.exceptval(check=False)
def _invchisq_quantile(lp: cython.double, lower: cython.bint, phi: cython.double) -> cython.double:
    # canonical tail input (mass exp(lp) <= 1/2 in tail ``lower``)
    w: cython.double
    g: cython.double
    t: cython.double
    sw: cython.double
    it: cython.int
    if lower:
        # P(chi2_1 > w^2) = 2 Phi(-w) = exp(lp)
        w = -_norm_quantile_lower(lp - _LN2)
    else:
        # P(chi2_1 <= w^2) = 2 phi(w) S(w) = exp(lp), small w
        t = lp - _LN2
        w = _exp(t + _LOG_SQRT_2PI)
        for it in range(50):
            if w == 0.0 or isinf(w):
                break
            sw = _erf_series(w)
            # d log G / dw = 1 / S(w)
            g = (-0.5 * w * w - _LOG_SQRT_2PI + _log(sw) - t) * sw
            w -= g
            if fabs(g) <= 1e-16 * w:
                break
    return _div(1.0, phi * w * w)


@cython.cfunc
@cython.exceptval(check=False)
def _quantile(p: cython.double, mu: cython.double, phi: cython.double,
              lower_tail: cython.bint, log_p: cython.bint, maxit: cython.int,
              tol: cython.double, trace: object) -> tuple[cython.double, cython.int, cython.int]:
    lp: cython.double
    lower: cython.bint
    q0: cython.double
    case: cython.int
    if isnan(p):
        return NAN, 0, STOP_NONE
    lp, lower = _canonical_log_prob(p, lower_tail, log_p)
    if isnan(lp):
        return NAN, 0, STOP_NONE
    case = param_class(mu, phi)
    if case == INVALID or case == MISSING:
        return NAN, 0, STOP_NONE
    if case == SPIKE_AT_ZERO:
        return 0.0, 0, STOP_NONE
    if case == SPIKE_AT_MEAN:
        # every quantile is the atom except the bottom of the range
        return (0.0 if lp == -INF and lower else mu), 0, STOP_NONE
    if lp == -INF:
        return (0.0 if lower else INF), 0, STOP_NONE
    if case == INVERSE_CHISQUARE:
        return _invchisq_quantile(lp, lower, phi), 0, STOP_NONE
    if tol > 0.0 and maxit >= 1:
        q0 = _start(lp, lower, mu, phi)
        return _newton(lp, lower, mu, phi, q0, maxit, tol, trace)
    return NAN, 0, STOP_NONE


@cython.ccall
def starting_value(p: cython.double, mu: cython.double, phi: cython.double,
                   lower_tail: cython.bint = True, log_p: cython.bint = False) -> cython.double:
    """Newton starting value for the quantile at probability ``p``."""
    lp: cython.double
    lower: cython.bint
    if param_class(mu, phi) != REGULAR or isnan(p):
        return NAN
    lp, lower = _canonical_log_prob(p, lower_tail, log_p)
    if isnan(lp) or lp == -INF:
        return NAN
    return _start(lp, lower, mu, phi)


@cython.ccall
def quantile(p: cython.double, mu: cython.double, phi: cython.double,
             lower_tail: cython.bint = True, log_p: cython.bint = False,
             maxit: cython.int = 200, tol: cython.double = 1e-14) -> cython.double:
    """Quantile of IG(mu, phi) by monotone Newton iteration."""
    q: cython.double
    it: cython.int
    stop: cython.int
    q, it, stop = _quantile(p, mu, phi, lower_tail, log_p, maxit, tol, None)
    return q


@cython.ccall
def quantile_info(p: cython.double, mu: cython.double, phi: cython.double,
                  lower_tail: cython.bint = True, log_p: cython.bint = False,
                  maxit: cython.int = 200, tol: cython.double = 1e-14,
                  trace: object = None) -> tuple:
    """Quantile plus ``(iterations, stop_code)``; appends steps to ``trace``."""
    q: cython.double
    it: cython.int
    stop: cython.int
    q, it, stop = _quantile(p, mu, phi, lower_tail, log_p, maxit, tol, trace)
    return q, it, stop


# ---------------------------------------------------------------------------
# array loops over equal-length 1-d float64 views

@cython.ccall
def log_density_array(x: cython.double[:], mu: cython.double[:], phi: cython.double[:],
                      out: cython.double[:], take_log: cython.bint):
    i: cython.Py_ssize_t
    for i in range(x.shape[0]):
        if take_log:
            out[i] = log_density(float(x[i]), float(mu[i]), float(phi[i]))
        else:
            out[i] = density(float(x[i]), float(mu[i]), float(phi[i]))


@cython.ccall
def cdf_array(q: cython.double[:], mu: cython.double[:], phi: cython.double[:],
              out: cython.double[:], lower_tail: cython.bint, log_p: cython.bint):
    i: cython.Py_ssize_t
    for i in range(q.shape[0]):
        out[i] = cdf(float(q[i]), float(mu[i]), float(phi[i]), lower_tail, log_p)


@cython.ccall
def quantile_array(p: cython.double[:], mu: cython.double[:], phi: cython.double[:],
                   out: cython.double[:], iters: cython.int[:], stops: cython.int[:],
                   lower_tail: cython.bint, log_p: cython.bint,
                   maxit: cython.int, tol: cython.double):
    i: cython.Py_ssize_t
    q: cython.double
    it: cython.int
    stop: cython.int
    for i in range(p.shape[0]):
        q, it, stop = _quantile(float(p[i]), float(mu[i]), float(phi[i]), lower_tail, log_p,
                                maxit, tol, None)
        out[i] = q
        iters[i] = it
        stops[i] = stop
