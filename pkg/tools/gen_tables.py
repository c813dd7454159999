"""Regenerate the constant tables embedded in ``invgauss/_core.py``.

Run with ``python3 tools/gen_tables.py`` and paste the output over the
generated block in ``_core.py``.  Needs mpmath (dev only).
"""
import mpmath as mp
import numpy as np

mp.mp.dps = 50

TABLE_LO = -1.0
TABLE_STEP = 1.0 / 16.0
TABLE_N = 65  # centers -1, -15/16, ..., 3


def mills(x):
    x = mp.mpf(x)
    return mp.ncdf(-x) / mp.npdf(x)


def fmt(v):
    return repr(float(v))


def main():
    centers = [TABLE_LO + j * TABLE_STEP for j in range(TABLE_N)]
    r = [mills(c) for c in centers]
    d = [mp.mpf(c) * rv - 1 for c, rv in zip(centers, r)]
    nodes, weights = np.polynomial.legendre.leggauss(12)
    half = len(nodes) // 2
    print("# --- generated by tools/gen_tables.py ---")
    print(f"_LOG_SQRT_2PI = cython.declare(cython.double, {fmt(mp.log(2 * mp.pi) / 2)})")
    print(f"_INV_SQRT_2PI = cython.declare(cython.double, {fmt(1 / mp.sqrt(2 * mp.pi))})")
    print(f"_SQRT_2PI = cython.declare(cython.double, {fmt(mp.sqrt(2 * mp.pi))})")
    print(f"_LOG_PI = cython.declare(cython.double, {fmt(mp.log(mp.pi))})")
    print(f"_LN2 = cython.declare(cython.double, {fmt(mp.log(2))})")
    print(f"_MILLS_R = cython.declare(cython.double[{TABLE_N}], [")
    for v in r:
        print(f"    {fmt(v)},")
    print("])")
    print(f"_MILLS_D = cython.declare(cython.double[{TABLE_N}], [")
    for v in d:
        print(f"    {fmt(v)},")
    print("])")
    # symmetric rule: store the positive half only
    print(f"_GL_X = cython.declare(cython.double[{half}], [")
    for v in nodes[half:]:
        print(f"    {fmt(v)},")
    print("])")
    print(f"_GL_W = cython.declare(cython.double[{half}], [")
    for v in weights[half:]:
        print(f"    {fmt(v)},")
    print("])")
    print("# --- end generated ---")


if __name__ == "__main__":
    main()
