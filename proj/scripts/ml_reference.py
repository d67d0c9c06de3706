#!/usr/bin/env python3
"""Generate reference tables for the two-parameter Mittag-Leffler function.

Sums the defining series E_{a,b}(z) = sum_n z^n / Gamma(a n + b) in mpmath
arbitrary precision, with the working precision raised far above the largest
intermediate term so cancellation is harmless. Values are written with 16
significant digits to plain-text tables consumed by the C++ test suite:

  tests/fixtures/ml_series_reference.txt    -- |z| <= 1 grid (series regime)
  tests/fixtures/ml_integral_reference.txt  -- large negative real z

Columns: a b z_re z_im E_re E_im

Regenerate with:  python3 scripts/ml_reference.py
"""

import math
import os

import mpmath as mp

TARGET_DIGITS = 50


def peak_log10_term(a, b, abs_z):
    """log10 of the largest series term and the index where it peaks."""
    if abs_z <= 0:
        return 0.0, 1
    best, n_best = -math.inf, 0
    n = 0
    while True:
        t = n * math.log10(abs_z) - math.lgamma(a * n + b) / math.log(10)
        if t > best:
            best, n_best = t, n
        # decisively past the peak once terms fall 60 digits below it
        if n > n_best + 8 and t < best - 60:
            break
        n += 1
        if n > 2_000_000:
            raise RuntimeError("series peak search did not terminate")
    return best, n_best


def ml_series(a, b, z):
    peak, n_peak = peak_log10_term(a, b, abs(z))
    mp.mp.dps = int(max(peak, 0)) + TARGET_DIGITS + 40
    # absolute cutoff: partial sums are transiently as large as the peak term,
    # so a cutoff relative to the running sum would stop far too early
    cutoff = mp.mpf(10) ** (-TARGET_DIGITS - 20)
    zz = mp.mpc(z)
    # the gamma argument must be assembled in working precision; forming
    # a*n + b in double leaves O(eps) argument noise that the peak term
    # amplifies catastrophically
    aa, bb = mp.mpf(a), mp.mpf(b)
    s = mp.mpc(0)
    n = 0
    while True:
        term = zz**n / mp.gamma(aa * n + bb)
        s += term
        if n > n_peak and abs(term) < cutoff:
            break
        n += 1
        if n > 4_000_000:
            raise RuntimeError("series summation did not terminate")
    return s


def fmt(x):
    return mp.nstr(x, 16, strip_zeros=False)


def write_table(path, rows):
    with open(path, "w") as fh:
        fh.write("# a b z_re z_im E_re E_im  (E_{a,b}(z), 50-digit series oracle)\n")
        for a, b, z in rows:
            e = ml_series(a, b, z)
            fh.write(
                f"{fmt(mp.mpf(a))} {fmt(mp.mpf(b))} "
                f"{fmt(mp.mpf(z.real))} {fmt(mp.mpf(z.imag))} "
                f"{fmt(e.real)} {fmt(e.imag)}\n"
            )
    print(f"wrote {path} ({len(rows)} rows)")


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")
    os.makedirs(out_dir, exist_ok=True)

    series_rows = []
    zs = [
        complex(1.0, 0.0),
        complex(-1.0, 0.0),
        complex(0.5, 0.0),
        complex(-0.5, 0.5),
        complex(0.3, -0.4),
        complex(0.0, 1.0),
    ]
    for a in (0.3, 0.5, 0.8, 1.0):
        for b in (0.5, 1.0, 1.5):
            for z in zs:
                series_rows.append((a, b, z))
    write_table(os.path.join(out_dir, "ml_series_reference.txt"), series_rows)

    integral_rows = [
        # z = -10^{0.3}, -10^{0.8}: arguments hit by the relaxation-kernel tests
        (0.3, 1.0, complex(-(10.0**0.3), 0.0)),
        (0.8, 1.0, complex(-(10.0**0.8), 0.0)),
        (0.8, 1.3, complex(-(10.0**0.8), 0.0)),
        (0.3, 1.0, complex(-6.0, 0.0)),
        (0.3, 1.3, complex(-6.0, 0.0)),
        (0.5, 1.0, complex(-10.0, 0.0)),
        (0.5, 1.5, complex(-10.0, 0.0)),
        (0.5, 0.7, complex(-8.0, 0.0)),
        (0.7, 1.0, complex(-12.0, 0.0)),
        (0.8, 1.0, complex(-20.0, 0.0)),
        (0.8, 1.3, complex(-20.0, 0.0)),
        (0.45, 2.2, complex(-7.0, 0.0)),
    ]
    write_table(os.path.join(out_dir, "ml_integral_reference.txt"), integral_rows)


if __name__ == "__main__":
    main()
