#!/usr/bin/env python3
"""Independent attenuation / phase-velocity oracle for the fractional Zener
compressibility, evaluated in 40-digit mpmath arithmetic.

  kappa(w) = kappa0 (1 + (tau_eps i w)^beta) / (1 + (tau_sigma i w)^alpha)
  alpha_k(w) = -w sqrt(rho0) Im sqrt(kappa)
  c_p(w)     = 1 / (sqrt(rho0) Re sqrt(kappa))

Writes tests/fixtures/zener_curve_alpha03.txt with columns
  omega alpha_k c_p
for alpha = beta = 0.3, tau_sigma = 1, tau_eps = 1e-3, kappa0 = rho0 = 1,
10 points per decade over omega in [1e-4, 1e8].

Regenerate with:  python3 scripts/zener_curve_reference.py
"""

import os

import mpmath as mp

mp.mp.dps = 40


def curve_point(w, alpha, beta, tau_sigma, tau_eps):
    iw = mp.mpc(0, 1) * w
    kap = (1 + (tau_eps * iw) ** beta) / (1 + (tau_sigma * iw) ** alpha)
    s = mp.sqrt(kap)
    return -w * s.imag, 1 / s.real


def main():
    out = os.path.join(
        os.path.dirname(__file__), "..", "tests", "fixtures", "zener_curve_alpha03.txt"
    )
    alpha = beta = mp.mpf("0.3")
    tau_sigma = mp.mpf(1)
    tau_eps = mp.mpf("1e-3")
    ppd = 10
    with open(out, "w") as fh:
        fh.write("# omega alpha_k c_p  (fractional Zener, alpha=beta=0.3, "
                 "tau_sigma=1, tau_eps=1e-3, kappa0=rho0=1)\n")
        for i in range(-4 * ppd, 8 * ppd + 1):
            w = mp.mpf(10) ** (mp.mpf(i) / ppd)
            att, cp = curve_point(w, alpha, beta, tau_sigma, tau_eps)
            fh.write(f"{mp.nstr(w, 17)} {mp.nstr(att, 17)} {mp.nstr(cp, 17)}\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
