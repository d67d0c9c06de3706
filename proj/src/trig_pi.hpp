#pragma once

#include <cmath>
#include <numbers>

namespace relaxwave::detail {

// sin(pi x) and cos(pi x) with exact zeros at integer / half-integer
// arguments; a plain sin(M_PI * b) at integer b leaves an O(eps) residue that
// the spectral-density tails amplify by Omega^a.
inline double sin_pi(double x) {
    const double r = std::remainder(x, 2.0);  // in [-1, 1], exact
    const double a = std::abs(r);
    const double s = (a <= 0.5) ? std::sin(std::numbers::pi * a)
                                : std::sin(std::numbers::pi * (1.0 - a));
    return r < 0.0 ? -s : s;
}

inline double cos_pi(double x) { return sin_pi(x + 0.5); }

}  // namespace relaxwave::detail
