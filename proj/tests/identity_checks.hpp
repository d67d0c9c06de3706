#pragma once

// Quadrature evaluation of the Laplace-transform identities tying the
// spectral density to the Mittag-Leffler relaxation kernel. Shared between
// the specfun unit tests and the acceptance suite; intentionally built on
// adaptive_simpson with hand-picked substitutions so it stays independent of
// the stieltjes_integral code path.

#include <algorithm>
#include <cmath>

#include "relaxwave/quad.hpp"
#include "relaxwave/specfun.hpp"

// int_0^inf e^{-Omega t} f_{a,b}(Omega, A) dOmega
inline double laplace_transform_of_density(relaxwave::MLParams p, double A, double t) {
    using namespace relaxwave;
    QuadPolicy policy;
    policy.rel_tol = 1e-10;

    const RealFunction h = [p, A, t](double W) {
        return std::exp(-W * t) * spectral_density(p, A, W);
    };

    double total = 0.0;
    // head [0, 1]: f ~ W^{a-b}, substitute u = W^{a-b+1} when singular
    const double gamma = p.a - p.b + 1.0;
    if (gamma < 1.0) {
        const double inv_g = 1.0 / gamma;
        total += adaptive_simpson(
                     [h, inv_g](double u) {
                         const double ue = std::max(u, 1e-15);
                         const double W = std::pow(ue, inv_g);
                         return h(W) * inv_g * std::pow(ue, inv_g - 1.0);
                     },
                     0.0, 1.0, policy)
                     .value;
    } else {
        total += adaptive_simpson([h](double W) { return h(std::max(W, 1e-15)); }, 0.0, 1.0,
                                  policy)
                     .value;
    }
    // the exponential truncates the tail
    const double cut = std::max(200.0 / t, 2.0);
    QuadPolicy rest = policy;
    const double knee = std::pow(A, 1.0 / p.a);
    if (knee > 1.0 && knee < cut) rest.split_points.push_back(knee);
    rest.split_points.push_back(std::min(10.0 / t, 0.5 * cut));
    total += adaptive_simpson(h, 1.0, cut, rest).value;
    return total;
}

// int_0^inf density dOmega for a density behaving like Omega^{head_exp - 1}
// at the origin and Omega^{-tail_exp - 1} at infinity.
inline double density_total_integral(const relaxwave::RealFunction& density, double head_exp,
                                     double tail_exp, double knee) {
    using namespace relaxwave;
    QuadPolicy policy;
    policy.rel_tol = 1e-10;

    const double split = std::max(knee, 1.0);
    double total = 0.0;

    // head [0, split] through u = Omega^head_exp
    {
        const double g = std::min(head_exp, 1.0);
        const double inv_g = 1.0 / g;
        const double u_hi = std::pow(split, g);
        total += adaptive_simpson(
                     [&density, inv_g, u_hi](double u) {
                         const double ue = std::max(u, u_hi * 1e-15);
                         const double W = std::pow(ue, inv_g);
                         return density(W) * inv_g * std::pow(ue, inv_g - 1.0);
                     },
                     0.0, u_hi, policy)
                     .value;
    }
    // tail [split, inf) through y = Omega^{-tail_exp}
    {
        const double inv_a = 1.0 / tail_exp;
        const double y_hi = std::pow(split, -tail_exp);
        total += adaptive_simpson(
                     [&density, inv_a, y_hi](double y) {
                         const double ye = std::max(y, y_hi * 1e-15);
                         const double W = std::pow(ye, -inv_a);
                         return density(W) * inv_a * std::pow(ye, -inv_a - 1.0);
                     },
                     0.0, y_hi, policy)
                     .value;
    }
    return total;
}
