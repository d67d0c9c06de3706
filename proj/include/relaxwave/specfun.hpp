#pragma once

#include <complex>
#include <stdexcept>

#include "relaxwave/quad.hpp"

namespace relaxwave {

// Orders of the two-parameter Mittag-Leffler function E_{a,b}. Both orders
// are restricted to positive reals; operations built on the Laplace-integral
// representation additionally require 0 < a <= 1.
struct MLParams {
    double a = 1.0;
    double b = 1.0;

    void validate() const;
    void validate_integral_form() const;
};

struct MLOptions {
    double series_rel_tol = 1e-10;   // accuracy target in the Taylor-series regime
    double integral_rel_tol = 1e-8;  // accuracy target in the integral regime
    // Real negative arguments with |z| above this go straight to the integral
    // representation; below it the series is tried first and falls back when
    // its rigorous roundoff bound misses the target.
    double z_switch = 5.0;
};

// Raised when neither evaluation scheme can certify the accuracy target.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// E_{a,b}(z) = sum_{n>=0} z^n / Gamma(a n + b)
std::complex<double> mittag_leffler(MLParams p, std::complex<double> z,
                                    const MLOptions& options);
std::complex<double> mittag_leffler(MLParams p, std::complex<double> z);

// Relaxation kernel t^{b-1} E_{a,b}(-A t^a); completely monotone for b <= 1.
double ml_kernel(MLParams p, double A, double t);

// Spectral density f_{a,b}(Omega, A) whose Laplace transform reproduces the
// kernel above:
//   f = Omega^{a-b}/pi * [A sin((b-a) pi) + Omega^a sin(b pi)]
//       / [Omega^{2a} + 2 A Omega^a cos(a pi) + A^2]
double spectral_density(MLParams p, double A, double Omega);

}  // namespace relaxwave
