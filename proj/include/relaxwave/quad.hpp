#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace relaxwave {

inline constexpr double kInfiniteRate = std::numeric_limits<double>::infinity();

// Tolerances and budget for the recursive adaptive Simpson rule.
struct QuadPolicy {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;            // integrand units x rad/s
    int max_depth = 40;              // allowed range [10, 60]
    std::vector<double> split_points;  // interior points to cut panels at

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

struct ComplexQuadResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
};

// Thrown when the subdivision budget runs out before the local error test
// passes. Carries the accumulated value and estimate so callers can inspect
// how far the integration got.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double partial_value, double error_estimate)
        : std::runtime_error(what),
          partial_value_(partial_value),
          error_estimate_(error_estimate) {}

    double partial_value() const noexcept { return partial_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double partial_value_;
    double error_estimate_;
};

using RealFunction = std::function<double(double)>;

// Relaxation-frequency band [lo, hi]; hi may be infinite.
struct Band {
    double lo = 0.0;
    double hi = kInfiniteRate;
};

// Recursive adaptive Simpson quadrature of f over [a, b]. A subinterval is
// accepted once |S(a,m) + S(m,b) - S(a,b)| <= 15 tol, and the contribution is
// Richardson-extrapolated. The returned estimate includes a roundoff term of
// 50 eps times the accumulated |contributions|.
QuadResult adaptive_simpson(const RealFunction& f, double a, double b, const QuadPolicy& policy);

// Integral of density(Omega) / (Omega + i omega) over the band, computed as
// two real quadratures. A density behaving like C Omega^{origin_exponent - 1}
// near Omega = 0 is regularized by the substitution u = Omega^origin_exponent
// on the first panel; an infinite upper limit is mapped through v = 1/Omega.
// omega is added to the panel cuts automatically.
ComplexQuadResult stieltjes_integral(const RealFunction& density, double omega, Band band,
                                     const QuadPolicy& policy, double origin_exponent = 1.0);

}  // namespace relaxwave
