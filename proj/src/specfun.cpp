#include "relaxwave/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "trig_pi.hpp"

namespace relaxwave {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

struct SeriesOutcome {
    std::complex<double> value{0.0, 0.0};
    bool certified = false;
};

// Direct summation of the defining series. term_{n+1}/term_n drops like
// |z| / (a n + b)^a, so once that ratio falls below 1/2 the remaining tail is
// bounded by the last term. The accumulated roundoff is bounded by the
// largest term times n_terms eps; the result is only certified when that
// bound meets the tolerance.
SeriesOutcome evaluate_series(double a, double b, std::complex<double> z, double rel_tol) {
    constexpr int kMaxTerms = 20000;
    const double abs_z = std::abs(z);

    std::complex<double> sum{0.0, 0.0};
    double lg = std::lgamma(b);
    std::complex<double> term{std::exp(-lg), 0.0};
    double max_mag = 0.0;
    int n = 0;
    bool converged = false;
    while (n < kMaxTerms) {
        sum += term;
        const double mag = std::abs(term);
        max_mag = std::max(max_mag, mag);
        if (mag > 1e280) return {sum, false};

        const double lg_next = std::lgamma(a * (n + 1) + b);
        const double ratio_bound = abs_z * std::exp(lg - lg_next);
        if (ratio_bound < 0.5 && mag <= 0.25 * rel_tol * std::abs(sum)) {
            converged = true;
            break;
        }
        term *= z * std::exp(lg - lg_next);
        lg = lg_next;
        ++n;
    }
    if (!converged) return {sum, false};

    const double roundoff = max_mag * kEps * static_cast<double>(n + 1);
    if (!(roundoff <= 0.25 * rel_tol * std::abs(sum))) return {sum, false};
    return {sum, true};
}

// E_{a,b}(-A) for A > 0, 0 < a < 1, b < a + 1, through the Laplace-integral
// representation at t = 1:  E = int_0^inf e^-W f_{a,b}(W, A) dW.
double negative_real_by_integral(double a, double b, double A, double rel_tol) {
    MLParams p{a, b};
    RealFunction h = [p, A](double W) { return std::exp(-W) * spectral_density(p, A, W); };

    QuadPolicy policy;
    policy.rel_tol = 0.25 * rel_tol;

    // e^-W truncates the tail; the density knee sits near A^{1/a}.
    const double cut = 80.0;
    const double knee = std::pow(A, 1.0 / a);

    double total = 0.0;
    const double head_hi = 1.0;
    // head [0, 1]: f ~ W^{a-b}, regularized by u = W^{a-b+1} when singular
    const double gamma = a - b + 1.0;
    if (gamma < 1.0) {
        const double inv_g = 1.0 / gamma;
        const double u_hi = 1.0;  // head_hi^gamma
        RealFunction mapped = [h, gamma, inv_g](double u) {
            const double ue = std::max(u, 1e-15);
            const double W = std::pow(ue, inv_g);
            return h(W) * inv_g * std::pow(ue, inv_g - 1.0);
        };
        total += adaptive_simpson(mapped, 0.0, u_hi, policy).value;
    } else {
        RealFunction clamped = [h](double W) { return h(std::max(W, 1e-15)); };
        total += adaptive_simpson(clamped, 0.0, head_hi, policy).value;
    }

    QuadPolicy rest = policy;
    if (knee > head_hi && knee < cut) rest.split_points.push_back(knee);
    rest.split_points.push_back(10.0);
    rest.split_points.push_back(40.0);
    total += adaptive_simpson(h, head_hi, cut, rest).value;
    return total;
}

double negative_real(double a, double b, double A, double rel_tol) {
    // Reduce b below a + 1 with E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z
    // so the integral representation has an integrable origin.
    if (b >= a + 1.0) {
        const double inner = negative_real(a, b - a, A, rel_tol);
        return (inner - 1.0 / std::tgamma(b - a)) / (-A);
    }
    return negative_real_by_integral(a, b, A, rel_tol);
}

}  // namespace

void MLParams::validate() const {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("MLParams: order a must be positive and finite");
    if (!(b > 0.0) || !std::isfinite(b))
        throw std::invalid_argument("MLParams: order b must be positive and finite");
}

void MLParams::validate_integral_form() const {
    validate();
    if (!(a <= 1.0))
        throw std::invalid_argument("MLParams: integral representation requires 0 < a <= 1");
}

std::complex<double> mittag_leffler(MLParams p, std::complex<double> z,
                                    const MLOptions& options) {
    p.validate();
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("mittag_leffler: z must be finite");

    if (p.a == 1.0 && p.b == 1.0) return std::exp(z);
    if (z == std::complex<double>{0.0, 0.0}) return {1.0 / std::tgamma(p.b), 0.0};

    const bool negative_real_axis = z.imag() == 0.0 && z.real() < 0.0;
    const bool integral_applicable = negative_real_axis && p.a < 1.0;

    if (!(integral_applicable && std::abs(z) > options.z_switch)) {
        const SeriesOutcome s = evaluate_series(p.a, p.b, z, options.series_rel_tol);
        if (s.certified) return s.value;
        if (!integral_applicable) {
            std::ostringstream msg;
            msg << "mittag_leffler: series cancellation prevents reaching the accuracy target"
                << " (a = " << p.a << ", b = " << p.b << ", |z| = " << std::abs(z)
                << ") and the integral representation does not apply here";
            throw ConvergenceError(msg.str());
        }
    }
    return {negative_real(p.a, p.b, -z.real(), options.integral_rel_tol), 0.0};
}

std::complex<double> mittag_leffler(MLParams p, std::complex<double> z) {
    return mittag_leffler(p, z, MLOptions{});
}

double ml_kernel(MLParams p, double A, double t) {
    p.validate_integral_form();
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::domain_error("ml_kernel: t must be positive and finite");
    if (!(A > 0.0) || !std::isfinite(A))
        throw std::domain_error("ml_kernel: A must be positive and finite");
    const double z = -A * std::pow(t, p.a);
    return std::pow(t, p.b - 1.0) * mittag_leffler(p, {z, 0.0}).real();
}

double spectral_density(MLParams p, double A, double Omega) {
    p.validate();
    if (!(p.a < 1.0))
        throw std::domain_error("spectral_density: requires 0 < a < 1 (a = 1 degenerates to a point mass)");
    if (!(Omega > 0.0) || !std::isfinite(Omega))
        throw std::domain_error("spectral_density: Omega must be positive and finite");
    if (!(A > 0.0) || !std::isfinite(A))
        throw std::domain_error("spectral_density: A must be positive and finite");

    const double x = std::pow(Omega, p.a);
    const double numer = A * detail::sin_pi(p.b - p.a) + x * detail::sin_pi(p.b);
    const double denom = x * x + 2.0 * A * x * detail::cos_pi(p.a) + A * A;
    return std::pow(Omega, p.a - p.b) / kPi * numer / denom;
}

}  // namespace relaxwave
