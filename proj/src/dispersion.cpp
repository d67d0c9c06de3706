#include "relaxwave/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace relaxwave {

namespace {

double loglog_interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it != xs.end() && *it == x) return ys[static_cast<std::size_t>(it - xs.begin())];
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (std::log(x) - std::log(xs[lo])) / (std::log(xs[hi]) - std::log(xs[lo]));
    if (!(ys[lo] > 0.0) || !(ys[hi] > 0.0))
        throw std::domain_error("normalize: attenuation must be positive around omega_ref");
    return std::exp((1.0 - t) * std::log(ys[lo]) + t * std::log(ys[hi]));
}

double fit_loglog_slope(const DispersionCurve& curve, double w_lo, double w_hi,
                        const char* regime) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < curve.omegas.size(); ++i) {
        const double w = curve.omegas[i];
        if (w < w_lo || w > w_hi) continue;
        if (!(curve.attenuation[i] > 0.0)) {
            std::ostringstream msg;
            msg << "regime_slopes: attenuation not strictly positive in the " << regime
                << " window (lossless or degenerate medium)";
            throw std::domain_error(msg.str());
        }
        const double x = std::log(w);
        const double y = std::log(curve.attenuation[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 4) {
        std::ostringstream msg;
        msg << "regime_slopes: insufficient span, fewer than 4 grid points in the " << regime
            << " window [" << w_lo << ", " << w_hi << "] rad/s";
        throw std::invalid_argument(msg.str());
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

void DispersionCurve::validate() const {
    const std::size_t n = omegas.size();
    if (n == 0) throw std::invalid_argument("DispersionCurve: empty grid");
    if (attenuation.size() != n || phase_velocity.size() != n)
        throw std::invalid_argument("DispersionCurve: list lengths differ");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(omegas[i] > 0.0) || !std::isfinite(omegas[i]))
            throw std::invalid_argument("DispersionCurve: omegas must be positive and finite");
        if (i > 0 && !(omegas[i] > omegas[i - 1]))
            throw std::invalid_argument("DispersionCurve: omegas must be strictly increasing");
        if (!(attenuation[i] >= 0.0))
            throw std::invalid_argument("DispersionCurve: attenuation must be >= 0");
        if (!(phase_velocity[i] > 0.0))
            throw std::invalid_argument("DispersionCurve: phase velocity must be > 0");
    }
}

double DispersionCurve::normalized_attenuation(std::size_t i) const {
    if (!normalization) return attenuation[i];
    return attenuation[i] / normalization->alpha_ref;
}

std::complex<double> wavenumber(std::complex<double> kappa, double omega, double rho0) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::domain_error("wavenumber: omega must be positive and finite");
    if (!(rho0 > 0.0) || !std::isfinite(rho0))
        throw std::domain_error("wavenumber: rho0 must be positive and finite");
    if (kappa == std::complex<double>{0.0, 0.0})
        throw std::domain_error("wavenumber: degenerate medium, kappa = 0");
    std::complex<double> k = omega * std::sqrt(rho0 * kappa);
    if (k.real() < 0.0) k = -k;
    return k;
}

DispersionCurve evaluate_curve(const Medium& model, const std::vector<double>& omega_grid,
                               const QuadPolicy& policy, double* max_quad_error) {
    if (omega_grid.empty()) throw std::invalid_argument("evaluate_curve: empty frequency grid");
    const double rho0 = medium_rho0(model);
    const double sqrt_rho0 = std::sqrt(rho0);

    DispersionCurve curve;
    curve.omegas = omega_grid;
    curve.attenuation.reserve(omega_grid.size());
    curve.phase_velocity.reserve(omega_grid.size());
    double worst = 0.0;
    for (double w : omega_grid) {
        ComplexQuadResult kq;
        try {
            kq = kappa(model, w, policy);
        } catch (const QuadratureError& e) {
            std::ostringstream msg;
            msg << "evaluate_curve: quadrature failure at omega = " << w
                << " rad/s: " << e.what();
            throw QuadratureError(msg.str(), e.partial_value(), e.error_estimate());
        }
        worst = std::max(worst, kq.error_estimate);
        const std::complex<double> root = std::sqrt(kq.value);
        curve.attenuation.push_back(-w * sqrt_rho0 * root.imag() + 0.0);
        curve.phase_velocity.push_back(1.0 / (sqrt_rho0 * root.real()));
    }
    curve.validate();
    if (max_quad_error) *max_quad_error = worst;
    return curve;
}

DispersionCurve normalize(const DispersionCurve& curve, double omega_ref) {
    curve.validate();
    if (!(omega_ref >= curve.omegas.front()) || !(omega_ref <= curve.omegas.back()))
        throw std::invalid_argument("normalize: omega_ref lies outside the curve grid");
    const double alpha_ref = loglog_interpolate(curve.omegas, curve.attenuation, omega_ref);
    if (!(alpha_ref > 0.0))
        throw std::domain_error("normalize: attenuation at omega_ref is zero");
    DispersionCurve out = curve;
    out.normalization = Normalization{omega_ref, alpha_ref};
    return out;
}

RegimeSlopes theoretical_slopes(const ZenerMedium& medium) {
    return {1.0 + medium.alpha, 1.0 - 0.5 * medium.alpha, 1.0 - medium.alpha};
}

RegimeSlopes regime_slopes(const DispersionCurve& curve, const ZenerMedium& medium) {
    curve.validate();
    medium.validate();
    const double ratio = medium.tau_sigma / medium.tau_eps;
    if (!(ratio >= 1.0e3))
        throw std::invalid_argument(
            "regime_slopes: no intermediate plateau, needs tau_sigma / tau_eps >= 1e3");

    const double ts = medium.tau_sigma;
    const double mid_center = std::pow(ratio, 0.65) / ts;
    const double half_width = std::pow(10.0, 0.125);

    RegimeSlopes fitted;
    fitted.low = fit_loglog_slope(curve, 1e-4 / ts, 1e-3 / ts, "low");
    fitted.mid = fit_loglog_slope(curve, mid_center / half_width, mid_center * half_width, "mid");
    fitted.high = fit_loglog_slope(curve, 1e2 / medium.tau_eps, 1e4 / medium.tau_eps, "high");
    return fitted;
}

void write_csv(std::ostream& out, const DispersionCurve& curve, double tau_sigma) {
    curve.validate();
    if (!(tau_sigma > 0.0)) throw std::invalid_argument("write_csv: tau_sigma must be positive");
    out << "omega_norm,alpha_k,alpha_k_norm,c_p\n";
    char line[160];
    for (std::size_t i = 0; i < curve.omegas.size(); ++i) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g\n",
                      curve.omegas[i] * tau_sigma, curve.attenuation[i],
                      curve.normalized_attenuation(i), curve.phase_velocity[i]);
        out << line;
    }
}

std::vector<double> log_grid(double omega_min, double omega_max, int points_per_decade) {
    if (!(omega_min > 0.0) || !(omega_min < omega_max))
        throw std::invalid_argument("log_grid: need 0 < omega_min < omega_max");
    if (points_per_decade < 1)
        throw std::invalid_argument("log_grid: points_per_decade must be >= 1");
    const double decades = std::log10(omega_max / omega_min);
    const int n = static_cast<int>(std::ceil(decades * points_per_decade - 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n - 1; ++i)
        grid.push_back(omega_min * std::pow(omega_max / omega_min,
                                            static_cast<double>(i) / (n - 1)));
    grid.push_back(omega_max);
    return grid;
}

}  // namespace relaxwave
