#include "relaxwave/models.hpp"

#include <numbers>
#include <stdexcept>

#include "trig_pi.hpp"

namespace relaxwave {

namespace {

constexpr double kPi = std::numbers::pi;

// (tau i w)^g on the principal branch, w > 0
std::complex<double> fractional_iw(double tau, double omega, double g) {
    const double mag = std::pow(tau * omega, g);
    return std::polar(mag, 0.5 * kPi * g);
}

struct ZenerDensityParams {
    double kappa0, tau_sigma, tau_eps, alpha, beta;
};

double general_density_impl(const ZenerDensityParams& p, double Omega) {
    if (!(Omega > 0.0) || !std::isfinite(Omega))
        throw std::domain_error("ml density: Omega must be positive and finite");
    const double ts_a = std::pow(p.tau_sigma, p.alpha);
    const double x = std::pow(p.tau_sigma * Omega, p.alpha);
    const double denom = x * x + 2.0 * x * detail::cos_pi(p.alpha) + 1.0;
    const double t1 = p.kappa0 * ts_a * std::pow(Omega, p.alpha - 1.0) * detail::sin_pi(p.alpha);
    const double t2 = p.kappa0 * std::pow(p.tau_eps, p.beta) *
                      (std::pow(Omega, p.beta - 1.0) * detail::sin_pi(p.beta) -
                       ts_a * std::pow(Omega, p.alpha + p.beta - 1.0) *
                           detail::sin_pi(p.alpha - p.beta));
    return (t1 - t2) / (kPi * denom);
}

double equal_density_impl(const ZenerDensityParams& p, double Omega) {
    if (!(Omega > 0.0) || !std::isfinite(Omega))
        throw std::domain_error("ml density: Omega must be positive and finite");
    const double x = std::pow(p.tau_sigma * Omega, p.alpha);
    const double denom = x * x + 2.0 * x * detail::cos_pi(p.alpha) + 1.0;
    const double numer = p.kappa0 *
                         (std::pow(p.tau_sigma, p.alpha) - std::pow(p.tau_eps, p.alpha)) *
                         std::pow(Omega, p.alpha - 1.0) * detail::sin_pi(p.alpha);
    return numer / (kPi * denom);
}

void require_ml_admissible(const ZenerMedium& m) {
    m.validate();
    if (m.alpha == 1.0)
        throw std::invalid_argument(
            "dist_ml: alpha = 1 concentrates the distribution into a point mass; "
            "use the discrete relaxation model instead");
}

}  // namespace

void ZenerMedium::validate() const {
    if (!(kappa0 > 0.0) || !std::isfinite(kappa0))
        throw std::invalid_argument("ZenerMedium: kappa0 must be positive");
    if (!(rho0 > 0.0) || !std::isfinite(rho0))
        throw std::invalid_argument("ZenerMedium: rho0 must be positive");
    if (!(tau_sigma > 0.0) || !std::isfinite(tau_sigma))
        throw std::invalid_argument("ZenerMedium: tau_sigma must be positive");
    if (!(tau_eps > 0.0) || !std::isfinite(tau_eps))
        throw std::invalid_argument("ZenerMedium: tau_eps must be positive");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("ZenerMedium: alpha must lie in (0, 1]");
    if (!(beta > 0.0 && beta <= alpha))
        throw std::invalid_argument("ZenerMedium: beta must lie in (0, alpha]");
    if (!(tau_eps <= tau_sigma))
        throw std::invalid_argument("ZenerMedium: tau_eps must not exceed tau_sigma");
}

void DiscreteRelaxation::validate() const {
    if (!(kappa0 > 0.0) || !std::isfinite(kappa0))
        throw std::invalid_argument("DiscreteRelaxation: kappa0 must be positive");
    if (!(rho0 > 0.0) || !std::isfinite(rho0))
        throw std::invalid_argument("DiscreteRelaxation: rho0 must be positive");
    for (const RelaxationMechanism& mech : mechanisms) {
        if (!(mech.tau > 0.0) || !std::isfinite(mech.tau))
            throw std::invalid_argument("DiscreteRelaxation: every tau_nu must be positive");
        if (!(mech.kappa >= 0.0) || !std::isfinite(mech.kappa))
            throw std::invalid_argument("DiscreteRelaxation: every kappa_nu must be >= 0");
    }
}

std::complex<double> kappa_zener(const ZenerMedium& m, double omega) {
    m.validate();
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw std::domain_error("kappa_zener: omega must be finite and >= 0");
    if (omega == 0.0) return {m.kappa0, 0.0};
    const std::complex<double> numer = 1.0 + fractional_iw(m.tau_eps, omega, m.beta);
    const std::complex<double> denom = 1.0 + fractional_iw(m.tau_sigma, omega, m.alpha);
    return m.kappa0 * numer / denom;
}

std::complex<double> kappa_discrete(const DiscreteRelaxation& d, double omega) {
    d.validate();
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw std::domain_error("kappa_discrete: omega must be finite and >= 0");
    if (omega == 0.0) return {d.kappa0, 0.0};
    std::complex<double> sum{0.0, 0.0};
    for (const RelaxationMechanism& mech : d.mechanisms)
        sum += mech.kappa * mech.tau / std::complex<double>{1.0, omega * mech.tau};
    return d.kappa0 - std::complex<double>{0.0, omega} * sum;
}

ComplexQuadResult kappa_continuum(const RelaxationDistribution& r, double omega,
                                  const QuadPolicy& policy) {
    if (!r.density) throw std::invalid_argument("kappa_continuum: distribution has no density");
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw std::domain_error("kappa_continuum: omega must be finite and >= 0");
    if (omega == 0.0) return {{r.kappa0, 0.0}, 0.0};

    QuadPolicy effective = policy;
    for (double s : r.split_hints) effective.split_points.push_back(s);
    const ComplexQuadResult integral =
        stieltjes_integral(r.density, omega, r.band, effective, r.origin_exponent);
    return {r.kappa0 - std::complex<double>{0.0, omega} * integral.value,
            omega * integral.error_estimate};
}

double ml_equal_density(const ZenerMedium& m, double Omega) {
    require_ml_admissible(m);
    if (m.alpha != m.beta)
        throw std::invalid_argument("ml_equal_density: requires alpha == beta");
    return equal_density_impl({m.kappa0, m.tau_sigma, m.tau_eps, m.alpha, m.beta}, Omega);
}

double ml_general_density(const ZenerMedium& m, double Omega) {
    require_ml_admissible(m);
    return general_density_impl({m.kappa0, m.tau_sigma, m.tau_eps, m.alpha, m.beta}, Omega);
}

RelaxationDistribution dist_ml_equal(const ZenerMedium& m) {
    require_ml_admissible(m);
    if (m.alpha != m.beta)
        throw std::invalid_argument("dist_ml_equal: requires alpha == beta");
    const ZenerDensityParams p{m.kappa0, m.tau_sigma, m.tau_eps, m.alpha, m.beta};
    RelaxationDistribution dist;
    dist.kappa0 = m.kappa0;
    dist.rho0 = m.rho0;
    dist.density = [p](double Omega) { return equal_density_impl(p, Omega); };
    dist.band = Band{0.0, kInfiniteRate};
    dist.origin_exponent = m.alpha;
    dist.split_hints = {1.0 / m.tau_sigma};
    return dist;
}

RelaxationDistribution dist_ml_general(const ZenerMedium& m) {
    require_ml_admissible(m);
    const ZenerDensityParams p{m.kappa0, m.tau_sigma, m.tau_eps, m.alpha, m.beta};
    RelaxationDistribution dist;
    dist.kappa0 = m.kappa0;
    dist.rho0 = m.rho0;
    dist.density = [p](double Omega) { return general_density_impl(p, Omega); };
    dist.band = Band{0.0, kInfiniteRate};
    dist.origin_exponent = m.beta;
    dist.split_hints = {1.0 / m.tau_sigma};
    return dist;
}

double min_density_scan(const RelaxationDistribution& r, double lo, double hi,
                        int points_per_decade) {
    if (!r.density) throw std::invalid_argument("min_density_scan: distribution has no density");
    if (!(lo > 0.0) || !(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("min_density_scan: need finite 0 < lo < hi");
    if (points_per_decade < 1)
        throw std::invalid_argument("min_density_scan: points_per_decade must be >= 1");
    const double decades = std::log10(hi / lo);
    const int n = std::max(2, static_cast<int>(std::ceil(decades * points_per_decade)) + 1);
    double min_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double W = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
        min_value = std::min(min_value, r.density(W));
    }
    return min_value;
}

double medium_rho0(const Medium& m) {
    return std::visit([](const auto& model) { return model.rho0; }, m);
}

double medium_kappa0(const Medium& m) {
    return std::visit([](const auto& model) { return model.kappa0; }, m);
}

ComplexQuadResult kappa(const Medium& m, double omega, const QuadPolicy& policy) {
    if (const auto* z = std::get_if<ZenerMedium>(&m))
        return {kappa_zener(*z, omega), 0.0};
    if (const auto* d = std::get_if<DiscreteRelaxation>(&m))
        return {kappa_discrete(*d, omega), 0.0};
    return kappa_continuum(std::get<RelaxationDistribution>(m), omega, policy);
}

}  // namespace relaxwave
