#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include "relaxwave/models.hpp"

namespace relaxwave {

struct Normalization {
    double omega_ref = 0.0;  // rad/s
    double alpha_ref = 0.0;  // Np/m, attenuation at omega_ref
};

// Sampled attenuation / phase-velocity curve. attenuation holds the raw
// alpha_k values; when a normalization record is present the normalized view
// is attenuation / alpha_ref.
struct DispersionCurve {
    std::vector<double> omegas;          // rad/s, strictly increasing
    std::vector<double> attenuation;     // Np/m
    std::vector<double> phase_velocity;  // m/s
    std::optional<Normalization> normalization;

    void validate() const;
    double normalized_attenuation(std::size_t i) const;
};

// k = w sqrt(rho0 kappa) on the forward-propagating branch (Re k > 0); with
// Im kappa <= 0 this gives alpha_k = -Im k >= 0.
std::complex<double> wavenumber(std::complex<double> kappa, double omega, double rho0);

// Per-frequency alpha_k(w) = -w sqrt(rho0) Im sqrt(kappa) and
// c_p(w) = 1 / (sqrt(rho0) Re sqrt(kappa)). Quadrature failures of the
// continuum model are rethrown annotated with the failing omega; the largest
// kappa error estimate over the grid is reported through max_quad_error when
// given.
DispersionCurve evaluate_curve(const Medium& model, const std::vector<double>& omega_grid,
                               const QuadPolicy& policy = {}, double* max_quad_error = nullptr);

// Attaches a normalization record with alpha_ref taken at omega_ref
// (log-log interpolated between grid points). Idempotent.
DispersionCurve normalize(const DispersionCurve& curve, double omega_ref);

struct RegimeSlopes {
    double low = 0.0;
    double mid = 0.0;
    double high = 0.0;
};

// Least-squares log-log attenuation slopes in the three power-law regimes of
// the fractional Zener model. Windows (in omega tau_sigma units, with
// R = tau_sigma / tau_eps >= 1e3):
//   low  [1e-4, 1e-3]         well below the 1/tau_sigma corner
//   mid  R^0.65 * 10^(+-1/8)  between the corners, placed where the fitted
//                             exponent tracks 1 - alpha/2 across alpha
//   high [1e2, 1e4] / tau_eps omega tau_eps in [1e2, 1e4]
RegimeSlopes regime_slopes(const DispersionCurve& curve, const ZenerMedium& medium);

RegimeSlopes theoretical_slopes(const ZenerMedium& medium);  // (1+a, 1-a/2, 1-a)

// CSV columns: omega_norm,alpha_k,alpha_k_norm,c_p at 12 significant digits,
// omega_norm = omega tau_sigma.
void write_csv(std::ostream& out, const DispersionCurve& curve, double tau_sigma);

// Log-spaced grid with points_per_decade points per decade, endpoints included.
std::vector<double> log_grid(double omega_min, double omega_max, int points_per_decade);

}  // namespace relaxwave
