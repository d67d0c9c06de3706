#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <variant>
#include <vector>

#include "relaxwave/quad.hpp"

namespace relaxwave {

// Five-parameter fractional Zener medium. The thermodynamic admissibility
// constraints are 0 < alpha <= 1, 0 < beta <= alpha and tau_eps <= tau_sigma
// (equality is the lossless limit).
struct ZenerMedium {
    double kappa0 = 1.0;     // Pa^-1
    double tau_sigma = 1.0;  // s
    double tau_eps = 1e-3;   // s
    double alpha = 0.5;
    double beta = 0.5;
    double rho0 = 1.0;       // kg/m^3

    void validate() const;
    double c0() const { return 1.0 / std::sqrt(rho0 * kappa0); }
};

struct RelaxationMechanism {
    double tau = 1.0;    // s
    double kappa = 0.0;  // Pa^-1
};

// N discrete relaxation processes (Debye terms) on top of kappa0.
struct DiscreteRelaxation {
    double kappa0 = 1.0;
    double rho0 = 1.0;
    std::vector<RelaxationMechanism> mechanisms;

    void validate() const;
};

// Continuum of relaxation mechanisms with compressibility-per-rate density
// kappa_nu(Omega) supported on band [Omega1, Omega2].
struct RelaxationDistribution {
    double kappa0 = 1.0;
    double rho0 = 1.0;
    std::function<double(double)> density;  // Pa^-1 s
    Band band{0.0, kInfiniteRate};
    // density ~ C Omega^{origin_exponent - 1} as Omega -> 0; drives the
    // endpoint substitution in the quadrature
    double origin_exponent = 1.0;
    std::vector<double> split_hints;  // characteristic rates worth cutting at
};

// kappa0 (1 + (tau_eps i w)^beta) / (1 + (tau_sigma i w)^alpha), principal
// branch (i w)^g = w^g e^{i pi g / 2} for w > 0; exactly kappa0 at w = 0.
std::complex<double> kappa_zener(const ZenerMedium& m, double omega);

// kappa0 - i w sum_nu kappa_nu tau_nu / (1 + i w tau_nu)
std::complex<double> kappa_discrete(const DiscreteRelaxation& d, double omega);

// kappa0 - i w int density(Omega) / (Omega + i w) dOmega, by adaptive
// quadrature; the result carries the propagated error estimate.
ComplexQuadResult kappa_continuum(const RelaxationDistribution& r, double omega,
                                  const QuadPolicy& policy = {});

// Mittag-Leffler relaxation distributions making the continuum model equal to
// the fractional Zener one. dist_ml_equal requires alpha == beta;
// dist_ml_general covers beta <= alpha and reduces to the former when equal.
// Both reject alpha == 1 (the density degenerates to a point mass there; use
// the discrete model instead).
RelaxationDistribution dist_ml_equal(const ZenerMedium& m);
RelaxationDistribution dist_ml_general(const ZenerMedium& m);

double ml_equal_density(const ZenerMedium& m, double Omega);
double ml_general_density(const ZenerMedium& m, double Omega);

// Minimum of the density over a log-spaced scan of [lo, hi]; for beta < alpha
// the general distribution goes negative near the origin, and this reports
// how far.
double min_density_scan(const RelaxationDistribution& r, double lo, double hi,
                        int points_per_decade = 32);

using Medium = std::variant<ZenerMedium, DiscreteRelaxation, RelaxationDistribution>;

double medium_rho0(const Medium& m);
double medium_kappa0(const Medium& m);
ComplexQuadResult kappa(const Medium& m, double omega, const QuadPolicy& policy = {});

}  // namespace relaxwave
