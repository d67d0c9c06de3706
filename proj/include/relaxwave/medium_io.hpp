#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relaxwave/models.hpp"

namespace relaxwave {

// Flat key-value medium description. Recognized keys: kappa0, tau_sigma,
// tau_eps, alpha, beta, rho0, plus repeated tau_nu / kappa_nu pairs for
// discrete mechanisms. Lines are `key = value` (the '=' is optional), '#'
// starts a comment.
struct MediumSpec {
    std::optional<double> kappa0;
    std::optional<double> tau_sigma;
    std::optional<double> tau_eps;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> rho0;
    std::vector<RelaxationMechanism> mechanisms;
};

MediumSpec parse_medium(std::istream& in);
MediumSpec parse_medium_file(const std::string& path);
void write_medium(std::ostream& out, const MediumSpec& spec);

// Builders fill unset keys with the normalized defaults kappa0 = 1 Pa^-1,
// tau_sigma = 1 s, rho0 = 1 kg/m^3. make_zener requires alpha to be set;
// beta defaults to alpha and tau_eps to tau_sigma / 1000.
ZenerMedium make_zener(const MediumSpec& spec);
DiscreteRelaxation make_discrete(const MediumSpec& spec);

}  // namespace relaxwave
