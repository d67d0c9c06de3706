#include "relaxwave/medium_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace relaxwave {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_value(const std::string& token, int line_no) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size()) {
        std::ostringstream msg;
        msg << "medium file line " << line_no << ": cannot parse numeric value '" << token << "'";
        throw std::invalid_argument(msg.str());
    }
    return v;
}

std::string format_value(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

MediumSpec parse_medium(std::istream& in) {
    MediumSpec spec;
    std::vector<double> taus;
    std::vector<double> kappas;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string text = trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        std::string key, value;
        if (eq != std::string::npos) {
            key = trim(text.substr(0, eq));
            value = trim(text.substr(eq + 1));
        } else {
            const auto space = text.find_first_of(" \t");
            if (space == std::string::npos) {
                std::ostringstream msg;
                msg << "medium file line " << line_no << ": expected 'key = value'";
                throw std::invalid_argument(msg.str());
            }
            key = trim(text.substr(0, space));
            value = trim(text.substr(space + 1));
        }
        const double v = parse_value(value, line_no);
        if (key == "kappa0") spec.kappa0 = v;
        else if (key == "tau_sigma") spec.tau_sigma = v;
        else if (key == "tau_eps") spec.tau_eps = v;
        else if (key == "alpha") spec.alpha = v;
        else if (key == "beta") spec.beta = v;
        else if (key == "rho0") spec.rho0 = v;
        else if (key == "tau_nu") taus.push_back(v);
        else if (key == "kappa_nu") kappas.push_back(v);
        else {
            std::ostringstream msg;
            msg << "medium file line " << line_no << ": unknown key '" << key << "'";
            throw std::invalid_argument(msg.str());
        }
    }
    if (taus.size() != kappas.size())
        throw std::invalid_argument(
            "medium file: tau_nu and kappa_nu entries must come in pairs");
    for (std::size_t i = 0; i < taus.size(); ++i)
        spec.mechanisms.push_back({taus[i], kappas[i]});
    return spec;
}

MediumSpec parse_medium_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open medium file '" + path + "'");
    return parse_medium(in);
}

void write_medium(std::ostream& out, const MediumSpec& spec) {
    auto emit = [&out](const char* key, const std::optional<double>& v) {
        if (v) out << key << " = " << format_value(*v) << "\n";
    };
    emit("kappa0", spec.kappa0);
    emit("tau_sigma", spec.tau_sigma);
    emit("tau_eps", spec.tau_eps);
    emit("alpha", spec.alpha);
    emit("beta", spec.beta);
    emit("rho0", spec.rho0);
    for (const RelaxationMechanism& mech : spec.mechanisms) {
        out << "tau_nu = " << format_value(mech.tau) << "\n";
        out << "kappa_nu = " << format_value(mech.kappa) << "\n";
    }
}

ZenerMedium make_zener(const MediumSpec& spec) {
    if (!spec.alpha)
        throw std::invalid_argument("medium: alpha is required for a Zener medium");
    ZenerMedium m;
    m.kappa0 = spec.kappa0.value_or(1.0);
    m.tau_sigma = spec.tau_sigma.value_or(1.0);
    m.tau_eps = spec.tau_eps.value_or(m.tau_sigma / 1000.0);
    m.alpha = *spec.alpha;
    m.beta = spec.beta.value_or(m.alpha);
    m.rho0 = spec.rho0.value_or(1.0);
    m.validate();
    return m;
}

DiscreteRelaxation make_discrete(const MediumSpec& spec) {
    DiscreteRelaxation d;
    d.kappa0 = spec.kappa0.value_or(1.0);
    d.rho0 = spec.rho0.value_or(1.0);
    d.mechanisms = spec.mechanisms;
    d.validate();
    return d;
}

}  // namespace relaxwave
