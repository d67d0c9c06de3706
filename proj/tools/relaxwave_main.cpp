// Command-line front end: frequency sweeps, model-equivalence verification and
// attenuation power-law slope extraction for the relaxation loss models.
//
// Exit codes: 0 success / PASS, 2 invalid configuration, 3 quadrature or
// convergence failure, 4 verification FAIL.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relaxwave/dispersion.hpp"
#include "relaxwave/medium_io.hpp"
#include "relaxwave/models.hpp"
#include "relaxwave/quad.hpp"
#include "relaxwave/specfun.hpp"

namespace {

using namespace relaxwave;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitQuadrature = 3;
constexpr int kExitVerifyFail = 4;

struct Options {
    std::string medium_file;
    std::string family = "zener";
    double alpha = 0.0;
    bool alpha_set = false;
    double beta = 0.0;
    bool beta_set = false;
    double tau_ratio = 0.0;
    bool tau_ratio_set = false;
    double omega_min = 1e-4;  // in omega * tau_sigma
    double omega_max = 1e8;
    int ppd = 60;
    int points = 25;  // verify grid
    std::string band = "";
    double rel_tol = 1e-8;
    int max_depth = 40;
    std::string out_path;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

MediumSpec load_spec(const Options& opt) {
    MediumSpec spec;
    if (!opt.medium_file.empty()) spec = parse_medium_file(opt.medium_file);
    // flags win over file keys
    if (opt.alpha_set) spec.alpha = opt.alpha;
    if (opt.beta_set) spec.beta = opt.beta;
    if (opt.tau_ratio_set) {
        if (!(opt.tau_ratio > 0.0))
            throw std::invalid_argument("--tau-ratio must be positive");
        spec.tau_eps = spec.tau_sigma.value_or(1.0) / opt.tau_ratio;
    }
    return spec;
}

Band parse_band(const std::string& text, double tau_sigma) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--band expects '<lo>:<hi>' in Omega tau_sigma units");
    const std::string lo_s = text.substr(0, colon);
    const std::string hi_s = text.substr(colon + 1);
    Band band;
    try {
        band.lo = std::stod(lo_s) / tau_sigma;
        band.hi = (hi_s == "inf") ? kInfiniteRate : std::stod(hi_s) / tau_sigma;
    } catch (const std::exception&) {
        throw std::invalid_argument("--band: cannot parse '" + text + "'");
    }
    if (!(band.lo >= 0.0) || !(band.lo < band.hi))
        throw std::invalid_argument("--band: need 0 <= lo < hi");
    return band;
}

QuadPolicy make_policy(const Options& opt) {
    QuadPolicy policy;
    policy.rel_tol = opt.rel_tol;
    policy.max_depth = opt.max_depth;
    policy.validate();
    return policy;
}

Medium build_medium(const Options& opt, const MediumSpec& spec, double* tau_sigma_out) {
    if (opt.family == "zener") {
        ZenerMedium m = make_zener(spec);
        *tau_sigma_out = m.tau_sigma;
        return m;
    }
    if (opt.family == "discrete") {
        DiscreteRelaxation d = make_discrete(spec);
        *tau_sigma_out = spec.tau_sigma.value_or(1.0);
        return d;
    }
    if (opt.family == "continuum-ml") {
        ZenerMedium m = make_zener(spec);
        *tau_sigma_out = m.tau_sigma;
        RelaxationDistribution dist = dist_ml_general(m);
        if (!opt.band.empty()) dist.band = parse_band(opt.band, m.tau_sigma);
        return dist;
    }
    throw std::invalid_argument("--family must be zener, discrete or continuum-ml");
}

int cmd_sweep(const Options& opt) {
    if (!(opt.omega_min > 0.0) || !(opt.omega_min < opt.omega_max))
        throw std::invalid_argument("empty frequency range: need 0 < --omega-min < --omega-max");
    if (opt.out_path.empty()) throw std::invalid_argument("sweep requires --out <path>");
    if (!opt.band.empty() && opt.family != "continuum-ml")
        throw std::invalid_argument("--band only applies to the continuum-ml family");

    const MediumSpec spec = load_spec(opt);
    double tau_sigma = 1.0;
    const Medium medium = build_medium(opt, spec, &tau_sigma);
    const QuadPolicy policy = make_policy(opt);

    const std::vector<double> grid =
        log_grid(opt.omega_min / tau_sigma, opt.omega_max / tau_sigma, opt.ppd);
    double max_err = 0.0;
    DispersionCurve curve = evaluate_curve(medium, grid, policy, &max_err);

    const double omega_ref = 1.0 / tau_sigma;
    if (omega_ref >= grid.front() && omega_ref <= grid.back()) {
        try {
            curve = normalize(curve, omega_ref);
        } catch (const std::domain_error&) {
            // lossless curve: leave alpha_k_norm equal to alpha_k
        }
    }

    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + opt.out_path + "'");
    write_csv(out, curve, tau_sigma);
    out.close();

    const auto [att_min, att_max] =
        std::minmax_element(curve.attenuation.begin(), curve.attenuation.end());
    const auto [cp_min, cp_max] =
        std::minmax_element(curve.phase_velocity.begin(), curve.phase_velocity.end());
    std::cout << "wrote " << opt.out_path << " (" << curve.omegas.size() << " points)\n"
              << "family " << opt.family << ", omega*tau_sigma in [" << fmt(opt.omega_min)
              << ", " << fmt(opt.omega_max) << "]\n"
              << "attenuation min " << fmt(*att_min) << " max " << fmt(*att_max) << " Np/m\n"
              << "phase velocity min " << fmt(*cp_min) << " max " << fmt(*cp_max) << " m/s\n"
              << "max quadrature error estimate " << fmt(max_err) << "\n";
    if (curve.normalization)
        std::cout << "attenuation normalized at omega*tau_sigma = 1\n";
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    if (!(opt.omega_min > 0.0) || !(opt.omega_min < opt.omega_max))
        throw std::invalid_argument("empty frequency range: need 0 < --omega-min < --omega-max");
    if (opt.points < 2) throw std::invalid_argument("--points must be >= 2");

    const MediumSpec spec = load_spec(opt);
    const ZenerMedium medium = make_zener(spec);
    const RelaxationDistribution dist = dist_ml_general(medium);
    const QuadPolicy policy = make_policy(opt);

    const double ts = medium.tau_sigma;
    double max_dev = 0.0;
    double worst_omega = 0.0;
    for (int i = 0; i < opt.points; ++i) {
        const double t = static_cast<double>(i) / (opt.points - 1);
        const double w = (opt.omega_min / ts) * std::pow(opt.omega_max / opt.omega_min, t);
        const std::complex<double> kz = kappa_zener(medium, w);
        const ComplexQuadResult kn = kappa_continuum(dist, w, policy);
        const double dev = std::abs(kn.value - kz) / std::abs(kz);
        if (dev > max_dev) {
            max_dev = dev;
            worst_omega = w;
        }
    }

    const double scan_lo = 1e-4 / ts;
    const double scan_hi = 1e4 / ts;
    const double min_dens = min_density_scan(dist, scan_lo, scan_hi);

    const double threshold = 1e-4;
    std::cout << "equivalence check: alpha " << fmt(medium.alpha) << ", beta "
              << fmt(medium.beta) << ", tau_sigma/tau_eps "
              << fmt(medium.tau_sigma / medium.tau_eps) << "\n"
              << "grid: " << opt.points << " log points, omega*tau_sigma in ["
              << fmt(opt.omega_min) << ", " << fmt(opt.omega_max) << "]\n"
              << "max |kappa_N - kappa_Z| / |kappa_Z| = " << fmt(max_dev)
              << " at omega*tau_sigma = " << fmt(worst_omega * ts) << "\n"
              << "min distribution density over Omega*tau_sigma in [1e-4, 1e4]: "
              << fmt(min_dens) << (min_dens < 0.0 ? " (sign-indefinite)" : "") << "\n";
    if (max_dev <= threshold) {
        std::cout << "PASS (threshold " << fmt(threshold) << ")\n";
        return kExitOk;
    }
    std::cout << "FAIL (threshold " << fmt(threshold) << ")\n";
    return kExitVerifyFail;
}

int cmd_slopes(const Options& opt) {
    const MediumSpec spec = load_spec(opt);
    const ZenerMedium medium = make_zener(spec);
    if (medium.alpha != medium.beta)
        throw std::invalid_argument("slopes requires alpha == beta");
    if (!(medium.tau_sigma / medium.tau_eps >= 1e3))
        throw std::invalid_argument(
            "slopes: no intermediate plateau, needs tau_sigma / tau_eps >= 1e3");

    const double ts = medium.tau_sigma;
    const std::vector<double> grid = log_grid(1e-4 / ts, 1e8 / ts, opt.ppd);
    const DispersionCurve curve = evaluate_curve(medium, grid);
    const RegimeSlopes fitted = regime_slopes(curve, medium);
    const RegimeSlopes theory = theoretical_slopes(medium);

    auto row = [](const char* name, double f, double t) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  %-5s fitted %8.4f   theory %8.4f   deviation %+8.4f\n",
                      name, f, t, f - t);
        return std::string(buf);
    };
    std::cout << "attenuation power-law slopes: alpha = beta = " << fmt(medium.alpha)
              << ", tau_sigma/tau_eps = " << fmt(medium.tau_sigma / medium.tau_eps) << "\n"
              << row("low", fitted.low, theory.low) << row("mid", fitted.mid, theory.mid)
              << row("high", fitted.high, theory.high);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relaxation-loss acoustic dispersion toolkit"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--medium", opt.medium_file, "medium description file");
        cmd->add_option("--alpha", opt.alpha, "fractional order alpha")
            ->each([&opt](const std::string&) { opt.alpha_set = true; });
        cmd->add_option("--beta", opt.beta, "fractional order beta (default: alpha)")
            ->each([&opt](const std::string&) { opt.beta_set = true; });
        cmd->add_option("--tau-ratio", opt.tau_ratio, "tau_sigma / tau_eps (default 1000)")
            ->each([&opt](const std::string&) { opt.tau_ratio_set = true; });
        cmd->add_option("--rel-tol", opt.rel_tol, "quadrature relative tolerance");
        cmd->add_option("--max-depth", opt.max_depth, "quadrature subdivision depth limit");
    };

    CLI::App* sweep = app.add_subcommand("sweep", "frequency sweep to CSV");
    add_common(sweep);
    sweep->add_option("--family", opt.family, "zener | discrete | continuum-ml");
    sweep->add_option("--omega-min", opt.omega_min, "lowest omega*tau_sigma (default 1e-4)");
    sweep->add_option("--omega-max", opt.omega_max, "highest omega*tau_sigma (default 1e8)");
    sweep->add_option("--ppd", opt.ppd, "grid points per decade (default 60)");
    sweep->add_option("--band", opt.band, "relaxation band <lo>:<hi> in Omega*tau_sigma ('inf' allowed)");
    sweep->add_option("--out", opt.out_path, "output CSV path");

    CLI::App* verify = app.add_subcommand(
        "verify", "verify continuum Mittag-Leffler distribution against the Zener model");
    add_common(verify);
    verify->add_option("--omega-min", opt.omega_min, "lowest omega*tau_sigma")
        ->default_val(1e-3);
    verify->add_option("--omega-max", opt.omega_max, "highest omega*tau_sigma")
        ->default_val(1e3);
    verify->add_option("--points", opt.points, "number of grid points (default 25)");

    CLI::App* slopes = app.add_subcommand("slopes", "fit the three attenuation power laws");
    add_common(slopes);
    slopes->add_option("--ppd", opt.ppd, "grid points per decade (default 60)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(opt);
        if (verify->parsed()) return cmd_verify(opt);
        return cmd_slopes(opt);
    } catch (const QuadratureError& e) {
        std::cerr << "quadrature failure: " << e.what() << "\n";
        return kExitQuadrature;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitQuadrature;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
