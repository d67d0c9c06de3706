#include "relaxwave/quad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace relaxwave {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double simpson(double h, double fa, double fm, double fb) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

struct SimpsonWorker {
    const RealFunction& f;
    int max_depth;
    double value = 0.0;
    double err = 0.0;
    double abs_value = 0.0;
    int bad_intervals = 0;
    double first_bad_point = 0.0;

    double eval(double x) {
        const double y = f(x);
        if (!std::isfinite(y)) {
            std::ostringstream msg;
            msg << "adaptive_simpson: integrand not finite at x = " << x;
            throw std::invalid_argument(msg.str());
        }
        return y;
    }

    void recurse(double a, double fa, double m, double fm, double b, double fb,
                 double whole, double tol, int depth) {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = simpson(m - a, fa, flm, fm);
        const double right = simpson(b - m, fm, frm, fb);
        const double delta = left + right - whole;
        const bool interval_collapsed = lm <= a || rm >= b;
        if (std::abs(delta) <= 15.0 * tol || depth >= max_depth || interval_collapsed) {
            if (std::abs(delta) > 15.0 * tol) {
                if (bad_intervals == 0) first_bad_point = m;
                ++bad_intervals;
            }
            const double contribution = left + right + delta / 15.0;
            value += contribution;
            err += std::abs(delta) / 15.0;
            abs_value += std::abs(contribution);
            return;
        }
        recurse(a, fa, lm, flm, m, fm, left, tol, depth + 1);
        recurse(m, fm, rm, frm, b, fb, right, tol, depth + 1);
    }
};

}  // namespace

void QuadPolicy::validate() const {
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol))
        throw std::invalid_argument("QuadPolicy: rel_tol must be positive and finite");
    if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol))
        throw std::invalid_argument("QuadPolicy: abs_tol must be non-negative and finite");
    if (max_depth < 10 || max_depth > 60)
        throw std::invalid_argument("QuadPolicy: max_depth must lie in [10, 60]");
    for (double s : split_points)
        if (!std::isfinite(s))
            throw std::invalid_argument("QuadPolicy: split points must be finite");
}

QuadResult adaptive_simpson(const RealFunction& f, double a, double b, const QuadPolicy& policy) {
    policy.validate();
    if (!f) throw std::invalid_argument("adaptive_simpson: integrand is empty");
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::invalid_argument("adaptive_simpson: need finite limits with a < b");

    std::vector<double> edges{a};
    std::vector<double> cuts(policy.split_points);
    std::sort(cuts.begin(), cuts.end());
    for (double c : cuts)
        if (c > edges.back() && c < b) edges.push_back(c);
    edges.push_back(b);

    SimpsonWorker worker{f, policy.max_depth};

    struct Panel {
        double a, m, b, fa, fm, fb, whole;
    };
    std::vector<Panel> panels;
    panels.reserve(edges.size() - 1);
    double scale = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p;
        p.a = edges[i];
        p.b = edges[i + 1];
        p.m = 0.5 * (p.a + p.b);
        p.fa = worker.eval(p.a);
        p.fm = worker.eval(p.m);
        p.fb = worker.eval(p.b);
        p.whole = simpson(p.b - p.a, p.fa, p.fm, p.fb);
        scale += std::abs(p.whole);
        panels.push_back(p);
    }

    const double tol = std::max(policy.abs_tol, policy.rel_tol * scale);
    const double per_panel = tol / static_cast<double>(panels.size());
    for (const Panel& p : panels)
        worker.recurse(p.a, p.fa, p.m, p.fm, p.b, p.fb, p.whole, per_panel, 0);

    worker.err += 50.0 * kEps * worker.abs_value;
    if (worker.bad_intervals > 0) {
        std::ostringstream msg;
        msg << "adaptive_simpson: tolerance not met within depth budget (" << worker.bad_intervals
            << " interval(s), first near x = " << worker.first_bad_point << ")";
        throw QuadratureError(msg.str(), worker.value, worker.err);
    }
    return {worker.value, worker.err};
}

namespace {

// Integrates h over [0, c] where h ~ C u_exp-law at the origin: when
// map_exponent < 1 the substitution u = Omega^map_exponent is applied, which
// turns an integrable algebraic endpoint into a bounded integrand. Evaluation
// points are clamped away from the endpoints so the density is only sampled
// on the open interval.
QuadResult integrate_origin_panel(const RealFunction& h, double c, double map_exponent,
                                  const QuadPolicy& policy) {
    if (map_exponent < 1.0) {
        const double g = map_exponent;
        const double u_hi = std::pow(c, g);
        const double u_floor = u_hi * 1e-15;
        const double inv_g = 1.0 / g;
        RealFunction mapped = [h, g, inv_g, u_floor](double u) {
            const double ue = std::max(u, u_floor);
            const double omega_r = std::pow(ue, inv_g);
            return h(omega_r) * inv_g * std::pow(ue, inv_g - 1.0);
        };
        return adaptive_simpson(mapped, 0.0, u_hi, policy);
    }
    const double floor = c * 1e-15;
    RealFunction clamped = [h, floor](double x) { return h(std::max(x, floor)); };
    return adaptive_simpson(clamped, 0.0, c, policy);
}

// Integrates h over [s, infinity) through v = 1/Omega.
QuadResult integrate_tail_panel(const RealFunction& h, double s, const QuadPolicy& policy) {
    const double v_hi = 1.0 / s;
    const double v_floor = v_hi * 1e-15;
    RealFunction mapped = [h, v_floor](double v) {
        const double ve = std::max(v, v_floor);
        return h(1.0 / ve) / (ve * ve);
    };
    return adaptive_simpson(mapped, 0.0, v_hi, policy);
}

}  // namespace

ComplexQuadResult stieltjes_integral(const RealFunction& density, double omega, Band band,
                                     const QuadPolicy& policy, double origin_exponent) {
    policy.validate();
    if (!density) throw std::invalid_argument("stieltjes_integral: density is empty");
    if (!(band.lo >= 0.0) || !(band.lo < band.hi) || !std::isfinite(band.lo))
        throw std::invalid_argument("stieltjes_integral: need 0 <= Omega1 < Omega2");
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("stieltjes_integral: omega must be finite and >= 0");
    if (!std::isfinite(origin_exponent))
        throw std::invalid_argument("stieltjes_integral: origin exponent must be finite");

    // The integrand picks up a 1/Omega factor at omega = 0, shifting the
    // integrability threshold at the origin.
    if (band.lo == 0.0) {
        const double effective = omega == 0.0 ? origin_exponent - 1.0 : origin_exponent;
        if (effective <= 0.0)
            throw std::invalid_argument(
                "stieltjes_integral: density singularity exponent <= -1 at Omega = 0 is not "
                "integrable");
    }

    const bool infinite_tail = std::isinf(band.hi);
    double fin_hi = band.hi;
    if (infinite_tail) {
        double s = omega;
        for (double sp : policy.split_points) s = std::max(s, sp);
        if (s <= 0.0) s = 1.0;
        if (s <= band.lo) s = 10.0 * band.lo;
        fin_hi = s;
    }

    std::vector<double> edges;
    edges.push_back(band.lo);
    std::vector<double> cuts(policy.split_points);
    if (omega > 0.0) cuts.push_back(omega);
    std::sort(cuts.begin(), cuts.end());
    for (double c : cuts)
        if (c > edges.back() && c < fin_hi) edges.push_back(c);
    edges.push_back(fin_hi);

    QuadPolicy panel_policy = policy;
    panel_policy.split_points.clear();
    const std::size_t n_panels = (edges.size() - 1) + (infinite_tail ? 1 : 0);
    panel_policy.abs_tol = policy.abs_tol / static_cast<double>(2 * n_panels);

    const double w2 = omega * omega;
    RealFunction h_re = [density, w2](double W) { return density(W) * W / (W * W + w2); };
    RealFunction h_im = [density, w2](double W) { return density(W) / (W * W + w2); };

    auto run = [&](const RealFunction& h) {
        QuadResult total;
        std::size_t first = 0;
        if (edges[0] == 0.0) {
            const double map_exp = omega == 0.0 ? origin_exponent - 1.0 : origin_exponent;
            const QuadResult r = integrate_origin_panel(h, edges[1], map_exp, panel_policy);
            total.value += r.value;
            total.error_estimate += r.error_estimate;
            first = 1;
        }
        for (std::size_t i = first; i + 1 < edges.size(); ++i) {
            const QuadResult r = adaptive_simpson(h, edges[i], edges[i + 1], panel_policy);
            total.value += r.value;
            total.error_estimate += r.error_estimate;
        }
        if (infinite_tail) {
            const QuadResult r = integrate_tail_panel(h, fin_hi, panel_policy);
            total.value += r.value;
            total.error_estimate += r.error_estimate;
        }
        return total;
    };

    const QuadResult re = run(h_re);
    if (omega == 0.0) return {{re.value, 0.0}, re.error_estimate};

    const QuadResult im = run(h_im);
    return {{re.value, -omega * im.value}, re.error_estimate + omega * im.error_estimate};
}

}  // namespace relaxwave
