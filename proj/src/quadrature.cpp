#include "hsp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <utility>

namespace hsp::quadrature {

QuadratureSpec QuadratureSpec::with_kinks(std::vector<double> points) const {
    QuadratureSpec out = *this;
    out.kinks = std::move(points);
    return out;
}

void QuadratureSpec::validate(double a, double b) const {
    if (!(a < b)) {
        throw std::invalid_argument("integration interval must satisfy a < b");
    }
    if (!(abs_tol >= 1e-15) || !(rel_tol >= 1e-15)) {
        throw std::invalid_argument("quadrature tolerances must be >= 1e-15");
    }
    if (max_subdivisions < 1 || base_nodes < 1) {
        throw std::invalid_argument("max_subdivisions and base_nodes must be positive");
    }
    for (std::size_t i = 0; i < kinks.size(); ++i) {
        if (!(kinks[i] > a && kinks[i] < b)) {
            std::ostringstream msg;
            msg << "kink " << kinks[i] << " is not interior to [" << a << ", " << b << "]";
            throw std::invalid_argument(msg.str());
        }
        if (i > 0 && !(kinks[i] > kinks[i - 1])) {
            throw std::invalid_argument("kinks must be strictly increasing");
        }
    }
}

GaussRule gauss_legendre(int points) {
    GaussRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    const int m = (points + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Tricomi's initial guess, then Newton on P_points.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= points; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = points * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) <= 1e-16) {
                break;
            }
        }
        rule.nodes[i] = -x;
        rule.nodes[points - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[points - 1 - i] = w;
    }
    return rule;
}

namespace {

struct Segment {
    double a;
    double b;
    double value;
    double error;
    double rounding;
    bool splittable;
    std::size_t piece;
};

struct RuleSum {
    double value;
    double abs_value;
};

RuleSum apply_rule(const Integrand& g, const GaussRule& rule, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    CompensatedSum sum;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = rule.weights[i] * g(mid + half * rule.nodes[i]);
        sum += v;
        abs_sum += std::fabs(v);
    }
    return {half * sum.value(), std::fabs(half) * abs_sum};
}

// The refined value is the sum over both halves; the error estimate is its
// distance from the single-panel value, floored at the rounding level
// 50 eps int|g| (the QUADPACK choice). Panels at the floor are not split.
Segment evaluate(const Integrand& g, const GaussRule& rule, double a, double b, std::size_t piece) {
    const double mid = 0.5 * (a + b);
    const RuleSum whole = apply_rule(g, rule, a, b);
    const RuleSum left = apply_rule(g, rule, a, mid);
    const RuleSum right = apply_rule(g, rule, mid, b);
    const double refined = left.value + right.value;
    if (!std::isfinite(refined) || !std::isfinite(whole.value)) {
        throw std::domain_error("integrand is not finite on the integration interval");
    }
    const double diff = std::fabs(whole.value - refined);
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * (left.abs_value + right.abs_value);
    const bool resolvable = mid > a && mid < b;
    return {a, b, refined, std::max(diff, floor), floor, resolvable && diff > floor, piece};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate(a, b);
    const GaussRule rule = gauss_legendre(spec.base_nodes);

    std::vector<double> cuts;
    cuts.reserve(spec.kinks.size() + 2);
    cuts.push_back(a);
    cuts.insert(cuts.end(), spec.kinks.begin(), spec.kinks.end());
    cuts.push_back(b);

    const Integrand angular = [&f](double theta) { return f(std::cos(theta)) * std::sin(theta); };

    // Pieces ending at +-1 are integrated in theta = acos(t), which resolves
    // (1 - t^2)^alpha weights. Only the half next to the pole is mapped: cos
    // cannot resolve t near 0 finer than eps, so a singularity at the other
    // end stays in t.
    std::vector<const Integrand*> piece_integrand;
    std::vector<Segment> segments;
    auto add_piece = [&](double p, double q, bool in_theta) {
        const std::size_t piece = piece_integrand.size();
        piece_integrand.push_back(in_theta ? &angular : &f);
        segments.push_back(in_theta ? evaluate(angular, rule, std::acos(q), std::acos(p), piece)
                                    : evaluate(f, rule, p, q, piece));
    };
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double p = cuts[i];
        const double q = cuts[i + 1];
        const bool lower_pole = p == -1.0 && q <= 1.0;
        const bool upper_pole = q == 1.0 && p >= -1.0;
        if (lower_pole && upper_pole) {
            add_piece(p, q, true);
        } else if (lower_pole) {
            const double m = 0.5 * (p + q);
            add_piece(p, m, true);
            add_piece(m, q, false);
        } else if (upper_pole) {
            const double m = 0.5 * (p + q);
            add_piece(p, m, false);
            add_piece(m, q, true);
        } else {
            add_piece(p, q, false);
        }
    }

    std::vector<bool> live(segments.size(), true);
    auto by_error = [&segments](std::size_t l, std::size_t r) { return segments[l].error < segments[r].error; };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)> work(by_error);
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].splittable) work.push(i);
    }

    struct Totals {
        double value = 0.0;
        double error = 0.0;
        double rounding = 0.0;
    };
    auto totals = [&]() {
        CompensatedSum value;
        Totals t;
        for (std::size_t i = 0; i < segments.size(); ++i) {
            if (!live[i]) continue;
            value += segments[i].value;
            t.error += segments[i].error;
            t.rounding += segments[i].rounding;
        }
        t.value = value.value();
        return t;
    };
    // The requested tolerance applies to the part of the error that refinement
    // can remove; the rounding floor is reported but never chased.
    auto converged = [&spec](const Totals& t) {
        return t.error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(t.value)) + t.rounding;
    };

    Totals current = totals();
    int subdivisions = 0;
    while (!converged(current) && !work.empty()) {
        if (subdivisions >= spec.max_subdivisions) {
            current = totals();
            if (converged(current)) {
                break;
            }
            std::ostringstream msg;
            msg << "adaptive quadrature did not converge: estimate " << current.value << ", error "
                << current.error << " after " << subdivisions << " subdivisions";
            throw ConvergenceError(msg.str(), current.value, current.error);
        }
        const std::size_t top = work.top();
        work.pop();
        live[top] = false;
        const Segment parent = segments[top];
        const Integrand& g = *piece_integrand[parent.piece];
        const double mid = 0.5 * (parent.a + parent.b);
        for (const Segment& child : {evaluate(g, rule, parent.a, mid, parent.piece),
                                     evaluate(g, rule, mid, parent.b, parent.piece)}) {
            segments.push_back(child);
            live.push_back(true);
            if (child.splittable) work.push(segments.size() - 1);
            current.value += child.value;
            current.error += child.error;
            current.rounding += child.rounding;
        }
        current.value -= parent.value;
        current.error -= parent.error;
        current.rounding -= parent.rounding;
        ++subdivisions;
        if (subdivisions % 64 == 0) {
            current = totals();
        }
    }

    current = totals();
    return {current.value, current.error, subdivisions};
}

double zonal_normalization(Dimension n) {
    const double d = n.as_real();
    return std::exp(std::lgamma(0.5 * d) - std::lgamma(0.5 * (d - 1.0))) / std::sqrt(std::numbers::pi);
}

double zonal_sphere_integral(const ZonalIntegrand& g, Dimension n, const QuadratureSpec& spec) {
    spec.validate(-1.0, 1.0);
    // t = cos(theta) turns the weight (1 - t^2)^{(n-3)/2} dt into sin^{n-2}(theta) d(theta),
    // which is bounded for every n >= 2.
    std::vector<double> angles;
    for (auto it = spec.kinks.rbegin(); it != spec.kinks.rend(); ++it) {
        const double theta = std::acos(*it);
        if (angles.empty() || theta > angles.back()) {
            angles.push_back(theta);
        }
    }
    const int power = n.value() - 2;
    const Integrand weighted = [&](double theta) {
        const double half_sin = std::sin(0.5 * theta);
        const double gt = g({std::cos(theta), 2.0 * half_sin * half_sin});
        return power == 0 ? gt : gt * std::pow(std::sin(theta), power);
    };
    return zonal_normalization(n) * integrate(weighted, 0.0, std::numbers::pi, spec.with_kinks(std::move(angles))).value;
}

double zonal_sphere_integral(const Integrand& g, Dimension n, const QuadratureSpec& spec) {
    return zonal_sphere_integral([&g](ZonalPoint p) { return g(p.t); }, n, spec);
}

}  // namespace hsp::quadrature
