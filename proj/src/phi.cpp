#include "hsp/phi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hsp/numdiff.hpp"
#include "hsp/specfun.hpp"

namespace hsp::phi {

namespace {

void require_unit_interval(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error(std::string(what) + ": argument must lie in [0, 1]");
    }
}

double kink(Dimension n, double rho) { return (n.as_real() - 2.0) / n.as_real() * rho; }

quadrature::QuadratureSpec tight_spec() {
    quadrature::QuadratureSpec spec;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-15;
    return spec;
}

double relative_margin(double a, double b, double tol) {
    return tol * std::max(std::fabs(a), std::fabs(b)) - std::fabs(a - b);
}

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::quad: return "quad";
        case Method::series: return "series";
        case Method::closed3: return "closed3";
        case Method::second_closed: return "second_closed";
        case Method::second_series: return "second_series";
        case Method::second_fd: return "second_fd";
    }
    return "unknown";
}

PhiEvaluation phi_quad(Dimension n, double rho, const quadrature::QuadratureSpec& spec) {
    n.require_at_least(3, "phi_quad");
    require_unit_interval(rho, "phi_quad");
    const double nn = n.as_real();
    const double s = kink(n, rho);
    const double weight_exponent = 0.5 * (nn - 3.0);
    const double kernel_exponent = 0.5 * (nn - 2.0);
    const quadrature::Integrand integrand = [=](double t) {
        const double weight = n.value() == 3 ? 1.0 : std::pow((1.0 - t) * (1.0 + t), weight_exponent);
        // 1 - 2 t rho + rho^2, written to stay accurate near t = rho = 1.
        const double d = (1.0 - rho) * (1.0 - rho) + 2.0 * rho * (1.0 - t);
        if (weight == 0.0 || d == 0.0) {
            return 0.0;
        }
        return std::fabs(t - s) * weight / std::pow(d, kernel_exponent);
    };
    const auto result = quadrature::integrate(integrand, -1.0, 1.0, spec.with_kinks({s}));
    return {n, rho, result.value, Method::quad, result.error_estimate};
}

int default_series_degree(double rho) { return rho <= 0.9 ? 200 : 400; }

PhiEvaluation phi_series(Dimension n, double rho, std::optional<int> K, const quadrature::QuadratureSpec& spec) {
    n.require_at_least(3, "phi_series");
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error("phi_series: rho must lie in [0, 1)");
    }
    const int degree = K.value_or(default_series_degree(rho));
    if (degree < 1) {
        throw std::domain_error("phi_series: truncation degree must be >= 1");
    }
    const double nn = n.as_real();
    const double s = kink(n, rho);
    const double lambda = 0.5 * (nn - 2.0);

    CompensatedSum sum;
    sum += specfun::abs_kernel_coefficient(lambda, 0, s, spec);
    sum += rho * specfun::abs_kernel_coefficient(lambda, 1, s, spec);

    // k >= 2 terms: C_{k-2}^{(n+2)/2}(s) for k = 2 .. degree + 1 (the last one
    // is the first omitted term).
    const double envelope = std::pow((1.0 - s) * (1.0 + s), 0.5 * (nn + 1.0));
    const std::vector<double> c = specfun::gegenbauer_sequence(0.5 * (nn + 2.0), std::max(degree - 1, 0), s);
    auto term = [&](int k, double rho_k) {
        const double kk = k;
        const double coeff = 2.0 * nn * (nn - 2.0) / (kk * (kk - 1.0) * (kk + nn - 2.0) * (kk + nn - 1.0));
        return coeff * envelope * c[k - 2] * rho_k;
    };
    double rho_k = rho * rho;
    for (int k = 2; k <= degree; ++k) {
        sum += term(k, rho_k);
        rho_k *= rho;
    }
    const double omitted = std::fabs(term(degree + 1, rho_k));
    return {n, rho, sum.value(), Method::series, omitted};
}

double phi3_closed(double rho) {
    require_unit_interval(rho, "phi3_closed");
    // (1 + u/3)^{3/2} - 1 rationalised so that the 1/u cancels exactly.
    const double u = rho * rho;
    const double a = std::pow(1.0 + u / 3.0, 1.5);
    return (2.0 / 3.0) * ((1.0 + u / 3.0 + u * u / 27.0) / (a + 1.0) + 1.0);
}

double varphi(Dimension n, double t) {
    n.require_at_least(3, "varphi");
    require_unit_interval(t, "varphi");
    const double nn = n.as_real();
    return t * (1.0 - (nn - 2.0) * (nn - 2.0) / (nn * nn) * t) / (1.0 - (nn - 4.0) / nn * t);
}

PhiEvaluation phi_second_closed(Dimension n, double rho) {
    n.require_at_least(4, "phi_second_closed");
    if (!(rho >= kSecondClosedMinRho && rho <= 1.0)) {
        throw std::domain_error("phi_second_closed: rho must lie in [1e-3, 1]");
    }
    const double nn = n.as_real();
    const double r2 = rho * rho;
    const double shrink = 1.0 - (nn - 2.0) * (nn - 2.0) / (nn * nn) * r2;
    const double denom = 1.0 - (nn - 4.0) / nn * r2;
    const double first = 1.0 - (nn - 2.0) * (nn - 3.0) / (nn * nn) * r2;
    const double second = 1.0 - (nn - 2.0) * (nn - 3.0) / (nn * (nn - 1.0)) * r2;
    const double third = 1.0 - (nn - 2.0) / nn * r2;
    const double f = specfun::hyp2f1(1.0, 0.5 * nn, 0.5 * (nn + 1.0), r2 * shrink / denom);
    const double brace = first * denom - second * shrink * third * f;
    const double value =
        2.0 * (nn - 2.0) / r2 * std::pow(shrink, 0.5 * (nn - 3.0)) * std::pow(denom, -0.5 * nn) * brace;
    // The brace is O(rho^2): its rounding error is amplified by 1/rho^2.
    const double err = 2.0 * (nn - 2.0) / r2 * 1e-15;
    return {n, rho, value, Method::second_closed, err};
}

namespace {

struct SeriesSum {
    double value;
    double tail;
};

SeriesSum second_series_sum(Dimension n, double rho, int degree) {
    const double nn = n.as_real();
    const double s = kink(n, rho);
    const double one_minus_s2 = (1.0 - s) * (1.0 + s);
    const double p1 = 2.0 * (nn - 2.0) * (nn - 2.0) / (nn * nn) * std::pow(one_minus_s2, 0.5 * (nn - 3.0));
    const double p2 = -4.0 * (nn - 2.0) * (nn - 2.0) / (nn * (nn - 1.0)) * std::pow(one_minus_s2, 0.5 * (nn - 1.0));
    const double p3 = 2.0 * (nn - 2.0) / (nn + 1.0) * std::pow(one_minus_s2, 0.5 * (nn + 1.0));
    const std::vector<double> c1 = specfun::gegenbauer_sequence(0.5 * (nn - 2.0), degree, s);
    const std::vector<double> c2 = specfun::gegenbauer_sequence(0.5 * nn, degree, s);
    const std::vector<double> c3 = specfun::gegenbauer_sequence(0.5 * (nn + 2.0), degree, s);

    CompensatedSum sum;
    double rho_k = 1.0;
    double tail = 0.0;
    const int tail_window = std::min(degree + 1, 10);
    for (int k = 0; k <= degree; ++k) {
        const double kk = k;
        // (n-1)_k/(n)_k = (n-1)/(n+k-1),  (n)_k/(n+2)_k = n(n+1)/((n+k)(n+k+1)).
        const double term = (p1 * c1[k] + p2 * (nn - 1.0) / (nn + kk - 1.0) * c2[k] +
                             p3 * nn * (nn + 1.0) / ((nn + kk) * (nn + kk + 1.0)) * c3[k]) *
                            rho_k;
        sum += term;
        if (k > degree - tail_window) {
            tail = std::max(tail, std::fabs(term));
        }
        rho_k *= rho;
        if (rho_k == 0.0) {
            tail = 0.0;
            break;
        }
    }
    return {sum.value(), rho == 0.0 ? 0.0 : tail * rho / (1.0 - rho)};
}

}  // namespace

PhiEvaluation phi_second_series(Dimension n, double rho, std::optional<int> K) {
    n.require_at_least(3, "phi_second_series");
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error("phi_second_series: rho must lie in [0, 1)");
    }
    if (K) {
        if (*K < 0) {
            throw std::domain_error("phi_second_series: truncation degree must be >= 0");
        }
        const SeriesSum s = second_series_sum(n, rho, *K);
        return {n, rho, s.value, Method::second_series, s.tail};
    }
    SeriesSum s{0.0, 0.0};
    for (int degree = 128; degree <= (1 << 17); degree *= 2) {
        s = second_series_sum(n, rho, degree);
        if (s.tail <= 1e-16 * std::max(1.0, std::fabs(s.value))) {
            break;
        }
    }
    return {n, rho, s.value, Method::second_series, s.tail};
}

PhiEvaluation phi_second(Dimension n, double rho) {
    if (n.value() >= 4 && rho >= kSecondClosedMinRho) {
        return phi_second_closed(n, rho);
    }
    return phi_second_series(n, rho);
}

PhiEvaluation phi_second_fd(Dimension n, double rho, double h) {
    n.require_at_least(3, "phi_second_fd");
    require_unit_interval(rho, "phi_second_fd");
    if (rho + h > 1.0) {
        throw std::domain_error("phi_second_fd: rho + h exceeds 1");
    }
    const auto spec = tight_spec();
    // Phi is even in rho (t -> -t), which covers stencils reaching below 0.
    auto f = [&](double r) { return phi_quad(n, std::fabs(r), spec).value; };
    const double value = numdiff::second_derivative(f, rho, h);
    return {n, rho, value, Method::second_fd, 0.0};
}

TechnicalSides technical_sides(Dimension n, double t) {
    n.require_at_least(3, "technical_sides");
    require_unit_interval(t, "technical_sides");
    const double nn = n.as_real();
    const double lhs = specfun::hyp2f1(1.0, 0.5 * nn, 0.5 * (nn + 1.0), varphi(n, t));
    const double num = (1.0 - (nn - 4.0) / nn * t) * (1.0 - (nn - 2.0) * (nn - 3.0) / (nn * nn) * t);
    const double den = (1.0 - (nn - 2.0) / nn * t) * (1.0 - (nn - 2.0) * (nn - 2.0) / (nn * nn) * t) *
                       (1.0 - (nn - 2.0) * (nn - 3.0) / (nn * (nn - 1.0)) * t);
    return {lhs, num / den};
}

double psi(Dimension n, double t) {
    n.require_at_least(3, "psi");
    require_unit_interval(t, "psi");
    const double nn = n.as_real();
    const double v = varphi(n, t);
    const double hyper = std::pow(v, 0.5 * (nn - 1.0)) * std::sqrt(1.0 - v) *
                         specfun::hyp2f1(1.0, 0.5 * nn, 0.5 * (nn + 1.0), v);
    const double shrink = 1.0 - (nn - 2.0) * (nn - 2.0) / (nn * nn) * t;
    const double denom = 1.0 - (nn - 4.0) / nn * t;
    const double first = 1.0 - (nn - 2.0) * (nn - 3.0) / (nn * nn) * t;
    const double second = 1.0 - (nn - 2.0) * (nn - 3.0) / (nn * (nn - 1.0)) * t;
    const double rational = std::pow(t, 0.5 * (nn - 1.0)) * std::pow(shrink, 0.5 * (nn - 3.0)) * first /
                            (std::pow(denom, 0.5 * (nn - 2.0)) * second);
    return hyper - rational;
}

std::array<std::int64_t, 3> psi_quadratic_coefficients(Dimension n) {
    n.require_at_least(3, "psi_quadratic_coefficients");
    const std::int64_t m = n.value();
    return {
        m * m * m * (m * m - 3 * m - 2),
        -2 * m * (m - 2) * (m - 4) * (m * m - 3 * m + 1),
        (m - 2) * (m - 2) * (m - 3) * (m - 4) * (m - 4),
    };
}

double psi_quadratic(Dimension n, double t) {
    const auto q = psi_quadratic_coefficients(n);
    return static_cast<double>(q[0]) + t * (static_cast<double>(q[1]) + t * static_cast<double>(q[2]));
}

ExactMinimum psi_quadratic_min(Dimension n) {
    const auto q = psi_quadratic_coefficients(n);
    const Int128 q0 = q[0];
    const Int128 q1 = q[1];
    const Int128 q2 = q[2];
    ExactMinimum best{q0, 1};
    const ExactMinimum at_one{q0 + q1 + q2, 1};
    auto less = [](const ExactMinimum& l, const ExactMinimum& r) { return l.num * r.den < r.num * l.den; };
    if (less(at_one, best)) best = at_one;
    // Interior vertex t = -q1 / (2 q2) when it lies in (0, 1).
    if (q2 > 0 && -q1 > 0 && -q1 < 2 * q2) {
        const ExactMinimum vertex{4 * q0 * q2 - q1 * q1, 4 * q2};
        if (less(vertex, best)) best = vertex;
    }
    return best;
}

double psi_prime_closed(Dimension n, double t) {
    n.require_at_least(4, "psi_prime_closed");
    if (!(t > 0.0 && t <= 1.0)) {
        throw std::domain_error("psi_prime_closed: t must lie in (0, 1]");
    }
    const double nn = n.as_real();
    const double shrink = 1.0 - (nn - 2.0) * (nn - 2.0) / (nn * nn) * t;
    const double denom = 1.0 - (nn - 4.0) / nn * t;
    const double second = 1.0 - (nn - 2.0) * (nn - 3.0) / (nn * (nn - 1.0)) * t;
    const double lead = std::pow(t, 0.5 * (nn - 1.0)) / (2.0 * std::pow(nn, 5) * (nn - 1.0));
    return lead * std::pow(denom, -0.5 * nn) * std::pow(shrink, 0.5 * (nn - 5.0)) / (second * second) *
           psi_quadratic(n, t);
}

VerificationReport verify_monotone(Dimension n, int grid_size) {
    n.require_at_least(3, "verify_monotone");
    if (grid_size < 3) {
        throw std::domain_error("verify_monotone: grid_size must be >= 3");
    }
    const double nn = n.as_real();
    const bool increasing = n.value() == 3;
    std::vector<double> rho(grid_size);
    std::vector<double> values(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        rho[i] = static_cast<double>(i) / (grid_size - 1);
        values[i] = phi_quad(n, rho[i]).value;
    }

    VerificationReport report;
    report.suite = "monotone";
    report.n = n.value();

    CheckAccumulator order(increasing ? "strictly_increasing" : "strictly_decreasing");
    for (int i = 1; i < grid_size; ++i) {
        const double step = increasing ? values[i] - values[i - 1] : values[i - 1] - values[i];
        order.record(step - kStrictMargin, rho[i]);
    }
    report.checks.push_back(order.finish());

    const auto argmax = std::max_element(values.begin(), values.end()) - values.begin();
    if (increasing) {
        CheckAccumulator peak("max_at_one_equals_closed_form");
        peak.record(argmax == grid_size - 1 ? 0.0 : -1.0, rho[argmax]);
        peak.record(numdiff::absolute_margin(values.back(), phi3_closed(1.0), 1e-10), 1.0);
        report.checks.push_back(peak.finish());
    } else {
        CheckAccumulator peak("max_at_zero_equals_2_over_n_minus_1");
        peak.record(argmax == 0 ? 0.0 : -1.0, rho[argmax]);
        peak.record(numdiff::absolute_margin(values.front(), 2.0 / (nn - 1.0), 1e-10), 0.0);
        report.checks.push_back(peak.finish());
    }

    CheckAccumulator slope("zero_slope_at_origin");
    const auto spec = tight_spec();
    auto f = [&](double r) { return phi_quad(n, r, spec).value; };
    slope.record(1e-6 - std::fabs(numdiff::forward_first_derivative(f, 0.0, 1e-3)), 0.0);
    report.checks.push_back(slope.finish());
    return report;
}

VerificationReport verify_concavity(Dimension n, int grid_size) {
    n.require_at_least(3, "verify_concavity");
    if (grid_size < 1) {
        throw std::domain_error("verify_concavity: grid_size must be >= 1");
    }
    const bool three = n.value() == 3;
    VerificationReport report;
    report.suite = "concavity";
    report.n = n.value();

    CheckAccumulator negative("second_derivative_negative");
    negative.expect_failure(three);
    CheckAccumulator closed_vs_fd("closed_vs_fd");
    CheckAccumulator closed_vs_series("closed_vs_series");
    CheckAccumulator series_vs_fd("series_vs_fd");
    for (int i = 1; i <= grid_size; ++i) {
        const double rho = static_cast<double>(i) / (grid_size + 1);
        try {
            negative.record(-phi_second(n, rho).value - kStrictMargin, rho);
        } catch (const std::exception&) {
            negative.fail(rho);
        }
        if (rho < 0.05 || rho > 0.95) {
            continue;
        }
        try {
            const double series = phi_second_series(n, rho).value;
            const double fd = phi_second_fd(n, rho).value;
            if (three) {
                series_vs_fd.record(numdiff::agreement_margin(series, fd, 1e-6), rho);
            } else {
                const double closed = phi_second_closed(n, rho).value;
                closed_vs_fd.record(relative_margin(closed, fd, 1e-6), rho);
                closed_vs_series.record(relative_margin(closed, series, 1e-6), rho);
                series_vs_fd.record(relative_margin(series, fd, 1e-6), rho);
            }
        } catch (const std::exception&) {
            series_vs_fd.fail(rho);
        }
    }
    // At n = 3 Phi''(0) = 1/18 > 0: the sign check is recorded, not enforced.
    report.checks.push_back(negative.finish());
    if (!three) {
        report.checks.push_back(closed_vs_fd.finish());
        report.checks.push_back(closed_vs_series.finish());
    }
    report.checks.push_back(series_vs_fd.finish());
    return report;
}

VerificationReport verify_technical(Dimension n, int grid_size) {
    n.require_at_least(3, "verify_technical");
    if (grid_size < 3) {
        throw std::domain_error("verify_technical: grid_size must be >= 3");
    }
    VerificationReport report;
    report.suite = "technical";
    report.n = n.value();

    if (n.value() == 3) {
        CheckAccumulator reversed("inequality_reversed", true);
        for (int i = 1; i < grid_size - 1; ++i) {
            const double t = static_cast<double>(i) / (grid_size - 1);
            const auto sides = technical_sides(n, t);
            reversed.record(sides.rhs - sides.lhs, t);
        }
        report.checks.push_back(reversed.finish());
        return report;
    }

    CheckAccumulator equality("sides_equal_at_zero");
    const auto at_zero = technical_sides(n, 0.0);
    equality.record(numdiff::absolute_margin(at_zero.lhs, at_zero.rhs, 1e-14), 0.0);
    report.checks.push_back(equality.finish());

    CheckAccumulator inequality("inequality_strict", true);
    CheckAccumulator positive("psi_positive", true);
    CheckAccumulator derivative("psi_prime_closed_vs_fd");
    for (int i = 1; i < grid_size; ++i) {
        const double t = static_cast<double>(i) / (grid_size - 1);
        const auto sides = technical_sides(n, t);
        inequality.record(sides.lhs - sides.rhs, t);
        positive.record(psi(n, t), t);
        if (t >= 0.05 && t <= 0.95) {
            auto f = [&](double x) { return psi(n, x); };
            const double fd = numdiff::first_derivative(f, t, 1e-3);
            derivative.record(relative_margin(psi_prime_closed(n, t), fd, 1e-5), t);
        }
    }
    report.checks.push_back(inequality.finish());
    report.checks.push_back(positive.finish());

    CheckAccumulator origin("psi_zero_at_origin");
    origin.record(1e-12 - std::fabs(psi(n, 0.0)), 0.0);
    report.checks.push_back(origin.finish());
    report.checks.push_back(derivative.finish());

    CheckAccumulator quadratic("quadratic_positive", true);
    const ExactMinimum qmin = psi_quadratic_min(n);
    quadratic.record(qmin.as_double(), 0.0);
    report.checks.push_back(quadratic.finish());
    return report;
}

}  // namespace hsp::phi
