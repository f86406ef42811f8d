#include "hsp/identities.hpp"

#include <array>
#include <cmath>

#include "hsp/numdiff.hpp"
#include "hsp/quadrature.hpp"
#include "hsp/specfun.hpp"

namespace hsp::specfun {

namespace {

// Smallest K such that the tail of sum_k weight(k) (2 lambda)_k / k! z^k is
// below `target`, using |C_k^lambda(x)| <= C_k^lambda(1) = (2 lambda)_k / k!.
template <class Weight>
int truncation_from_tail_bound(double lambda, double z, double target, Weight weight) {
    double bound = 1.0;
    for (int k = 0; k < 100000; ++k) {
        const double ratio = (2.0 * lambda + k) / (k + 1.0) * z;
        if (ratio < 1.0 && bound * weight(k) * ratio / (1.0 - ratio) < target) {
            return k;
        }
        bound *= ratio;
    }
    return 100000;
}

}  // namespace

CheckResult check_generating_relation() {
    CheckAccumulator acc("generating_relation");
    for (double lambda : {0.5, 1.0, 1.5, 2.5}) {
        for (int i = -9; i <= 9; ++i) {
            const double x = 0.1 * i;
            for (int j = 1; j <= 7; ++j) {
                const double z = 0.1 * j;
                const int K = truncation_from_tail_bound(lambda, z, 1e-14, [](int) { return 1.0; });
                const std::vector<double> c = gegenbauer_sequence(lambda, K, x);
                CompensatedSum sum;
                double zk = 1.0;
                for (int k = 0; k <= K; ++k) {
                    sum += c[k] * zk;
                    zk *= z;
                }
                const double closed = std::pow(1.0 - 2.0 * x * z + z * z, -lambda);
                acc.record(numdiff::absolute_margin(sum.value(), closed, 1e-10), x);
            }
        }
    }
    return acc.finish();
}

CheckResult check_rainville(Dimension n) {
    CheckAccumulator acc("rainville_generating_relation");
    const double nu = n.as_real() - 1.0;
    const double lambda = 0.5 * n.as_real();
    for (int i = -9; i <= 9; ++i) {
        const double x = 0.1 * i;
        for (int j = 0; j <= 8; ++j) {
            const double z = 0.1 * j;
            // (nu)_k / (2 lambda)_k = (n - 1) / (n - 1 + k) since 2 lambda = nu + 1.
            auto ratio = [&](int k) { return nu / (nu + k); };
            const int K = truncation_from_tail_bound(lambda, z, 1e-15, ratio);
            const std::vector<double> c = gegenbauer_sequence(lambda, K, x);
            CompensatedSum sum;
            double zk = 1.0;
            for (int k = 0; k <= K; ++k) {
                sum += ratio(k) * c[k] * zk;
                zk *= z;
            }
            const double one_minus = 1.0 - x * z;
            const double arg = z * z * (x * x - 1.0) / (one_minus * one_minus);
            const double closed = std::pow(one_minus, -nu) * hyp2f1(0.5 * nu, 0.5 * (nu + 1.0), lambda + 0.5, arg);
            acc.record(numdiff::agreement_margin(sum.value(), closed, 1e-9), z);
        }
    }
    return acc.finish();
}

CheckResult check_pfaff() {
    CheckAccumulator acc("pfaff_transformation");
    constexpr std::array<std::array<double, 3>, 6> params{{
        {1.0, 2.0, 2.5},
        {0.5, 1.5, 2.0},
        {2.5, 0.5, 4.0},
        {1.0, 3.0, 3.5},
        {-0.5, 1.25, 1.75},
        {3.0, 2.5, 1.5},
    }};
    for (const auto& [a, b, c] : params) {
        for (int j = 0; j <= 18; ++j) {
            const double z = 0.05 * j;
            const double direct = hyp2f1(a, b, c, z);
            const double transformed = std::pow(1.0 - z, -b) * hyp2f1(c - a, b, c, z / (z - 1.0));
            acc.record(1e-12 * std::fabs(direct) - std::fabs(direct - transformed), z);
        }
    }
    return acc.finish();
}

CheckResult check_contiguous(Dimension n) {
    CheckAccumulator acc("gauss_contiguous_relation");
    const double a = 1.0;
    const double b = 0.5 * n.as_real();
    const double c = 0.5 * (n.as_real() + 1.0);
    for (int j = 0; j <= 18; ++j) {
        const double z = 0.05 * j;
        const double lhs = (c - b) * z * hyp2f1(a, b, c + 1.0, z);
        const double shifted = c * hyp2f1(a - 1.0, b, c, z);
        const double base = c * (1.0 - z) * hyp2f1(a, b, c, z);
        const double rhs = shifted - base;
        const double scale = std::max({std::fabs(lhs), std::fabs(shifted), std::fabs(base)});
        acc.record(1e-12 * scale - std::fabs(lhs - rhs), z);
    }
    return acc.finish();
}

CheckResult check_abs_kernel_closed_form() {
    CheckAccumulator acc("abs_kernel_closed_form");
    quadrature::QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-14;
    for (double lambda : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
        for (int k = 2; k <= 10; ++k) {
            for (int i = -6; i <= 6; ++i) {
                const double s = 0.15 * i;
                const double closed = abs_kernel_coefficient(lambda, k, s);
                const double alpha = lambda - 0.5;
                auto integrand = [&](double x) {
                    const double w = std::pow((1.0 - x) * (1.0 + x), alpha);
                    return w == 0.0 ? 0.0 : std::fabs(x - s) * w * gegenbauer(lambda, k, x);
                };
                const double brute = quadrature::integrate(integrand, -1.0, 1.0, spec.with_kinks({s})).value;
                acc.record(numdiff::absolute_margin(closed, brute, 1e-9), s);
            }
        }
    }
    return acc.finish();
}

CheckResult check_weighted_derivative() {
    CheckAccumulator acc("weighted_gegenbauer_derivative");
    for (double lambda : {0.5, 1.5, 2.0, 3.0}) {
        for (int k = 0; k <= 6; ++k) {
            for (int i = -8; i <= 8; ++i) {
                const double x = 0.1 * i;
                auto weighted = [&](double y) {
                    return std::pow((1.0 - y) * (1.0 + y), lambda - 0.5) * gegenbauer(lambda, k, y);
                };
                const double fd = numdiff::first_derivative(weighted, x, 1e-4);
                const double closed = gegenbauer_weighted_derivative(lambda, k, x);
                acc.record(numdiff::agreement_margin(closed, fd, 1e-6), x);
            }
        }
    }
    return acc.finish();
}

CheckResult check_hyp2f1_derivative(Dimension n) {
    CheckAccumulator acc("hyp2f1_derivative_relation");
    const double nn = n.as_real();
    const std::array<std::array<double, 3>, 3> params{{
        {1.0, 0.5 * nn, 0.5 * (nn + 1.0)},
        {0.7, 1.3, 2.2},
        {2.0, 0.5, 3.5},
    }};
    for (const auto& [a, b, c] : params) {
        for (int j = 1; j <= 9; ++j) {
            const double z = 0.1 * j;
            auto lhs_fn = [&](double y) {
                return std::pow(y, c - a) * std::pow(1.0 - y, a + b - c) * hyp2f1(a, b, c, y);
            };
            const double fd = numdiff::first_derivative(lhs_fn, z, 1e-4);
            const double closed =
                (c - a) * std::pow(z, c - a - 1.0) * std::pow(1.0 - z, a + b - c - 1.0) * hyp2f1(a - 1.0, b, c, z);
            acc.record(numdiff::agreement_margin(closed, fd, 1e-6), z);
        }
    }
    return acc.finish();
}

VerificationReport verify_identities(Dimension n) {
    VerificationReport report;
    report.suite = "identities";
    report.n = n.value();
    report.checks = {
        check_generating_relation(),
        check_rainville(n),
        check_pfaff(),
        check_contiguous(n),
        check_abs_kernel_closed_form(),
        check_weighted_derivative(),
        check_hyp2f1_derivative(n),
    };
    return report;
}

}  // namespace hsp::specfun
