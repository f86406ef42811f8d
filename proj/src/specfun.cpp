#include "hsp/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hsp::specfun {

double pochhammer(double lambda, int k) {
    if (k < 0) {
        throw std::domain_error("pochhammer: k must be nonnegative");
    }
    double out = 1.0;
    for (int i = 0; i < k; ++i) {
        out *= lambda + i;
    }
    return out;
}

std::vector<double> gegenbauer_sequence(double lambda, int max_degree, double x) {
    if (max_degree < 0) {
        throw std::domain_error("gegenbauer: degree must be nonnegative");
    }
    std::vector<double> c(static_cast<std::size_t>(max_degree) + 1);
    c[0] = 1.0;
    if (max_degree >= 1) {
        c[1] = 2.0 * lambda * x;
    }
    for (int k = 2; k <= max_degree; ++k) {
        c[k] = (2.0 * (k + lambda - 1.0) * x * c[k - 1] - (k + 2.0 * lambda - 2.0) * c[k - 2]) / k;
    }
    return c;
}

double gegenbauer(double lambda, int degree, double x) {
    if (!(lambda > -0.5)) {
        throw std::domain_error("gegenbauer: lambda > -1/2 is required");
    }
    if (degree < 0) {
        throw std::domain_error("gegenbauer: degree must be nonnegative");
    }
    if (degree == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 2.0 * lambda * x;
    for (int k = 2; k <= degree; ++k) {
        const double next = (2.0 * (k + lambda - 1.0) * x * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

// Direct summation of the Gauss series. Stops once, for three consecutive
// terms, the geometric tail bound term * q / (1 - q) is below rel_tol of the
// partial sum, q being the larger of |z| and the current term ratio.
double gauss_series(double a, double b, double c, double z, const Hyp2f1Options& options) {
    CompensatedSum sum;
    sum += 1.0;
    double term = 1.0;
    double previous = 1.0;
    int small_run = 0;
    for (int k = 0; k < options.max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        const double size = std::fabs(term);
        if (size == 0.0) {
            return sum.value();  // terminating series
        }
        const double q = std::max(std::fabs(z), size / previous);
        if (q < 1.0 && size * q / (1.0 - q) <= options.rel_tol * std::fabs(sum.value())) {
            if (++small_run >= 3) {
                return sum.value();
            }
        } else {
            small_run = 0;
        }
        previous = size;
    }
    const double tail = std::fabs(term) * std::fabs(z) / (1.0 - std::fabs(z));
    std::ostringstream msg;
    msg << "hyp2f1(" << a << ", " << b << "; " << c << "; " << z << ") did not converge within "
        << options.max_terms << " terms";
    throw ConvergenceError(msg.str(), sum.value(), tail);
}

}  // namespace

double hyp2f1(double a, double b, double c, double z, const Hyp2f1Options& options) {
    if (!(z < 1.0)) {
        std::ostringstream msg;
        msg << "hyp2f1: series diverges for z = " << z << " >= 1";
        throw DivergenceError(msg.str());
    }
    if (c <= 0.0 && c == std::round(c)) {
        std::ostringstream msg;
        msg << "hyp2f1: c = " << c << " is a pole";
        throw PoleError(msg.str());
    }
    if (z == 0.0 || a == 0.0 || b == 0.0) {
        return 1.0;
    }
    if (z < -0.5) {
        // Pfaff: 2F1(a, b; c; z) = (1 - z)^{-b} 2F1(c - a, b; c; z / (z - 1)).
        const double w = z / (z - 1.0);
        return std::pow(1.0 - z, -b) * hyp2f1(c - a, b, c, w, options);
    }
    if (z < 0.5) {
        return gauss_series(a, b, c, z, options);
    }
    const double excess = c - a - b;
    if (excess < 0.0) {
        // Euler: 2F1(a, b; c; z) = (1 - z)^{c-a-b} 2F1(c - a, c - b; c; z).
        return std::pow(1.0 - z, excess) * gauss_series(c - a, c - b, c, z, options);
    }
    return gauss_series(a, b, c, z, options);
}

double abs_kernel_coefficient(double lambda, int k, double s, const quadrature::QuadratureSpec& spec) {
    if (!(lambda > -0.5)) {
        throw std::domain_error("abs_kernel_coefficient: lambda > -1/2 is required");
    }
    if (!(std::fabs(s) < 1.0)) {
        throw std::domain_error("abs_kernel_coefficient: |s| < 1 is required");
    }
    if (k < 0) {
        throw std::domain_error("abs_kernel_coefficient: k must be nonnegative");
    }
    if (k >= 2) {
        const double kk = k;
        const double factor = 8.0 * lambda * (lambda + 1.0) /
                              (kk * (kk - 1.0) * (kk + 2.0 * lambda) * (kk + 2.0 * lambda + 1.0));
        return factor * std::pow(1.0 - s * s, lambda + 1.5) * gegenbauer(lambda + 2.0, k - 2, s);
    }
    const double alpha = lambda - 0.5;
    const quadrature::Integrand integrand = [=](double x) {
        const double weight = alpha == 0.0 ? 1.0 : std::pow((1.0 - x) * (1.0 + x), alpha);
        if (weight == 0.0) {
            return 0.0;
        }
        const double poly = k == 0 ? 1.0 : 2.0 * lambda * x;
        return std::fabs(x - s) * weight * poly;
    };
    return quadrature::integrate(integrand, -1.0, 1.0, spec.with_kinks({s})).value;
}

double gegenbauer_weighted_derivative(double lambda, int k, double x) {
    if (lambda == 1.0) {
        throw std::domain_error("gegenbauer_weighted_derivative: lambda = 1 is excluded");
    }
    if (!(std::fabs(x) < 1.0)) {
        throw std::domain_error("gegenbauer_weighted_derivative: |x| < 1 is required");
    }
    if (k < 0) {
        throw std::domain_error("gegenbauer_weighted_derivative: k must be nonnegative");
    }
    const double raised = gegenbauer_sequence(lambda - 1.0, k + 1, x).back();
    const double factor = -(k + 1.0) * (k + 2.0 * lambda - 1.0) / (2.0 * (lambda - 1.0));
    return factor * std::pow((1.0 - x) * (1.0 + x), lambda - 1.5) * raised;
}

}  // namespace hsp::specfun
