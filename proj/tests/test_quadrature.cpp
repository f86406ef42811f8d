#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hsp/quadrature.hpp"

using namespace hsp;
using quadrature::integrate;
using quadrature::QuadratureSpec;
using quadrature::zonal_sphere_integral;

namespace {

constexpr double pi = std::numbers::pi;

struct Case {
    std::string name;
    quadrature::Integrand f;
    double a;
    double b;
    double exact;
    std::vector<double> kinks;
};

// Integrands with closed-form integrals: smooth, peaked, oscillatory,
// endpoint-singular, kinked and pole-weighted.
std::vector<Case> corpus() {
    std::vector<Case> cs;
    for (int k = 0; k < 10; ++k) {
        cs.push_back({"x^" + std::to_string(k), [k](double x) { return std::pow(x, k); }, 0.0, 1.0, 1.0 / (k + 1), {}});
    }
    for (double a : {0.5, 1.0, 2.0, 3.5, 5.0}) {
        cs.push_back({"exp", [a](double x) { return std::exp(a * x); }, -1.0, 1.0, (std::exp(a) - std::exp(-a)) / a, {}});
    }
    for (int w = 1; w <= 7; ++w) {
        cs.push_back({"sin", [w](double x) { return std::sin(w * x); }, 0.0, 1.0, (1.0 - std::cos(w)) / w, {}});
    }
    for (double c : {1.0, 4.0, 16.0, 64.0, 256.0, 1024.0}) {
        cs.push_back({"runge", [c](double x) { return 1.0 / (1.0 + c * x * x); }, 0.0, 1.0,
                      std::atan(std::sqrt(c)) / std::sqrt(c), {}});
    }
    for (double alpha : {-0.5, -0.25, 0.25, 0.5, 1.5}) {
        cs.push_back({"power", [alpha](double x) { return std::pow(x, alpha); }, 0.0, 1.0, 1.0 / (alpha + 1.0), {}});
    }
    cs.push_back({"log", [](double x) { return std::log(x); }, 0.0, 1.0, -1.0, {}});
    for (double s : {-0.5, 0.1, 0.7}) {
        cs.push_back({"abs", [s](double x) { return std::fabs(x - s); }, -1.0, 1.0,
                      0.5 * ((1.0 + s) * (1.0 + s) + (1.0 - s) * (1.0 - s)), {s}});
    }
    for (double a : {1e-1, 1e-2, 1e-3}) {
        cs.push_back({"near_pole", [a](double x) { return 1.0 / (x + a); }, 0.0, 1.0, std::log((1.0 + a) / a), {}});
    }
    for (double sigma : {1.0, 0.3, 0.1, 0.03}) {
        cs.push_back({"gauss", [sigma](double x) { return std::exp(-x * x / (sigma * sigma)); }, -3.0, 3.0,
                      sigma * std::sqrt(pi) * std::erf(3.0 / sigma), {}});
    }
    cs.push_back({"xexp", [](double x) { return x * std::exp(x); }, 0.0, 2.0, std::exp(2.0) + 1.0, {}});
    cs.push_back({"semicircle", [](double t) { return std::sqrt(1.0 - t * t); }, -1.0, 1.0, pi / 2.0, {}});
    cs.push_back({"cubed", [](double t) { return std::pow(1.0 - t * t, 1.5); }, -1.0, 1.0, 3.0 * pi / 8.0, {}});
    cs.push_back({"chebyshev", [](double t) { return 1.0 / std::sqrt(1.0 - t * t); }, -1.0, 1.0, pi, {}});
    for (double r : {0.5, 0.9}) {
        cs.push_back({"kernel", [r](double t) { return 1.0 / (1.0 - 2.0 * r * t + r * r); }, -1.0, 1.0,
                      std::log((1.0 + r) / (1.0 - r)) / r, {}});
    }
    return cs;
}

}  // namespace

TEST_CASE("Gauss-Legendre rule is symmetric and integrates constants") {
    for (int points : {1, 2, 5, 15, 30}) {
        const auto rule = quadrature::gauss_legendre(points);
        double total = 0.0;
        for (int i = 0; i < points; ++i) {
            total += rule.weights[i];
            CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[points - 1 - i]).epsilon(1e-15));
        }
        CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("polynomials up to degree 2 * base_nodes - 1 are exact") {
    // Away from +-1, where pieces are integrated in cos(theta) instead.
    const QuadratureSpec spec;
    for (int degree = 0; degree <= 2 * spec.base_nodes - 1; ++degree) {
        const auto r = integrate([degree](double x) { return std::pow(x, degree); }, 0.0, 0.5, spec);
        const double exact = std::pow(0.5, degree + 1) / (degree + 1);
        CHECK(std::fabs(r.value - exact) <= 1e-14 * exact);
        CHECK(r.subdivisions_used == 0);
    }
}

TEST_CASE("integrate examples") {
    const auto one = integrate([](double) { return 1.0; }, -1.0, 1.0);
    CHECK(one.value == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(one.error_estimate <= 1e-13);

    QuadratureSpec kinked;
    kinked.kinks = {0.0};
    const auto r = integrate([](double t) { return std::fabs(t) * std::sqrt(1.0 - t * t); }, -1.0, 1.0, kinked);
    CHECK(std::fabs(r.value - 2.0 / 3.0) <= 1e-13);
}

TEST_CASE("kink-aware and naive refined quadrature agree") {
    for (int n = 3; n <= 8; ++n) {
        const double alpha = 0.5 * (n - 3);
        for (int i = -9; i <= 9; ++i) {
            const double s = 0.1 * i;
            auto f = [=](double t) { return std::fabs(t - s) * std::pow((1.0 - t) * (1.0 + t), alpha); };
            QuadratureSpec aware;
            aware.kinks = {s};
            // Reference: no kink information, tolerance refined tenfold.
            QuadratureSpec naive;
            naive.max_subdivisions = 20000;
            naive.abs_tol = aware.abs_tol / 10.0;
            naive.rel_tol = aware.rel_tol / 10.0;
            const auto ra = integrate(f, -1.0, 1.0, aware);
            const auto rn = integrate(f, -1.0, 1.0, naive);
            const double contract = std::max(aware.abs_tol, aware.rel_tol * std::fabs(ra.value));
            CHECK(std::fabs(ra.value - rn.value) <= contract);
            CHECK(ra.subdivisions_used <= rn.subdivisions_used);
        }
    }
}

TEST_CASE("error estimates are honest on a 50-integrand corpus") {
    const auto cases = corpus();
    REQUIRE(cases.size() == 50);
    int honest = 0;
    for (const auto& c : cases) {
        QuadratureSpec spec;
        spec.kinks = c.kinks;
        const auto r = integrate(c.f, c.a, c.b, spec);
        const double err = std::fabs(r.value - c.exact);
        INFO(c.name << " true error " << err << " estimate " << r.error_estimate);
        // The exact values themselves carry a few ulps of rounding.
        const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(c.exact);
        CHECK(err <= 10.0 * r.error_estimate + slack);
        if (err <= r.error_estimate + slack) ++honest;
    }
    CHECK(honest >= 48);
}

TEST_CASE("budget exhaustion carries the best estimate") {
    QuadratureSpec spec;
    spec.max_subdivisions = 3;
    try {
        integrate([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, spec);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.error_estimate() > 0.0);
    }
}

TEST_CASE("invalid specs and integrands are rejected") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate(one, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate(one, 0.0, 1.0, QuadratureSpec{}.with_kinks({1.5})), std::invalid_argument);
    CHECK_THROWS_AS(integrate(one, 0.0, 1.0, QuadratureSpec{}.with_kinks({0.6, 0.4})), std::invalid_argument);
    QuadratureSpec tight;
    tight.abs_tol = 1e-16;
    CHECK_THROWS_AS(integrate(one, 0.0, 1.0, tight), std::invalid_argument);
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), std::domain_error);
}

TEST_CASE("zonal sphere integral") {
    CHECK(zonal_sphere_integral([](double) { return 1.0; }, Dimension(5)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::fabs(zonal_sphere_integral([](double t) { return t; }, Dimension(4))) <= 1e-15);
    QuadratureSpec at_zero;
    at_zero.kinks = {0.0};
    CHECK(zonal_sphere_integral([](double t) { return std::fabs(t); }, Dimension(3), at_zero) ==
          doctest::Approx(0.5).epsilon(1e-14));
    // n = 2: weight (1 - t^2)^{-1/2}, c_2 = 1/pi.
    CHECK(zonal_sphere_integral([](double t) { return std::fabs(t); }, Dimension(2), at_zero) ==
          doctest::Approx(2.0 / pi).epsilon(1e-14));
    for (int n = 2; n <= 12; ++n) {
        CHECK(zonal_sphere_integral([](double) { return 1.0; }, Dimension(n)) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("zonal normalisation constants") {
    CHECK(quadrature::zonal_normalization(Dimension(3)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(quadrature::zonal_normalization(Dimension(4)) == doctest::Approx(2.0 / pi).epsilon(1e-15));
    CHECK(quadrature::zonal_normalization(Dimension(2)) == doctest::Approx(1.0 / pi).epsilon(1e-15));
}
