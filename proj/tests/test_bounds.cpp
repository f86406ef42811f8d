#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hsp/bounds.hpp"

using namespace hsp;
using namespace hsp::bounds;

namespace {

constexpr double pi = std::numbers::pi;
const double root3 = std::sqrt(3.0);

std::vector<double> tenths() {
    std::vector<double> grid;
    for (int i = 0; i <= 9; ++i) grid.push_back(0.1 * i);
    return grid;
}

}  // namespace

TEST_CASE("ball volumes") {
    CHECK(ball_volume(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ball_volume(2) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-15));
    // Recurrence V_n = 2 pi / n V_{n-2}.
    for (int n = 2; n <= 40; ++n) {
        CHECK(ball_volume(n) == doctest::Approx(2.0 * pi / n * ball_volume(n - 2)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(ball_volume(-1), std::domain_error);
}

TEST_CASE("sharp constants") {
    CHECK(schwarz_pick_constant(Dimension(2)) == doctest::Approx(4.0 / pi).epsilon(1e-15));
    CHECK(schwarz_pick_constant(Dimension(3)) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(schwarz_pick_constant(Dimension(4)) == doctest::Approx(16.0 / (3.0 * pi)).epsilon(1e-15));
    CHECK(khavinson_sharp_constant_3d() == doctest::Approx(8.0 / (3.0 * root3)).epsilon(1e-15));
    CHECK(std::fabs(khavinson_sharp_constant_3d() - 1.5396) < 5e-5);
    CHECK(khavinson_sharp_constant_3d() > 1.5);
}

TEST_CASE("khavinson radial formula") {
    CHECK(khavinson_radial_3d(0.0) == doctest::Approx(1.5).epsilon(1e-15));
    const double t = 1.0 - 1e-8;
    CHECK(std::fabs((1.0 - t) * (1.0 + t) * khavinson_radial_3d(t) - khavinson_sharp_constant_3d()) <= 1e-6);
    CHECK_THROWS_AS(khavinson_radial_3d(1.0), std::domain_error);
    CHECK_THROWS_AS(khavinson_radial_3d(-0.1), std::domain_error);
    // (1 - t^2) times the radial derivative increases towards the limit.
    double previous = 0.0;
    for (int i = 0; i <= 99; ++i) {
        const double r = 0.01 * i;
        const double scaled = (1.0 - r * r) * khavinson_radial_3d(r);
        CHECK(scaled > previous);
        CHECK(scaled < khavinson_sharp_constant_3d());
        previous = scaled;
    }
}

TEST_CASE("capital_c examples") {
    CHECK(capital_c({Dimension(4), 0.0}) == doctest::Approx(16.0 / (3.0 * pi)).epsilon(1e-12));
    CHECK(std::fabs(capital_c({Dimension(3), 0.5}) - khavinson_radial_3d(0.5)) <= 1e-12);
    CHECK(capital_c({Dimension(5), 0.7}) <= schwarz_pick_constant(Dimension(5)) / (1.0 - 0.49));
    CHECK_THROWS_AS(capital_c({Dimension(2), 0.3}), std::domain_error);
    CHECK_THROWS_AS(capital_c({Dimension(4), 1.0}), std::domain_error);
}

TEST_CASE("capital_c at the origin is the Schwarz-Pick constant") {
    for (int n = 3; n <= 12; ++n) {
        CHECK(capital_c({Dimension(n), 0.0}) == doctest::Approx(schwarz_pick_constant(Dimension(n))).epsilon(1e-12));
    }
}

TEST_CASE("capital_c lies strictly below the envelope for n >= 4") {
    for (int n = 4; n <= 10; ++n) {
        for (int i = 1; i <= 9; ++i) {
            const double rho = 0.1 * i;
            CHECK(capital_c({Dimension(n), rho}) < gradient_bound(Dimension(n), rho));
        }
    }
}

TEST_CASE("n = 3: C(rho)(1 - rho^2) increases towards 8/(3 sqrt 3) without reaching it") {
    double previous = 0.0;
    for (int i = 0; i <= 99; ++i) {
        const double rho = 0.01 * i;
        const double scaled = capital_c({Dimension(3), rho}) * (1.0 - rho * rho);
        CHECK(scaled > previous);
        CHECK(scaled < khavinson_sharp_constant_3d());
        previous = scaled;
    }
    for (double rho : tenths()) {
        CHECK(std::fabs(capital_c({Dimension(3), rho}) - khavinson_radial_3d(rho)) <= 1e-12);
    }
}

TEST_CASE("gradient_bound") {
    CHECK(gradient_bound(Dimension(2), 0.0) == doctest::Approx(4.0 / pi).epsilon(1e-15));
    CHECK(gradient_bound(Dimension(3), 0.0) == doctest::Approx(8.0 / (3.0 * root3)).epsilon(1e-15));
    CHECK(gradient_bound(Dimension(4), 0.5) == doctest::Approx(16.0 / (3.0 * pi) / 0.75).epsilon(1e-15));
    CHECK_THROWS_AS(gradient_bound(Dimension(4), 1.0), std::domain_error);
}

TEST_CASE("pw_bound and halfspace_constant") {
    CHECK(pw_bound(Dimension(3), 1.0, 2.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(pw_bound(Dimension(2), 0.5, 2.0) == doctest::Approx(8.0 / pi).epsilon(1e-15));
    CHECK_THROWS_AS(pw_bound(Dimension(3), 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(pw_bound(Dimension(3), 1.0, -1.0), std::domain_error);
    CHECK(halfspace_constant(Dimension(2)) == doctest::Approx(2.0 / pi).epsilon(1e-15));
    CHECK(halfspace_constant(Dimension(3)) == doctest::Approx(4.0 / (3.0 * root3)).epsilon(1e-15));
    const double direct4 = 4.0 * std::pow(3.0, 2.5) * (4.0 * pi / 3.0) / (64.0 * pi * pi / 2.0);
    CHECK(halfspace_constant(Dimension(4)) == doctest::Approx(direct4).epsilon(1e-15));
}

TEST_CASE("bound_table") {
    const auto t4 = bound_table(Dimension(4), {0.0});
    REQUIRE(t4.rows.size() == 1);
    REQUIRE(t4.rows[0].capital_c.has_value());
    CHECK(*t4.rows[0].capital_c == doctest::Approx(16.0 / (3.0 * pi)).epsilon(1e-12));
    CHECK(t4.rows[0].gradient_bound == doctest::Approx(16.0 / (3.0 * pi)).epsilon(1e-15));
    CHECK_FALSE(t4.rows[0].khavinson_radial.has_value());

    const auto t3 = bound_table(Dimension(3), {0.0, 0.5});
    REQUIRE(t3.rows.size() == 2);
    for (const auto& row : t3.rows) CHECK(row.khavinson_radial.has_value());

    auto grid = tenths();
    grid.push_back(0.99);
    const auto t5 = bound_table(Dimension(5), grid);
    REQUIRE(t5.rows.size() == 11);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(t5.rows[i].rho == grid[i]);
        CHECK(*t5.rows[i].capital_c <= t5.rows[i].schwarz_pick_over_1mr2 * (1.0 + 1e-12));
    }

    const auto t2 = bound_table(Dimension(2), {0.3});
    CHECK_FALSE(t2.rows[0].capital_c.has_value());
    CHECK_THROWS_AS(bound_table(Dimension(4), {0.2, 1.0}), std::domain_error);
}
