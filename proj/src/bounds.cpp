#include "hsp/bounds.hpp"

#include <cmath>
#include <numbers>

#include "hsp/phi.hpp"

namespace hsp::bounds {

namespace {

void require_open_unit(double rho, const char* what) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error(std::string(what) + ": rho must lie in [0, 1)");
    }
}

}  // namespace

double ball_volume(int n) {
    if (n < 0) {
        throw std::domain_error("ball_volume: n must be nonnegative");
    }
    const double half = 0.5 * n;
    return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

double schwarz_pick_constant(Dimension n) {
    return 2.0 * ball_volume(n.value() - 1) / ball_volume(n.value());
}

double khavinson_sharp_constant_3d() { return 8.0 / (3.0 * std::sqrt(3.0)); }

double khavinson_radial_3d(double t) {
    if (!(t >= 0.0 && t < 1.0)) {
        throw std::domain_error("khavinson_radial_3d: t must lie in [0, 1)");
    }
    const double t2 = t * t;
    const double root27 = 3.0 * std::sqrt(3.0);
    const double gap = (1.0 - t) * (1.0 + t);
    const double num = (9.0 - t2) * (9.0 - t2);
    return num / (root27 * gap * (std::pow(t2 + 3.0, 1.5) + root27 * gap));
}

double capital_c(const BoundQuery& query, const quadrature::QuadratureSpec& spec) {
    query.n.require_at_least(3, "capital_c");
    require_open_unit(query.rho, "capital_c");
    const int n = query.n.value();
    const double phi = phi::phi_quad(query.n, query.rho, spec).value;
    return (n - 1.0) * ball_volume(n - 1) / ball_volume(n) * phi / ((1.0 - query.rho) * (1.0 + query.rho));
}

double gradient_bound(Dimension n, double rho) {
    require_open_unit(rho, "gradient_bound");
    const double constant = n.value() == 3 ? khavinson_sharp_constant_3d() : schwarz_pick_constant(n);
    return constant / ((1.0 - rho) * (1.0 + rho));
}

double pw_bound(Dimension n, double dist, double osc) {
    if (!(dist > 0.0)) {
        throw std::domain_error("pw_bound: dist must be positive");
    }
    if (!(osc >= 0.0)) {
        throw std::domain_error("pw_bound: osc must be nonnegative");
    }
    return ball_volume(n.value() - 1) / ball_volume(n.value()) * osc / dist;
}

double halfspace_constant(Dimension n) {
    const double nn = n.as_real();
    return 4.0 * std::pow(nn - 1.0, 0.5 * (nn + 1.0)) * ball_volume(n.value() - 1) /
           (std::pow(nn, 0.5 * (nn + 2.0)) * ball_volume(n.value()));
}

BoundTable bound_table(Dimension n, const std::vector<double>& rho_grid, const quadrature::QuadratureSpec& spec) {
    BoundTable table{n, {}};
    table.rows.reserve(rho_grid.size());
    for (double rho : rho_grid) {
        require_open_unit(rho, "bound_table");
        BoundRow row{};
        row.rho = rho;
        if (n.value() >= 3) {
            row.capital_c = capital_c({n, rho}, spec);
        }
        row.gradient_bound = gradient_bound(n, rho);
        row.schwarz_pick_over_1mr2 = schwarz_pick_constant(n) / ((1.0 - rho) * (1.0 + rho));
        row.pw_over_1mr = pw_bound(n, 1.0 - rho, 2.0);
        if (n.value() == 3) {
            row.khavinson_radial = khavinson_radial_3d(rho);
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace hsp::bounds
