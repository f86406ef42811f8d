#pragma once

#include <optional>
#include <vector>

#include "hsp/common.hpp"
#include "hsp/quadrature.hpp"

namespace hsp::bounds {

/// Lebesgue measure of the unit ball of R^n, pi^{n/2} / Gamma(n/2 + 1).
double ball_volume(int n);

/// 2 m_{n-1}(B_{n-1}) / m_n(B_n): the sharp |grad u(0)| for |u| < 1.
double schwarz_pick_constant(Dimension n);

/// 8 / (3 sqrt 3), the best constant in |grad u(x)| (1 - |x|^2) < C on B_3.
double khavinson_sharp_constant_3d();

/// Radial derivative attained at |x| = t by the n = 3 extremal function:
/// (9 - t^2)^2 / (3 sqrt 3 (1 - t^2) [(t^2 + 3)^{3/2} + 3 sqrt 3 (1 - t^2)]).
double khavinson_radial_3d(double t);

struct BoundQuery {
    Dimension n;
    double rho;
};

/// Sharp pointwise gradient constant
/// C(x) = (n-1) m_{n-1} / m_n * Phi(|x|) / (1 - |x|^2), n >= 3.
double capital_c(const BoundQuery& query, const quadrature::QuadratureSpec& spec = {});

/// Schwarz-Pick envelope: schwarz_pick_constant(n) / (1 - rho^2), with the
/// n = 3 constant replaced by 8 / (3 sqrt 3). At n = 3 the bound is strict.
double gradient_bound(Dimension n, double rho);

/// Oscillation estimate m_{n-1}/m_n * osc / dist for harmonic u on a domain.
double pw_bound(Dimension n, double dist, double osc);

/// Sharp half-space constant
/// 4 (n-1)^{(n+1)/2} m_{n-1} / (n^{(n+2)/2} m_n).
double halfspace_constant(Dimension n);

struct BoundRow {
    double rho;
    std::optional<double> capital_c;  // n >= 3 only
    double gradient_bound;
    double schwarz_pick_over_1mr2;
    double pw_over_1mr;
    std::optional<double> khavinson_radial;  // n = 3 only
};

struct BoundTable {
    Dimension n;
    std::vector<BoundRow> rows;
};

BoundTable bound_table(Dimension n, const std::vector<double>& rho_grid, const quadrature::QuadratureSpec& spec = {});

}  // namespace hsp::bounds
