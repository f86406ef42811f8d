#pragma once

#include <functional>
#include <vector>

#include "hsp/common.hpp"

namespace hsp::quadrature {

using Integrand = std::function<double(double)>;

/// Tolerances and breakpoints for one integration.
///
/// Kinks are caller-declared abscissae where the integrand has a corner
/// (|t - c| factors); the interval is split there before any adaptation.
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_subdivisions = 2000;
    int base_nodes = 15;
    std::vector<double> kinks;

    QuadratureSpec with_kinks(std::vector<double> points) const;

    /// Throws std::invalid_argument unless the spec is usable on [a, b].
    void validate(double a, double b) const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
};

/// Globally adaptive Gauss-Legendre quadrature.
///
/// [a, b] is split at every kink. Pieces that touch +-1 (and lie inside
/// [-1, 1]) are integrated in the angle variable t = cos(theta), which turns
/// (1 - t^2)^alpha weights into sin^(2 alpha + 1)(theta). Each piece is then
/// bisected until the summed error estimate meets
/// max(abs_tol, rel_tol * |value|).
///
/// Throws ConvergenceError when max_subdivisions is exhausted.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

/// Normalising constant c_n = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2)) of the
/// zonal reduction of normalised surface measure on S^{n-1}.
double zonal_normalization(Dimension n);

/// c_n * int_{-1}^{1} g(t) (1 - t^2)^{(n-3)/2} dt: the sphere average of the
/// zonal function g(<zeta, e>). Kinks are given in t. Integrated in the angle
/// theta = acos(t), so the weight stays bounded for every n >= 2.
double zonal_sphere_integral(const Integrand& g, Dimension n, const QuadratureSpec& spec = {});

/// A point of the zonal variable together with its distance to the pole t = 1,
/// which is computed from the angle and keeps full relative accuracy where
/// 1 - t itself would cancel.
struct ZonalPoint {
    double t;
    double one_minus_t;
};
using ZonalIntegrand = std::function<double(ZonalPoint)>;

double zonal_sphere_integral(const ZonalIntegrand& g, Dimension n, const QuadratureSpec& spec = {});

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int points);

}  // namespace hsp::quadrature
