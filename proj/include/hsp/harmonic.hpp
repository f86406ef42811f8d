#pragma once

#include <cstdint>
#include <vector>

#include "hsp/common.hpp"
#include "hsp/quadrature.hpp"
#include "hsp/report.hpp"

namespace hsp::harmonic {

// Harmonic functions on B_n given as Poisson integrals of zonal boundary data
// f(zeta) = g(<zeta, e_n>). At an axis point rho * e_n the gradient of such a
// function is radial, so every quantity reduces to a 1-D integral in
// t = <zeta, e_n> against the normalised zonal measure.

/// Piecewise-constant g on [-1, 1]: values[i] on (breakpoints[i-1], breakpoints[i]).
class ZonalBoundaryData {
public:
    /// Throws std::invalid_argument unless breakpoints are strictly increasing
    /// in (-1, 1), values.size() == breakpoints.size() + 1 and |value| <= 1.
    ZonalBoundaryData(std::vector<double> breakpoints, std::vector<double> values);

    static ZonalBoundaryData constant(double value);
    /// +1 on the upper hemisphere, -1 on the lower one.
    static ZonalBoundaryData hemisphere();
    /// sign(t - threshold).
    static ZonalBoundaryData sign(double threshold);

    double operator()(double t) const;
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }

    friend bool operator==(const ZonalBoundaryData&, const ZonalBoundaryData&) = default;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

struct AxisPoint {
    double rho;
};

/// (1 - rho^2) / (1 - 2 rho t + rho^2)^{n/2}, normalised to unit zonal mass.
double poisson_kernel(Dimension n, double rho, double t);

/// d/drho of poisson_kernel:
/// [(n - (n-4) rho^2) t - rho (n + 2 - (n-2) rho^2)] / (1 - 2 rho t + rho^2)^{(n+2)/2}.
double radial_derivative_kernel(Dimension n, double rho, double t);

/// Zero of radial_derivative_kernel in t, where the extremal datum switches sign.
double kernel_sign_change(Dimension n, double rho);

/// u(rho e_n) for u = P[g].
double zonal_poisson_value(Dimension n, const ZonalBoundaryData& data, AxisPoint p,
                           const quadrature::QuadratureSpec& spec = {});

/// d/drho u(rho e_n); equals +-|grad u(rho e_n)| for zonal data.
double radial_derivative(Dimension n, const ZonalBoundaryData& data, AxisPoint p,
                         const quadrature::QuadratureSpec& spec = {});

/// |grad U(0)| for the hemisphere datum.
double extremal_gradient_at_origin(Dimension n, const quadrature::QuadratureSpec& spec = {});

/// sup over |g| <= 1 of |d/drho P[g](rho e_n)|, i.e. the zonal L^1 norm of the
/// kernel derivative. Attained by ZonalBoundaryData::sign(kernel_sign_change(n, rho)).
double sharp_radial_sup(Dimension n, AxisPoint p, const quadrature::QuadratureSpec& spec = {});

/// Deterministic piecewise-constant datum with `pieces` pieces and values in [-1, 1].
ZonalBoundaryData random_zonal_data(std::uint64_t seed, int pieces);

/// Default probe radii: 0, 0.1, ..., 0.9 and 0.99.
std::vector<double> default_probe_grid();

/// Random zonal data against the Schwarz-Pick envelope: |grad u| (1 - rho^2)
/// never exceeds the sharp constant, and the per-rho extremal sign datum
/// attains C(rho e_n) (1 - rho^2).
VerificationReport probe_schwarz_pick(Dimension n, int samples, const std::vector<double>& rho_grid,
                                      std::uint64_t seed, const quadrature::QuadratureSpec& spec = {});

/// Observes |grad u| (1 - rho^2) / ((1 - u^2) schwarz_pick_constant(n)) over
/// random data. Only for n = 2 (where the inequality is known) is a ratio
/// above 1 a failure; otherwise the check is informational.
VerificationReport probe_conjecture(Dimension n, int samples, const std::vector<double>& rho_grid,
                                    std::uint64_t seed, const quadrature::QuadratureSpec& spec = {});

/// sharp_radial_sup against capital_c (and khavinson_radial_3d at n = 3), abs 1e-6.
VerificationReport verify_theorem_b(Dimension n, const std::vector<double>& rho_grid);

/// extremal_gradient_at_origin against schwarz_pick_constant, abs 1e-8.
VerificationReport verify_extremal(Dimension n);

}  // namespace hsp::harmonic
