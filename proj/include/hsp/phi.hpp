#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "hsp/common.hpp"
#include "hsp/quadrature.hpp"
#include "hsp/report.hpp"

namespace hsp::phi {

// Phi(rho) = int_{-1}^{1} |t - (n-2) rho / n| (1 - t^2)^{(n-3)/2} / (1 - 2 t rho + rho^2)^{(n-2)/2} dt
//
// is the radial profile of the sharp gradient constant C(x) for bounded
// harmonic functions on B_n. Every quantity here is available through at
// least two independent routes so they can be checked against each other.

enum class Method { quad, series, closed3, second_closed, second_series, second_fd };

std::string_view to_string(Method m);

struct PhiEvaluation {
    Dimension n;
    double rho;
    double value;
    Method method;
    double error_estimate;
};

/// Quadrature of the defining integral (n >= 3, 0 <= rho <= 1).
PhiEvaluation phi_quad(Dimension n, double rho, const quadrature::QuadratureSpec& spec = {});

/// Truncation degree used when the caller does not pick one.
int default_series_degree(double rho);

/// Gegenbauer expansion in powers of rho: two explicit integrals plus the
/// closed-form k >= 2 tail, truncated at degree K. error_estimate is the first
/// omitted term.
PhiEvaluation phi_series(Dimension n, double rho, std::optional<int> K = std::nullopt,
                         const quadrature::QuadratureSpec& spec = {});

/// Closed form at n = 3: (2/3) [(1 + rho^2/3)^{3/2} - 1 + rho^2] / rho^2.
double phi3_closed(double rho);

/// t [1 - (n-2)^2 t / n^2] / [1 - (n-4) t / n], the argument of the 2F1 below.
double varphi(Dimension n, double t);

/// Below this rho the closed-form second derivative loses digits to the
/// removable 1/rho^2 singularity and phi_second() switches to the series.
inline constexpr double kSecondClosedMinRho = 1e-3;

/// Closed-form Phi''(rho) in terms of 2F1(1, n/2; (n+1)/2; varphi(rho^2)),
/// n >= 4, kSecondClosedMinRho <= rho <= 1.
PhiEvaluation phi_second_closed(Dimension n, double rho);

/// Phi''(rho) as three Gegenbauer series (n >= 3, 0 <= rho < 1). Without K the
/// series is summed until the terms are negligible.
PhiEvaluation phi_second_series(Dimension n, double rho, std::optional<int> K = std::nullopt);

/// Phi''(rho) by the closed form where it is well conditioned, else the series.
PhiEvaluation phi_second(Dimension n, double rho);

/// Second difference of phi_quad (step h, one Richardson step).
PhiEvaluation phi_second_fd(Dimension n, double rho, double h = 1e-3);

/// Left- and right-hand sides of the hypergeometric inequality that drives the
/// concavity of Phi:
///   2F1(1, n/2; (n+1)/2; varphi(t)) versus a rational function of t.
struct TechnicalSides {
    double lhs;
    double rhs;
};
TechnicalSides technical_sides(Dimension n, double t);

/// Psi(t) = varphi^{(n-1)/2} (1 - varphi)^{1/2} 2F1(1, n/2; (n+1)/2; varphi)
///          - t^{(n-1)/2} [..]^{(n-3)/2} [..] / ((..)^{(n-2)/2} [..]).
double psi(Dimension n, double t);

/// Closed form of Psi'(t) for n >= 4, t in (0, 1].
double psi_prime_closed(Dimension n, double t);

/// Integer coefficients {q0, q1, q2} of
/// Q_n(t) = n^3 (n^2 - 3n - 2) - 2n (n-2)(n-4)(n^2 - 3n + 1) t + (n-2)^2 (n-3)(n-4)^2 t^2.
std::array<std::int64_t, 3> psi_quadratic_coefficients(Dimension n);

double psi_quadratic(Dimension n, double t);

__extension__ using Int128 = __int128;

/// Exact minimum of Q_n on [0, 1] as a rational number num / den.
struct ExactMinimum {
    Int128 num;
    Int128 den;
    double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool positive() const { return (num > 0) == (den > 0) && num != 0; }
};
ExactMinimum psi_quadratic_min(Dimension n);

/// Strict margin used by the monotonicity and concavity sweeps.
inline constexpr double kStrictMargin = 1e-12;

/// Phi on a uniform grid of [0, 1]: strictly decreasing with max 2/(n-1) at 0
/// for n >= 4, strictly increasing with max at rho = 1 for n = 3, and
/// Phi'(0) = 0.
VerificationReport verify_monotone(Dimension n, int grid_size = 1001);

/// Phi'' < 0 on a grid of (0, 1) (expected to fail at n = 3), and the three
/// second-derivative routes agree to 1e-6 on [0.05, 0.95].
VerificationReport verify_concavity(Dimension n, int grid_size = 1001);

/// The hypergeometric inequality on a grid of [0, 1] (reversed at n = 3),
/// Psi > 0 and Q_n > 0 for n >= 4, Psi(0) = 0, Psi' closed form vs differences.
VerificationReport verify_technical(Dimension n, int grid_size = 1001);

}  // namespace hsp::phi
