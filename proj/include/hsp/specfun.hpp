#pragma once

#include <stdexcept>
#include <vector>

#include "hsp/common.hpp"
#include "hsp/quadrature.hpp"

namespace hsp::specfun {

/// z >= 1 for the Gauss series.
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// c is zero or a negative integer.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Rising factorial (lambda)_k = lambda (lambda + 1) ... (lambda + k - 1).
double pochhammer(double lambda, int k);

/// C_k^lambda(x) by forward recurrence in the degree. Requires lambda > -1/2.
double gegenbauer(double lambda, int degree, double x);

/// C_0^lambda(x), ..., C_max_degree^lambda(x) in one recurrence pass.
///
/// Unlike gegenbauer() this does not reject lambda <= -1/2: the recurrence is
/// still the generating-function expansion there, and the weighted derivative
/// identity needs C^{lambda - 1}.
std::vector<double> gegenbauer_sequence(double lambda, int max_degree, double x);

struct Hyp2f1Options {
    double rel_tol = 1e-13;
    int max_terms = 10000;
};

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.
///
/// |z| < 1/2 and z in [1/2, 1) with c - a - b >= 0 are summed directly;
/// z in [1/2, 1) with c - a - b < 0 goes through Euler's transformation first,
/// and z < -1/2 through Pfaff's, which lands in (1/3, 1).
///
/// Throws DivergenceError (z >= 1), PoleError (c in {0, -1, -2, ...}) or
/// ConvergenceError when the term budget is exhausted.
double hyp2f1(double a, double b, double c, double z, const Hyp2f1Options& options = {});

/// int_{-1}^{1} |x - s| (1 - x^2)^{lambda - 1/2} C_k^lambda(x) dx.
///
/// Closed form for k >= 2; the k = 0 and k = 1 integrals are evaluated by
/// quadrature with a kink at s.
double abs_kernel_coefficient(double lambda, int k, double s, const quadrature::QuadratureSpec& spec = {});

/// d/dx[(1 - x^2)^{lambda - 1/2} C_k^lambda(x)] via the degree-raising form
/// -(k + 1)(k + 2 lambda - 1) / (2 (lambda - 1)) (1 - x^2)^{lambda - 3/2} C_{k+1}^{lambda-1}(x).
double gegenbauer_weighted_derivative(double lambda, int k, double x);

}  // namespace hsp::specfun
