#pragma once

#include "hsp/common.hpp"
#include "hsp/report.hpp"

namespace hsp::specfun {

// Numerical checks of the classical identities the rest of the library leans
// on. Each sweeps a fixed grid and reports the worst margin.

/// sum_k C_k^lambda(x) z^k = (1 - 2xz + z^2)^{-lambda}, abs 1e-10.
CheckResult check_generating_relation();

/// sum_k (nu)_k/(2 lambda)_k C_k^lambda(x) z^k against the 2F1 closed form,
/// nu = n - 1, lambda = n/2, 1e-9 relative to max(1, |value|).
CheckResult check_rainville(Dimension n);

/// 2F1(a,b;c;z) = (1-z)^{-b} 2F1(c-a,b;c;z/(z-1)), rel 1e-12 on z in [0, 0.9].
CheckResult check_pfaff();

/// (c-b) z F(a,b;c+1;z) = c F(a-1,b;c;z) - c(1-z) F(a,b;c;z) with
/// a = 1, b = n/2, c = (n+1)/2, rel 1e-12.
CheckResult check_contiguous(Dimension n);

/// Closed form of int |x - s| (1-x^2)^{lambda-1/2} C_k^lambda against
/// brute-force quadrature for 2 <= k <= 10, abs 1e-9.
CheckResult check_abs_kernel_closed_form();

/// Degree-raising derivative of (1-x^2)^{lambda-1/2} C_k^lambda against
/// central differences, rel 1e-6.
CheckResult check_weighted_derivative();

/// d/dz[z^{c-a} (1-z)^{a+b-c} F(a,b;c;z)] = (c-a) z^{c-a-1} (1-z)^{a+b-c-1} F(a-1,b;c;z)
/// against central differences, rel 1e-6.
CheckResult check_hyp2f1_derivative(Dimension n);

/// All of the above as suite "identities".
VerificationReport verify_identities(Dimension n);

}  // namespace hsp::specfun
