#pragma once

#include <algorithm>
#include <cmath>

namespace hsp::numdiff {

/// Central first difference with one Richardson step (error O(h^4)).
template <class F>
double first_derivative(F&& f, double x, double h) {
    auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
    const double coarse = central(h);
    const double fine = central(0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

/// Central second difference with one Richardson step (error O(h^4)).
template <class F>
double second_derivative(F&& f, double x, double h) {
    const double fx = f(x);
    auto central = [&](double step) { return (f(x + step) - 2.0 * fx + f(x - step)) / (step * step); };
    const double coarse = central(h);
    const double fine = central(0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

/// One-sided second-order first difference at x from the right.
template <class F>
double forward_first_derivative(F&& f, double x, double h) {
    return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
}

/// tol * max(1, |a|, |b|) - |a - b|: nonnegative iff a and b agree to `tol`
/// relative, with an absolute floor near zero.
inline double agreement_margin(double a, double b, double tol) {
    return tol * std::max({1.0, std::fabs(a), std::fabs(b)}) - std::fabs(a - b);
}

/// tol - |a - b|.
inline double absolute_margin(double a, double b, double tol) { return tol - std::fabs(a - b); }

}  // namespace hsp::numdiff
