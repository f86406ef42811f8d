#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hsp {

/// Thrown when an iterative evaluation (series, adaptive quadrature) runs out
/// of budget. Carries the best value reached and its error estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

/// Ambient dimension n of the ball B_n. Always n >= 2; individual operations
/// enforce stricter lower bounds with require_at_least().
class Dimension {
public:
    explicit Dimension(int n) : n_(n) {
        if (n < 2) {
            throw std::domain_error("dimension must be >= 2, got " + std::to_string(n));
        }
    }

    int value() const noexcept { return n_; }
    double as_real() const noexcept { return static_cast<double>(n_); }

    const Dimension& require_at_least(int lower, const char* what) const {
        if (n_ < lower) {
            throw std::domain_error(std::string(what) + " requires n >= " + std::to_string(lower) +
                                    ", got n = " + std::to_string(n_));
        }
        return *this;
    }

    friend bool operator==(Dimension, Dimension) = default;

private:
    int n_;
};

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace hsp
