#pragma once

#include <limits>
#include <string>
#include <vector>

namespace hsp {

/// One named check. worst_margin is the smallest slack seen over the sweep
/// (negative means violated) and `at` is the grid abscissa where it occurred.
struct CheckResult {
    std::string name;
    bool passed = true;
    bool expected_failure = false;
    double worst_margin = std::numeric_limits<double>::infinity();
    double at = 0.0;
};

struct VerificationReport {
    std::string suite;
    int n = 0;
    std::vector<CheckResult> checks;

    /// True iff every check passed or is an expected failure.
    bool passed() const;

    const CheckResult* find(const std::string& name) const;
    void append(const VerificationReport& other);
};

/// Accumulates margins for one check. A margin must be >= 0 (or > 0 when
/// strict) for the check to pass; NaN margins fail.
class CheckAccumulator {
public:
    explicit CheckAccumulator(std::string name, bool strict = false) : strict_(strict) {
        result_.name = std::move(name);
    }

    void record(double margin, double at);
    /// Records a failure that prevented evaluation (e.g. a thrown error).
    void fail(double at);

    CheckAccumulator& expect_failure(bool expected) {
        result_.expected_failure = expected;
        return *this;
    }

    CheckResult finish() const { return result_; }

private:
    CheckResult result_;
    bool strict_;
};

}  // namespace hsp
