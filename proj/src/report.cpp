#include "hsp/report.hpp"

#include <algorithm>
#include <cmath>

namespace hsp {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed || c.expected_failure; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const CheckResult& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void CheckAccumulator::record(double margin, double at) {
    const bool ok = strict_ ? margin > 0.0 : margin >= 0.0;
    if (std::isnan(margin)) {
        fail(at);
        return;
    }
    if (margin < result_.worst_margin) {
        result_.worst_margin = margin;
        result_.at = at;
    }
    if (!ok) {
        result_.passed = false;
    }
}

void CheckAccumulator::fail(double at) {
    if (result_.worst_margin != -std::numeric_limits<double>::infinity()) {
        result_.worst_margin = -std::numeric_limits<double>::infinity();
        result_.at = at;
    }
    result_.passed = false;
}

}  // namespace hsp
