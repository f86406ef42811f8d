#include "hsp/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "hsp/bounds.hpp"
#include "hsp/numdiff.hpp"

namespace hsp::harmonic {

namespace {

void require_rho(double rho, const char* what) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::domain_error(std::string(what) + ": rho must lie in [0, 1)");
    }
}

// The kernels depend on t only through d = 1 - t, the distance to the pole
// where they peak; callers pass d accurately.
double distance_squared(double rho, double d) { return (1.0 - rho) * (1.0 - rho) + 2.0 * rho * d; }

double poisson_at(Dimension n, double rho, double d) {
    return (1.0 - rho) * (1.0 + rho) / std::pow(distance_squared(rho, d), 0.5 * n.as_real());
}

double radial_derivative_at(Dimension n, double rho, double d) {
    const double nn = n.as_real();
    const double gap = (1.0 - rho) * (1.0 - rho);
    const double slope = nn - (nn - 4.0) * rho * rho;
    // slope * t - rho (n + 2 - (n-2) rho^2), rewritten around t = 1 where the
    // two terms are O(1) but their difference is O((1 - rho)^2).
    const double numerator = gap * (nn + (nn - 2.0) * rho) - slope * d;
    return numerator / std::pow(distance_squared(rho, d), 0.5 * (nn + 2.0));
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ZonalBoundaryData::ZonalBoundaryData(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.size() != breakpoints_.size() + 1) {
        throw std::invalid_argument("zonal data needs exactly one more value than breakpoints");
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] > -1.0 && breakpoints_[i] < 1.0)) {
            throw std::invalid_argument("zonal breakpoints must lie in (-1, 1)");
        }
        if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1])) {
            throw std::invalid_argument("zonal breakpoints must be strictly increasing");
        }
    }
    for (double v : values_) {
        if (!(std::fabs(v) <= 1.0)) {
            throw std::invalid_argument("zonal data values must satisfy |v| <= 1");
        }
    }
}

ZonalBoundaryData ZonalBoundaryData::constant(double value) { return ZonalBoundaryData({}, {value}); }

ZonalBoundaryData ZonalBoundaryData::hemisphere() { return sign(0.0); }

ZonalBoundaryData ZonalBoundaryData::sign(double threshold) { return ZonalBoundaryData({threshold}, {-1.0, 1.0}); }

double ZonalBoundaryData::operator()(double t) const {
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double poisson_kernel(Dimension n, double rho, double t) {
    require_rho(rho, "poisson_kernel");
    return poisson_at(n, rho, 1.0 - t);
}

double radial_derivative_kernel(Dimension n, double rho, double t) {
    require_rho(rho, "radial_derivative_kernel");
    return radial_derivative_at(n, rho, 1.0 - t);
}

double kernel_sign_change(Dimension n, double rho) {
    require_rho(rho, "kernel_sign_change");
    const double nn = n.as_real();
    const double r2 = rho * rho;
    return rho * (nn + 2.0 - (nn - 2.0) * r2) / (nn - (nn - 4.0) * r2);
}

double zonal_poisson_value(Dimension n, const ZonalBoundaryData& data, AxisPoint p,
                           const quadrature::QuadratureSpec& spec) {
    require_rho(p.rho, "zonal_poisson_value");
    auto integrand = [&](quadrature::ZonalPoint z) { return poisson_at(n, p.rho, z.one_minus_t) * data(z.t); };
    return quadrature::zonal_sphere_integral(integrand, n, spec.with_kinks(data.breakpoints()));
}

double radial_derivative(Dimension n, const ZonalBoundaryData& data, AxisPoint p,
                         const quadrature::QuadratureSpec& spec) {
    require_rho(p.rho, "radial_derivative");
    auto integrand = [&](quadrature::ZonalPoint z) {
        return radial_derivative_at(n, p.rho, z.one_minus_t) * data(z.t);
    };
    return quadrature::zonal_sphere_integral(integrand, n, spec.with_kinks(data.breakpoints()));
}

double extremal_gradient_at_origin(Dimension n, const quadrature::QuadratureSpec& spec) {
    const auto hemisphere = ZonalBoundaryData::hemisphere();
    auto integrand = [&](double t) { return t * hemisphere(t); };
    return n.as_real() * quadrature::zonal_sphere_integral(integrand, n, spec.with_kinks({0.0}));
}

double sharp_radial_sup(Dimension n, AxisPoint p, const quadrature::QuadratureSpec& spec) {
    require_rho(p.rho, "sharp_radial_sup");
    auto integrand = [&](quadrature::ZonalPoint z) { return std::fabs(radial_derivative_at(n, p.rho, z.one_minus_t)); };
    return quadrature::zonal_sphere_integral(integrand, n, spec.with_kinks({kernel_sign_change(n, p.rho)}));
}

ZonalBoundaryData random_zonal_data(std::uint64_t seed, int pieces) {
    if (pieces < 1) {
        throw std::invalid_argument("random_zonal_data: pieces must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<double> breakpoints;
    while (static_cast<int>(breakpoints.size()) < pieces - 1) {
        const double t = 2.0 * unit_double(rng) - 1.0;
        if (t > -1.0 && std::find(breakpoints.begin(), breakpoints.end(), t) == breakpoints.end()) {
            breakpoints.push_back(t);
        }
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    std::vector<double> values(static_cast<std::size_t>(pieces));
    for (double& v : values) {
        v = 2.0 * unit_double(rng) - 1.0;
    }
    return ZonalBoundaryData(std::move(breakpoints), std::move(values));
}

std::vector<double> default_probe_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 9; ++i) grid.push_back(0.1 * i);
    grid.push_back(0.99);
    return grid;
}

namespace {

std::vector<ZonalBoundaryData> draw_samples(int samples, std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("probe: samples must be >= 1");
    }
    std::mt19937_64 master(seed);
    std::vector<ZonalBoundaryData> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t sub_seed = master();
        const int pieces = 1 + static_cast<int>(master() % 12);
        out.push_back(random_zonal_data(sub_seed, pieces));
    }
    return out;
}

}  // namespace

VerificationReport probe_schwarz_pick(Dimension n, int samples, const std::vector<double>& rho_grid,
                                      std::uint64_t seed, const quadrature::QuadratureSpec& spec) {
    const auto data = draw_samples(samples, seed);
    const bool three = n.value() == 3;
    const double sharp_constant = three ? bounds::khavinson_sharp_constant_3d() : bounds::schwarz_pick_constant(n);

    VerificationReport report;
    report.suite = "probe_schwarz_pick";
    report.n = n.value();

    CheckAccumulator dominance("random_data_within_sharp_constant");
    CheckAccumulator pointwise("random_data_within_sharp_radial_sup");
    CheckAccumulator attained("extremal_sign_datum_attains_c");
    CheckAccumulator origin(three ? "strict_below_constant_at_every_rho" : "hemisphere_equality_at_origin",
                            three);

    for (double rho : rho_grid) {
        const AxisPoint p{rho};
        const double scale = (1.0 - rho) * (1.0 + rho);
        const double sup = sharp_radial_sup(n, p, spec);
        for (const auto& datum : data) {
            const double grad = std::fabs(radial_derivative(n, datum, p, spec));
            dominance.record(sharp_constant + 1e-9 - grad * scale, rho);
            pointwise.record(sup + 1e-9 - grad, rho);
        }

        const auto extremal = ZonalBoundaryData::sign(kernel_sign_change(n, p.rho));
        const double extremal_grad = std::fabs(radial_derivative(n, extremal, p, spec));
        dominance.record(sharp_constant + 1e-9 - extremal_grad * scale, rho);
        const double target = n.value() >= 3 ? bounds::capital_c({n, rho}, spec) : bounds::gradient_bound(n, rho);
        attained.record(numdiff::absolute_margin(extremal_grad * scale, target * scale, 1e-6), rho);

        if (three) {
            // The n = 3 constant is a supremum that is never reached.
            origin.record(sharp_constant - extremal_grad * scale, rho);
        } else if (rho == 0.0) {
            const double hemi = std::fabs(radial_derivative(n, ZonalBoundaryData::hemisphere(), p, spec));
            origin.record(numdiff::absolute_margin(hemi, sharp_constant, 1e-8), rho);
        }
    }
    report.checks = {dominance.finish(), pointwise.finish(), attained.finish()};
    const CheckResult origin_result = origin.finish();
    if (origin_result.worst_margin != std::numeric_limits<double>::infinity()) {
        report.checks.push_back(origin_result);
    }
    return report;
}

VerificationReport probe_conjecture(Dimension n, int samples, const std::vector<double>& rho_grid,
                                    std::uint64_t seed, const quadrature::QuadratureSpec& spec) {
    if (n.value() == 3) {
        throw std::domain_error("probe_conjecture is defined for n = 2 or n >= 4");
    }
    auto data = draw_samples(samples, seed);
    data.push_back(ZonalBoundaryData::hemisphere());
    const double constant = bounds::schwarz_pick_constant(n);

    VerificationReport report;
    report.suite = "probe_conjecture";
    report.n = n.value();
    CheckAccumulator ratio("no_counterexample");
    // Only n = 2 is a theorem; elsewhere a ratio above 1 is an observation.
    ratio.expect_failure(n.value() != 2);

    auto observe = [&](const ZonalBoundaryData& datum, double rho) {
        const AxisPoint p{rho};
        const double u = zonal_poisson_value(n, datum, p, spec);
        const double defect = (1.0 - u) * (1.0 + u);
        if (defect < 1e-12) {
            return;
        }
        const double grad = std::fabs(radial_derivative(n, datum, p, spec));
        const double r = grad * (1.0 - rho) * (1.0 + rho) / (defect * constant);
        ratio.record(1.0 + 1e-9 - r, rho);
    };
    for (double rho : rho_grid) {
        for (const auto& datum : data) {
            observe(datum, rho);
        }
        observe(ZonalBoundaryData::sign(kernel_sign_change(n, rho)), rho);
    }
    report.checks = {ratio.finish()};
    return report;
}

VerificationReport verify_theorem_b(Dimension n, const std::vector<double>& rho_grid) {
    n.require_at_least(3, "verify_theorem_b");
    VerificationReport report;
    report.suite = "theoremB";
    report.n = n.value();
    CheckAccumulator sup_vs_c("sharp_radial_sup_equals_capital_c");
    CheckAccumulator khavinson("capital_c_equals_khavinson_radial");
    for (double rho : rho_grid) {
        const double c = bounds::capital_c({n, rho});
        sup_vs_c.record(numdiff::absolute_margin(sharp_radial_sup(n, {rho}), c, 1e-6), rho);
        if (n.value() == 3) {
            khavinson.record(numdiff::absolute_margin(bounds::khavinson_radial_3d(rho), c, 1e-6), rho);
        }
    }
    report.checks.push_back(sup_vs_c.finish());
    if (n.value() == 3) {
        report.checks.push_back(khavinson.finish());
    }
    return report;
}

VerificationReport verify_extremal(Dimension n) {
    VerificationReport report;
    report.suite = "extremal";
    report.n = n.value();
    CheckAccumulator acc("extremal_gradient_equals_schwarz_pick_constant");
    acc.record(numdiff::absolute_margin(extremal_gradient_at_origin(n), bounds::schwarz_pick_constant(n), 1e-8), 0.0);
    report.checks.push_back(acc.finish());
    return report;
}

}  // namespace hsp::harmonic
