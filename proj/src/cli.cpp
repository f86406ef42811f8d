#include "hsp/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsp/bounds.hpp"
#include "hsp/common.hpp"
#include "hsp/harmonic.hpp"
#include "hsp/identities.hpp"
#include "hsp/numdiff.hpp"
#include "hsp/phi.hpp"

namespace hsp::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { csv, json };

struct RunConfig {
    int n = 0;
    int steps = 101;
    int grid = 1001;
    std::uint64_t seed = 7;
    int samples = 200;
    double rho = 0.0;
    std::string suite = "all";
    std::string method = "quad";
    std::string output;
    Format format = Format::json;
};

// Shortest decimal string that round-trips to the same double.
std::string number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string optional_number(const std::optional<double>& x) { return x ? number(*x) : std::string(); }

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

// A command produces its formatted text and an exit code.
struct Outcome {
    std::string text;
    int code = 0;
};

Outcome emit_report(const VerificationReport& report, Format format) {
    std::ostringstream os;
    if (format == Format::json) {
        json checks = json::array();
        for (const CheckResult& c : report.checks) {
            checks.push_back({{"name", c.name},
                              {"passed", c.passed},
                              {"expected", c.expected_failure},
                              {"worst_margin", c.worst_margin},
                              {"at", c.at}});
        }
        json doc = {{"suite", report.suite}, {"n", report.n}, {"checks", checks}, {"passed", report.passed()}};
        os << doc.dump(2) << '\n';
    } else {
        os << "suite,n,name,passed,expected,worst_margin,at\n";
        for (const CheckResult& c : report.checks) {
            os << report.suite << ',' << report.n << ',' << c.name << ',' << (c.passed ? "true" : "false") << ','
               << (c.expected_failure ? "true" : "false") << ',' << number(c.worst_margin) << ',' << number(c.at)
               << '\n';
        }
    }
    return {os.str(), report.passed() ? 0 : 1};
}

void merge(VerificationReport& into, const VerificationReport& part) {
    for (CheckResult c : part.checks) {
        c.name = part.suite + "." + c.name;
        into.checks.push_back(std::move(c));
    }
}

std::vector<double> tenths() {
    std::vector<double> grid;
    for (int i = 0; i <= 9; ++i) grid.push_back(0.1 * i);
    return grid;
}

Outcome cmd_constants(const RunConfig& cfg) {
    const Dimension n(cfg.n);
    const int k = n.value();
    std::vector<std::pair<std::string, double>> rows = {
        {"ball_volume_n", bounds::ball_volume(k)},
        {"ball_volume_n_minus_1", bounds::ball_volume(k - 1)},
        {"schwarz_pick_constant", bounds::schwarz_pick_constant(n)},
        {"extremal_gradient_at_origin", harmonic::extremal_gradient_at_origin(n)},
        {"gradient_bound_constant", bounds::gradient_bound(n, 0.0)},
        {"pw_constant", bounds::pw_bound(n, 1.0, 1.0)},
        {"halfspace_constant", bounds::halfspace_constant(n)},
    };
    if (k == 3) {
        rows.emplace_back("khavinson_sharp_constant", bounds::khavinson_sharp_constant_3d());
    }
    if (k >= 3) {
        rows.emplace_back("phi_at_zero", 2.0 / (k - 1.0));
    }
    std::ostringstream os;
    if (cfg.format == Format::json) {
        json constants = json::object();
        for (const auto& [name, value] : rows) constants[name] = value;
        os << json{{"n", k}, {"constants", constants}}.dump(2) << '\n';
    } else {
        os << "name,value\n";
        for (const auto& [name, value] : rows) os << name << ',' << number(value) << '\n';
    }
    return {os.str(), 0};
}

Outcome cmd_phi_table(const RunConfig& cfg) {
    const Dimension n(cfg.n);
    n.require_at_least(3, "phi-table");
    if (cfg.steps < 2) {
        throw std::invalid_argument("phi-table: --steps must be >= 2");
    }
    if (cfg.method == "closed3" && n.value() != 3) {
        throw std::domain_error("phi-table: --method closed3 requires n = 3");
    }
    std::function<double(double)> phi;
    if (cfg.method == "series") {
        phi = [n](double r) { return phi::phi_series(n, r).value; };
    } else if (cfg.method == "closed3") {
        phi = [](double r) { return phi::phi3_closed(r); };
    } else {
        phi = [n](double r) { return phi::phi_quad(n, r).value; };
    }
    // Phi is even, so differences straddling 0 reflect.
    auto even = [&](double r) { return phi(std::fabs(r)); };

    std::ostringstream os;
    json rows = json::array();
    if (cfg.format == Format::csv) {
        os << "rho,phi,phi_prime_fd,phi_second_closed,phi_second_series\n";
    }
    for (int i = 0; i < cfg.steps; ++i) {
        const double rho = 0.99 * i / (cfg.steps - 1);
        const double value = phi(rho);
        const double prime = numdiff::first_derivative(even, rho, 1e-3);
        std::optional<double> second_closed;
        if (n.value() >= 4 && rho >= phi::kSecondClosedMinRho) {
            second_closed = phi::phi_second_closed(n, rho).value;
        }
        const double second_series = phi::phi_second_series(n, rho).value;
        if (cfg.format == Format::csv) {
            os << number(rho) << ',' << number(value) << ',' << number(prime) << ','
               << optional_number(second_closed) << ',' << number(second_series) << '\n';
        } else {
            rows.push_back({{"rho", rho},
                            {"phi", value},
                            {"phi_prime_fd", prime},
                            {"phi_second_closed", optional_json(second_closed)},
                            {"phi_second_series", second_series}});
        }
    }
    if (cfg.format == Format::json) {
        os << json{{"n", n.value()}, {"method", cfg.method}, {"rows", rows}}.dump(2) << '\n';
    }
    return {os.str(), 0};
}

Outcome cmd_verify(const RunConfig& cfg) {
    const Dimension n(cfg.n);
    n.require_at_least(3, "verify");
    if (cfg.grid < 3) {
        throw std::invalid_argument("verify: --grid must be >= 3");
    }
    auto one = [&](const std::string& suite) -> VerificationReport {
        if (suite == "monotone") return phi::verify_monotone(n, cfg.grid);
        if (suite == "concavity") return phi::verify_concavity(n, cfg.grid);
        if (suite == "technical") return phi::verify_technical(n, cfg.grid);
        if (suite == "identities") return specfun::verify_identities(n);
        return harmonic::verify_theorem_b(n, tenths());
    };
    if (cfg.suite != "all") {
        return emit_report(one(cfg.suite), cfg.format);
    }
    VerificationReport all;
    all.suite = "all";
    all.n = n.value();
    for (const char* suite : {"monotone", "concavity", "technical", "identities", "theoremB"}) {
        merge(all, one(suite));
    }
    return emit_report(all, cfg.format);
}

Outcome cmd_extremal(const RunConfig& cfg) { return emit_report(harmonic::verify_extremal(Dimension(cfg.n)), cfg.format); }

Outcome cmd_probe(const RunConfig& cfg) {
    const Dimension n(cfg.n);
    if (cfg.samples < 1) {
        throw std::invalid_argument("probe: --samples must be >= 1");
    }
    const auto grid = harmonic::default_probe_grid();
    VerificationReport all;
    all.suite = "probe";
    all.n = n.value();
    merge(all, harmonic::probe_schwarz_pick(n, cfg.samples, grid, cfg.seed));
    if (n.value() != 3) {
        merge(all, harmonic::probe_conjecture(n, cfg.samples, grid, cfg.seed));
    }
    return emit_report(all, cfg.format);
}

Outcome cmd_bound(const RunConfig& cfg) {
    const Dimension n(cfg.n);
    const auto table = bounds::bound_table(n, {cfg.rho});
    const bounds::BoundRow& row = table.rows.front();
    std::ostringstream os;
    if (cfg.format == Format::json) {
        json doc = {{"n", n.value()},
                    {"rho", row.rho},
                    {"capital_c", optional_json(row.capital_c)},
                    {"gradient_bound", row.gradient_bound},
                    {"schwarz_pick_over_1mr2", row.schwarz_pick_over_1mr2},
                    {"pw_over_1mr", row.pw_over_1mr},
                    {"khavinson_radial", optional_json(row.khavinson_radial)}};
        os << doc.dump(2) << '\n';
    } else {
        os << "n,rho,capital_c,gradient_bound,schwarz_pick_over_1mr2,pw_over_1mr,khavinson_radial\n";
        os << n.value() << ',' << number(row.rho) << ',' << optional_number(row.capital_c) << ','
           << number(row.gradient_bound) << ',' << number(row.schwarz_pick_over_1mr2) << ','
           << number(row.pw_over_1mr) << ',' << optional_number(row.khavinson_radial) << '\n';
    }
    return {os.str(), 0};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Sharp Schwarz-Pick gradient bounds for harmonic functions on the unit ball"};
    app.name("hsp");
    app.require_subcommand(1);
    app.fallthrough();

    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--n", cfg.n, "Dimension of the ball (n >= 2)")->required()->check(CLI::Range(2, 100000));
    app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--output", cfg.output, "Write to this file instead of stdout");

    auto* constants = app.add_subcommand("constants", "Sharp constants for B_n");
    auto* table = app.add_subcommand("phi-table", "Phi and its derivatives on [0, 0.99]");
    table->add_option("--steps", cfg.steps, "Number of rho points")->check(CLI::Range(2, 1000000));
    table->add_option("--method", cfg.method, "Route for Phi")->check(CLI::IsMember({"quad", "series", "closed3"}));
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", cfg.suite, "Suite to run")
        ->check(CLI::IsMember({"all", "monotone", "concavity", "technical", "identities", "theoremB"}));
    verify->add_option("--grid", cfg.grid, "Grid size for the Phi sweeps")->check(CLI::Range(3, 10000000));
    auto* extremal = app.add_subcommand("extremal", "Hemisphere datum against the sharp constant");
    auto* probe = app.add_subcommand("probe", "Seeded random zonal data against the bounds");
    probe->add_option("--samples", cfg.samples, "Number of random data")->check(CLI::Range(1, 100000000));
    probe->add_option("--seed", cfg.seed, "Random seed");
    auto* bound = app.add_subcommand("bound", "One row of the bound table");
    bound->add_option("--rho", cfg.rho, "Radius in [0, 1)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    Outcome outcome;
    try {
        if (constants->parsed()) outcome = cmd_constants(cfg);
        else if (table->parsed()) outcome = cmd_phi_table(cfg);
        else if (verify->parsed()) outcome = cmd_verify(cfg);
        else if (extremal->parsed()) outcome = cmd_extremal(cfg);
        else if (probe->parsed()) outcome = cmd_probe(cfg);
        else outcome = cmd_bound(cfg);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        // std::domain_error and std::invalid_argument both land here.
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (cfg.output.empty()) {
        out << outcome.text;
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!(file << outcome.text)) {
            err << "error: cannot write " << cfg.output << '\n';
            return 2;
        }
    }
    return outcome.code;
}

}  // namespace hsp::cli
