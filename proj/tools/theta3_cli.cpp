// theta3: characteristics, quartic reconstruction from period matrices, and the
// identity verifiers.
//
//   theta3 chars
//   theta3 reconstruct FILE [--method jacobian|theta|both]
//   theta3 bitangents FILE
//   theta3 verify frobenius|igualtats|algebraic|all
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.

#include "theta3/algebraic_suite.hpp"
#include "theta3/identities.hpp"
#include "theta3/named.hpp"
#include "theta3/torelli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

using namespace theta3;
using json = nlohmann::ordered_json;

namespace
{

constexpr double bitangency_threshold = 1e-6;
constexpr double agreement_threshold = 1e-8;

struct CliConfig
{
    double tol = 1e-12;
    std::uint64_t seed = 0;
    int trials = 20;
    int instances = 100;
    std::string format = "text";
    std::string fixture_dir;
};

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string sci(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string cnum(Complex z) { return num(z.real()) + " " + num(z.imag()); }

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

std::string resolve_fixture(const std::string &path, const CliConfig &cfg)
{
    namespace fs = std::filesystem;
    if (fs::exists(path) || fs::path(path).is_absolute()) {
        return path;
    }
    const fs::path candidate = fs::path(cfg.fixture_dir) / path;
    return fs::exists(candidate) ? candidate.string() : path;
}

NormalizedPeriods load(const std::string &path, const CliConfig &cfg)
{
    PeriodMatrix m;
    const std::string resolved = resolve_fixture(path, cfg);
    try {
        m = read_period_file(resolved);
    } catch (const std::exception &e) {
        throw InputError(resolved + ": " + e.what());
    }
    try {
        return normalize(m);
    } catch (const NormalizationError &e) {
        throw InputError(resolved + ": " + e.what());
    }
}

// Scales q so that its largest coefficient is 1.
QuarticForm<Complex> scaled(const QuarticForm<Complex> &q)
{
    Complex big = 0;
    for (const auto &c : q.coefficients()) {
        if (std::abs(c) > std::abs(big)) {
            big = c;
        }
    }
    return big == Complex(0) ? q : Complex(1) / big * q;
}

LinearForm<Complex> scaled(const LinearForm<Complex> &l)
{
    Complex big = 0;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(l[i]) > std::abs(big)) {
            big = l[i];
        }
    }
    return Complex(1) / big * l;
}

int cmd_chars(const CliConfig &cfg)
{
    if (cfg.format == "json") {
        json out;
        out["characteristics"] = json::array();
        for (Characteristic c : enumerate()) {
            out["characteristics"].push_back({{"code", c.str()}, {"parity", std::string(to_string(parity(c)))}});
        }
        out["named"] = json::array();
        for (const auto &n : named_characteristics()) {
            out["named"].push_back({{"label", std::string(n.label)},
                                    {"code", n.value.str()},
                                    {"parity", std::string(to_string(parity(n.value)))}});
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    for (Characteristic c : enumerate()) {
        std::cout << c.str() << ' ' << to_string(parity(c)) << '\n';
    }
    std::cout << "# named\n";
    for (const auto &n : named_characteristics()) {
        std::cout << "# " << n.label << ' ' << n.value.str() << ' ' << to_string(parity(n.value)) << '\n';
    }
    return 0;
}

json diagnostics_json(const ReconstructionDiagnostics &d)
{
    json j = {{"method", d.method},
              {"orientation", d.orientation},
              {"omega1_condition", d.omega1_condition},
              {"symmetry_residual", d.symmetry_residual},
              {"lambda_min", d.lambda_min},
              {"conditioning_margin", d.conditioning_margin},
              {"max_bitangency_residual", d.max_bitangency_residual},
              {"worst_bitangent", d.worst_bitangent},
              {"bitangency_check", d.max_bitangency_residual < bitangency_threshold ? "pass" : "FAIL"}};
    if (d.method == "theta") {
        j["theta_null_evaluations"] = d.theta_null_evaluations;
    }
    return j;
}

void print_reconstruction(const ReconstructionResult &r)
{
    const auto &d = r.diagnostics;
    std::cout << "# method " << d.method << '\n';
    std::cout << "# orientation: " << d.orientation << '\n';
    std::cout << "# omega1 condition " << sci(d.omega1_condition) << ", symmetry residual " << sci(d.symmetry_residual)
              << ", lambda_min " << sci(d.lambda_min) << '\n';
    std::cout << "# conditioning margin " << sci(d.conditioning_margin) << '\n';
    if (d.method == "theta") {
        std::cout << "# theta_null evaluations " << d.theta_null_evaluations << '\n';
    }
    std::cout << "# bitangency self-check " << (d.max_bitangency_residual < bitangency_threshold ? "pass" : "FAIL")
              << ": max residual " << sci(d.max_bitangency_residual) << " (" << d.worst_bitangent << ")\n";
    std::cout << "QUARTIC\n";
    const auto q = scaled(r.quartic);
    for (std::size_t k = 0; k < 15; ++k) {
        std::cout << cnum(q[k]) << '\n';
    }
}

int cmd_reconstruct(const std::string &file, const std::string &method, const CliConfig &cfg)
{
    const NormalizedPeriods np = load(file, cfg);
    const ThetaEvalConfig tc{cfg.tol};
    std::vector<ReconstructionResult> results;
    if (method == "jacobian" || method == "both") {
        results.push_back(reconstruct_jacobian_nullwerte(np, tc));
    }
    if (method == "theta" || method == "both") {
        results.push_back(reconstruct_thetanullwerte(np, tc));
    }
    bool ok = true;
    for (const auto &r : results) {
        ok = ok && r.diagnostics.max_bitangency_residual < bitangency_threshold;
    }
    std::optional<ProportionalityFit<Complex>> fit;
    if (results.size() == 2) {
        fit = proportionality_fit(results[0].quartic, results[1].quartic);
        ok = ok && fit && fit->residual < agreement_threshold;
    }

    if (cfg.format == "json") {
        json out;
        out["file"] = file;
        out["results"] = json::array();
        for (const auto &r : results) {
            json q = json::array();
            for (const auto &c : scaled(r.quartic).coefficients()) {
                q.push_back(cjson(c));
            }
            out["results"].push_back({{"quartic", q}, {"diagnostics", diagnostics_json(r.diagnostics)}});
        }
        if (fit) {
            out["proportionality"] = {{"factor", cjson(fit->factor)}, {"residual", fit->residual}};
        }
        out["pass"] = ok;
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto &r : results) {
            print_reconstruction(r);
        }
        if (fit) {
            std::cout << "# proportionality factor " << cnum(fit->factor) << ", residual " << sci(fit->residual)
                      << '\n';
        }
    }
    return ok ? 0 : 1;
}

int cmd_bitangents(const std::string &file, const CliConfig &cfg)
{
    const NormalizedPeriods np = load(file, cfg);
    const ThetaEvalConfig tc{cfg.tol};
    const auto r = reconstruct_jacobian_nullwerte(np, tc);
    const auto lines = all_bitangents(np, tc);
    bool ok = true;
    json arr = json::array();
    for (const auto &l : lines) {
        const double res = max_bitangency_residual(r.quartic, {l});
        ok = ok && res < bitangency_threshold;
        const auto s = scaled(l.line);
        if (cfg.format == "json") {
            arr.push_back({{"label", l.label},
                           {"code", l.c.str()},
                           {"line", json::array({cjson(s[0]), cjson(s[1]), cjson(s[2])})},
                           {"residual", res}});
        } else {
            std::cout << "# " << l.label << ' ' << l.c.str() << " residual " << sci(res) << '\n';
            std::cout << "LINE " << cnum(s[0]) << ' ' << cnum(s[1]) << ' ' << cnum(s[2]) << '\n';
        }
    }
    if (cfg.format == "json") {
        std::cout << json{{"file", file}, {"lines", arr}, {"pass", ok}}.dump(2) << '\n';
    }
    return ok ? 0 : 1;
}

json report_json(int trial, const IdentityReport &r)
{
    return {{"trial", trial},   {"identity", r.identity}, {"lhs", cjson(r.lhs)}, {"rhs", cjson(r.rhs)},
            {"rel_err", r.rel_err}, {"pass", r.pass},         {"mode", r.mode}};
}

int cmd_verify(const std::string &suite, const CliConfig &cfg)
{
    const bool numeric = suite != "algebraic";
    const bool frob = suite == "frobenius" || suite == "all";
    const bool igual = suite == "igualtats" || suite == "all";
    bool ok = true;
    json out;
    out["suite"] = suite;
    out["seed"] = cfg.seed;

    if (numeric) {
        const SweepSummary s = sweep(cfg.trials, cfg.seed, ThetaEvalConfig{cfg.tol});
        json reports = json::array();
        int failures = 0;
        int degenerate = 0;
        std::map<std::string, double> max_err;
        for (const auto &[trial, r] : s.reports) {
            const bool is_frob = r.mode == "signed";
            if ((is_frob && !frob) || (!is_frob && !igual)) {
                continue;
            }
            const std::string key = is_frob ? r.identity : r.identity + "/" + r.mode;
            max_err[key] = std::max(max_err[key], r.rel_err);
            if (r.mode == "degenerate-verbatim") {
                ++degenerate;
            } else if (!r.pass) {
                ++failures;
            }
            if (cfg.format == "json") {
                reports.push_back(report_json(trial, r));
            } else {
                std::cout << "trial " << trial << ' ' << r.identity << ' ' << r.mode << " rel_err " << sci(r.rel_err)
                          << ' ' << (r.mode == "degenerate-verbatim" ? "DEGENERATE" : r.pass ? "PASS" : "FAIL")
                          << '\n';
            }
        }
        const bool signs_ok = !frob || s.unstable_signs.empty();
        ok = ok && failures == 0 && signs_ok;
        if (cfg.format == "json") {
            out["trials"] = cfg.trials;
            out["reports"] = reports;
            out["max_rel_err"] = max_err;
            out["unstable_signs"] = frob ? s.unstable_signs : std::vector<std::string>{};
            out["failures"] = failures;
            out["degenerate"] = degenerate;
        } else {
            for (const auto &[k, v] : max_err) {
                std::cout << "# max rel_err " << k << ' ' << sci(v) << '\n';
            }
            std::cout << "# trials " << cfg.trials << ", failures " << failures << ", degenerate " << degenerate
                      << ", sign changes " << (signs_ok ? "none" : "FOUND") << '\n';
        }
    }
    if (suite == "algebraic" || suite == "all") {
        const AlgebraicSuiteReport a = run_algebraic_suite(cfg.instances, cfg.seed);
        json checks = json::array();
        for (const auto &c : a.checks) {
            if (cfg.format == "json") {
                checks.push_back(
                    {{"check", c.name}, {"passed", c.passed}, {"total", c.total}, {"pass", c.ok()}, {"detail", c.detail}});
            } else {
                std::cout << "algebraic " << c.name << ' ' << c.passed << '/' << c.total << ' '
                          << (c.ok() ? "PASS" : "FAIL") << (c.detail.empty() ? "" : " " + c.detail) << '\n';
            }
        }
        ok = ok && a.all_pass();
        if (cfg.format == "json") {
            out["algebraic"] = {
                {"instances", a.instances}, {"rejected_singular", a.rejected_singular}, {"checks", checks}};
        } else {
            std::cout << "# algebraic instances " << a.instances << ", draws rejected as singular "
                      << a.rejected_singular << '\n';
        }
    }
    if (cfg.format == "json") {
        out["pass"] = ok;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Genus-3 theta characteristics, Torelli reconstruction and identity checks"};
    app.require_subcommand(1);
    app.fallthrough();
    CliConfig cfg;
    if (const char *env = std::getenv("THETA3_FIXTURES")) {
        cfg.fixture_dir = env;
    } else {
        cfg.fixture_dir = THETA3_DEFAULT_FIXTURES;
    }
    app.add_option("--tol", cfg.tol, "theta truncation tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed of the mt19937_64 generator");
    app.add_option("--trials", cfg.trials, "random Siegel points per numeric suite")->check(CLI::Range(1, 1000000));
    app.add_option("--instances", cfg.instances, "random models in the algebraic suite")->check(CLI::Range(1, 1000000));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--fixture-dir", cfg.fixture_dir, "directory searched for relative period files");

    auto *chars = app.add_subcommand("chars", "list the 64 characteristics and the named ones");
    std::string file;
    std::string method = "jacobian";
    auto *recon = app.add_subcommand("reconstruct", "quartic from a period matrix");
    recon->add_option("file", file, "period-matrix file")->required();
    recon->add_option("--method", method)->check(CLI::IsMember({"jacobian", "theta", "both"}));
    auto *bit = app.add_subcommand("bitangents", "the 28 bitangent lines of a period matrix");
    bit->add_option("file", file, "period-matrix file")->required();
    std::string suite;
    auto *verify = app.add_subcommand("verify", "run identity suites");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember({"frobenius", "igualtats", "algebraic", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chars->parsed()) {
            return cmd_chars(cfg);
        }
        if (recon->parsed()) {
            return cmd_reconstruct(file, method, cfg);
        }
        if (bit->parsed()) {
            return cmd_bitangents(file, cfg);
        }
        if (verify->parsed()) {
            return cmd_verify(suite, cfg);
        }
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
