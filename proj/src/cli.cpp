#include "faulhaber/cli.hpp"

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/errors.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/render.hpp"
#include "faulhaber/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>

namespace faulhaber {

namespace {

const BigInt kCheckLimit = 1000000;

long parse_count(const std::string& text, const char* what)
{
    long value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
    return value;
}

BigInt parse_big(const std::string& text, const char* what)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
    return BigInt(text, 10);
}

struct PowersumArgs {
    std::string exponent;
    std::string basis = "monomial";
    std::string method = "direct";
    std::string format = "plain";
};

struct BernoulliArgs {
    std::string index;
    bool poly = false;
    bool at_half = false;
};

struct EvalArgs {
    std::string exponent;
    std::string upper;
    bool check = false;
};

struct VerifyArgs {
    std::string suite;
    std::optional<long> max;
};

int cmd_powersum(const PowersumArgs& a, std::ostream& out)
{
    RenderRequest req;
    req.exponent = parse_count(a.exponent, "exponent");
    req.basis = a.basis == "triangular" ? Basis::Triangular : a.basis == "shifted" ? Basis::Shifted : Basis::Monomial;
    req.method = a.method == "inductive" ? Method::Inductive : a.method == "closed" ? Method::Closed : Method::Direct;
    req.format = a.format == "latex" ? Format::Latex : a.format == "json" ? Format::Json : Format::Plain;
    req.validate();
    out << render_powersum(req) << '\n';
    return kExitOk;
}

int cmd_bernoulli(const BernoulliArgs& a, std::ostream& out)
{
    const long m = parse_count(a.index, "index");
    if (m < 0)
        throw UsageError("index must be non-negative");
    const auto index = static_cast<std::size_t>(m);
    if (a.poly)
        out << render_polynomial(bernoulli_polynomial(index), "x", Format::Plain) << '\n';
    else if (a.at_half)
        out << bernoulli_at_half(index) << '\n';
    else
        out << bernoulli_number(index) << '\n';
    return kExitOk;
}

int cmd_eval(const EvalArgs& a, std::ostream& out)
{
    const long m = parse_count(a.exponent, "exponent");
    if (m < 0)
        throw UsageError("exponent must be non-negative");
    const BigInt n = parse_big(a.upper, "n");
    if (n < 1)
        throw UsageError("n must be at least 1");
    if (a.check && n > kCheckLimit)
        throw UsageError("--check runs the brute-force sum and is limited to n <= 1000000");

    const BigInt value = powersum_value(m, n);
    out << value.get_str();
    if (!a.check) {
        out << '\n';
        return kExitOk;
    }
    const BigInt truth = oracle_sum(m, n);
    const bool ok = truth == value;
    out << " (oracle: " << truth.get_str() << ", " << (ok ? "OK" : "MISMATCH") << ")\n";
    return ok ? kExitOk : kExitFailure;
}

bool report_suite(std::string_view name, std::optional<long> max, std::ostream& out)
{
    try {
        const auto report = run_suite(name, max);
        const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                          [](const CheckResult& c) { return !c.pass; });
        if (failed == 0) {
            out << name << ": PASS (" << report.checks.size() << " checks)\n";
            return true;
        }
        const auto first = *report.first_failure();
        out << name << ": FAIL (" << failed << " of " << report.checks.size()
            << " checks failed); first counterexample: " << first.label;
        if (!first.detail.empty())
            out << " [" << first.detail << "]";
        out << '\n';
        return false;
    } catch (const ConsistencyError& e) {
        out << name << ": FAIL (consistency: " << e.what() << ")\n";
        return false;
    }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    std::vector<std::string_view> names;
    if (a.suite == "all") {
        for (const auto& s : verification_suites())
            names.push_back(s.name);
    } else if (find_suite(a.suite)) {
        names.push_back(a.suite);
    } else {
        std::string known = "all";
        for (const auto& s : verification_suites())
            known += ", " + std::string(s.name);
        throw UsageError("unknown suite '" + a.suite + "' (expected one of: " + known + ")");
    }
    for (auto name : names) {
        const auto info = *find_suite(name);
        if (a.max && *a.max < info.minimum_max)
            throw UsageError(std::string(name) + ": --max must be at least " + std::to_string(info.minimum_max));
    }

    bool all_ok = true;
    for (auto name : names)
        all_ok = report_suite(name, a.max, out) && all_ok;
    if (names.size() > 1)
        out << "all: " << (all_ok ? "PASS" : "FAIL") << '\n';
    return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact sums of powers, Bernoulli numbers and Faulhaber forms"};
    app.require_subcommand(1);

    PowersumArgs ps;
    auto* powersum = app.add_subcommand("powersum", "Render sum k^m in the monomial, triangular or shifted basis");
    powersum->add_option("m", ps.exponent, "Exponent (>= 1)")->required();
    powersum->add_option("--basis", ps.basis, "monomial | triangular | shifted")
        ->check(CLI::IsMember({"monomial", "triangular", "shifted"}));
    powersum->add_option("--method", ps.method, "direct | inductive (triangular) | closed (shifted)")
        ->check(CLI::IsMember({"direct", "inductive", "closed"}));
    powersum->add_option("--format", ps.format, "plain | latex | json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));

    BernoulliArgs bn;
    auto* bernoulli = app.add_subcommand("bernoulli", "Print B_m, B_m(x) or B_m(1/2)");
    bernoulli->add_option("m", bn.index, "Index (>= 0)")->required();
    auto* poly_flag = bernoulli->add_flag("--poly", bn.poly, "Print the Bernoulli polynomial B_m(x)");
    bernoulli->add_flag("--at-half", bn.at_half, "Print B_m(1/2)")->excludes(poly_flag);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Exact value of 1^m + ... + n^m");
    eval->add_option("m", ev.exponent, "Exponent (>= 0)")->required();
    eval->add_option("n", ev.upper, "Upper limit (>= 1, any size)")->required();
    eval->add_flag("--check", ev.check, "Also run the brute-force sum (n <= 10^6)");

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", vf.suite, "Suite name or 'all'")->required();
    verify->add_option("--max", vf.max, "Upper bound for the suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (powersum->parsed())
            return cmd_powersum(ps, out);
        if (bernoulli->parsed())
            return cmd_bernoulli(bn, out);
        if (eval->parsed())
            return cmd_eval(ev, out);
        return cmd_verify(vf, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal failure: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace faulhaber
