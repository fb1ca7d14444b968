#include "faulhaber/suites.hpp"

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/faulhaber_form.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/recurrence.hpp"
#include "faulhaber/shifted.hpp"

#include <stdexcept>
#include <string>

namespace faulhaber {

namespace {

VerificationReport roundtrip(long max)
{
    VerificationReport report{"roundtrip", {}};
    for (long m = 2; m <= max; ++m) {
        const bool ok = expand_to_monomial(faulhaber_form(static_cast<int>(m))) == powersum_monomial(m);
        report.add("triangular power " + std::to_string(m), ok);
    }
    for (long m = 1; m <= max; ++m) {
        const bool ok = shifted_to_monomial(shifted_form(static_cast<int>(m))) == powersum_monomial(m);
        report.add("shifted power " + std::to_string(m), ok);
    }
    return report;
}

VerificationReport induction(long max)
{
    VerificationReport report{"induction", {}};
    const auto derivation = derive_faulhaber_forms(static_cast<int>(max));
    for (const auto& form : derivation.forms) {
        report.add("inductive = direct for power " + std::to_string(form.power()),
                   form == faulhaber_form(form.power()));
    }
    for (const auto& step : derivation.odd_steps) {
        report.add("sum k term cancels at power " + std::to_string(step.power), step.residual.is_zero(),
                   "residual " + step.residual.to_string());
    }
    return report;
}

VerificationReport closed_form(long max)
{
    VerificationReport report{"closed-form", {}};
    for (long m = 1; m <= max; ++m) {
        const auto p = static_cast<int>(m);
        report.add("closed = converted for power " + std::to_string(m), shifted_closed_form(p) == shifted_form(p));
    }
    return report;
}

VerificationReport recurrence(long max)
{
    const auto r = verify_recurrence_consistency(max);
    VerificationReport report{"recurrence", {}};
    for (std::size_t i = 0; i < r.passed.size(); ++i)
        report.add("recurrences reproduce index " + std::to_string(i + 1), r.passed[i]);
    return report;
}

VerificationReport partial_sums(long max)
{
    VerificationReport report{"partial-sums", {}};
    for (long m = 0; m <= max; ++m) {
        for (long n = 1; n <= 50; ++n) {
            const auto r = check_partial_sum_identity(m, n);
            report.add("m=" + std::to_string(m) + " n=" + std::to_string(n), r.pass,
                       r.left.get_str() + " vs " + r.right.get_str());
        }
    }
    return report;
}

VerificationReport oracle(long max)
{
    VerificationReport report{"oracle", {}};
    for (long m = 1; m <= max; ++m) {
        const Polynomial p = powersum_monomial(m);
        for (long n = 1; n <= 200; ++n) {
            const Rational value = p.eval(Rational(n));
            const BigInt truth = oracle_sum(m, BigInt(n));
            report.add("m=" + std::to_string(m) + " n=" + std::to_string(n), value == Rational(truth),
                       value.to_string() + " vs " + truth.get_str());
        }
    }
    return report;
}

}  // namespace

const std::vector<SuiteInfo>& verification_suites()
{
    static const std::vector<SuiteInfo> suites{
        {"odd-bernoulli", 100, 1, "B_{2m+1} = 0 for m = 1..max"},
        {"oracle", 30, 1, "polynomial value = brute-force sum, m <= max, n <= 200"},
        {"partial-sums", 10, 0, "partial-sums identity, m <= max, n <= 50"},
        {"roundtrip", 60, 1, "triangular and shifted forms expand to the monomial polynomial"},
        {"induction", 40, 2, "partial-sums induction reproduces the direct Faulhaber forms"},
        {"closed-form", 60, 1, "Bernoulli closed-form shifted coefficients = converted ones"},
        {"lemma", 100, 1, "(n+1/2) identities, symbolically and for n <= max"},
        {"recurrence", 40, 2, "Bernoulli-polynomial and power-sum recurrences, m <= max"},
        {"constant-term", 30, 2, "last even Faulhaber coefficient / 6 = B_{2m}"},
    };
    return suites;
}

std::optional<SuiteInfo> find_suite(std::string_view name)
{
    for (const auto& s : verification_suites())
        if (s.name == name)
            return s;
    return std::nullopt;
}

VerificationReport run_suite(std::string_view name, std::optional<long> max)
{
    const auto info = find_suite(name);
    if (!info)
        throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    const long bound = max.value_or(info->default_max);
    if (bound < info->minimum_max)
        throw std::invalid_argument(std::string(name) + ": max must be at least " +
                                    std::to_string(info->minimum_max));

    if (name == "odd-bernoulli")
        return verify_odd_zero(bound);
    if (name == "oracle")
        return oracle(bound);
    if (name == "partial-sums")
        return partial_sums(bound);
    if (name == "roundtrip")
        return roundtrip(bound);
    if (name == "induction")
        return induction(bound);
    if (name == "closed-form")
        return closed_form(bound);
    if (name == "lemma")
        return verify_lemma(bound);
    if (name == "recurrence")
        return recurrence(bound);
    return verify_constant_term_bernoulli(bound);
}

}  // namespace faulhaber
