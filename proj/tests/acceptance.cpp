// Acceptance suite: one line per criterion, exit 1 if any fails.

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/faulhaber_form.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/recurrence.hpp"
#include "faulhaber/shifted.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace faulhaber;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // <= 0: no runtime limit
    std::function<std::string()> body;  // empty string = pass, else the failure
};

std::vector<Rational> ascending_powersum(long m)
{
    const Polynomial p = powersum_monomial(m);
    const auto c = p.coefficients();
    return {c.begin(), c.end()};
}

std::string c1_reference_values()
{
    // Monomial coefficients, highest power first, down to n^1.
    const std::vector<std::vector<Rational>> monomial{
        {q(1, 2), q(1, 2)},
        {q(1, 3), q(1, 2), q(1, 6)},
        {q(1, 4), q(1, 2), q(1, 4), q(0)},
        {q(1, 5), q(1, 2), q(1, 3), q(0), q(-1, 30)},
        {q(1, 6), q(1, 2), q(5, 12), q(0), q(-1, 12), q(0)},
    };
    for (long m = 1; m <= 5; ++m) {
        const auto asc = ascending_powersum(m);
        if (!asc[0].is_zero())
            return "nonzero constant term for m=" + std::to_string(m);
        std::vector<Rational> desc(asc.rbegin(), asc.rend() - 1);
        if (desc != monomial[static_cast<std::size_t>(m - 1)])
            return "monomial coefficients differ for m=" + std::to_string(m);
    }
    const std::vector<std::vector<Rational>> triangular{{q(1)}, {q(1)}, {q(6, 5), q(-1, 5)}, {q(4, 3), q(-1, 3)}};
    for (int p = 2; p <= 5; ++p) {
        if (faulhaber_form(p).coefficients() != triangular[static_cast<std::size_t>(p - 2)])
            return "Faulhaber coefficients differ for power " + std::to_string(p);
    }
    if (faulhaber_form(2).multiplier() != Multiplier::SumOfSquares ||
        faulhaber_form(5).multiplier() != Multiplier::SquareOfSum)
        return "wrong multiplier";
    return {};
}

std::string c2_shifted_values()
{
    if (shifted_form(1).coefficients() != std::vector<Rational>{q(1, 2), q(-1, 8)})
        return "power 1 shifted coefficients differ";
    if (shifted_form(2).coefficients() != std::vector<Rational>{q(1, 3), q(-1, 12)})
        return "power 2 shifted coefficients differ";
    return {};
}

std::string c3_oracle_equivalence()
{
    int checks = 0;
    for (long m = 1; m <= 30; ++m) {
        const auto p = powersum_monomial(m);
        for (long n = 1; n <= 200; ++n) {
            if (p.eval(Rational(n)) != Rational(oracle_sum(m, BigInt(n))))
                return "mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n);
            ++checks;
        }
    }
    return checks == 6000 ? std::string() : "ran " + std::to_string(checks) + " checks";
}

std::string c4_odd_bernoulli()
{
    for (long m = 1; m <= 100; ++m)
        if (!bernoulli_number(static_cast<std::size_t>(2 * m + 1)).is_zero())
            return "B_" + std::to_string(2 * m + 1) + " is nonzero";
    return {};
}

std::string c5_round_trips()
{
    for (int m = 2; m <= 100; ++m)
        if (expand_to_monomial(faulhaber_form(m)) != powersum_monomial(m))
            return "triangular round trip fails at " + std::to_string(m);
    for (int m = 1; m <= 60; ++m)
        if (shifted_to_monomial(shifted_form(m)) != powersum_monomial(m))
            return "shifted round trip fails at " + std::to_string(m);
    return {};
}

std::string c6_algorithm_agreement()
{
    InductiveDerivation d;
    try {
        d = derive_faulhaber_forms(40);
    } catch (const ConsistencyError& e) {
        return e.what();
    }
    if (d.forms.size() != 39)
        return "expected 39 forms";
    for (const auto& f : d.forms)
        if (f != faulhaber_form(f.power()))
            return "inductive form differs at power " + std::to_string(f.power());
    if (d.odd_steps.size() != 18)
        return "expected 18 odd steps";
    for (const auto& s : d.odd_steps)
        if (!s.residual.is_zero())
            return "sum k residual " + s.residual.to_string() + " at power " + std::to_string(s.power);
    return {};
}

std::string c7_closed_form()
{
    for (int p = 1; p <= 60; ++p)
        if (shifted_closed_form(p) != shifted_form(p))
            return "closed form differs at power " + std::to_string(p);
    return {};
}

std::string c8_lemma()
{
    const auto r = verify_lemma(100);
    if (r.checks.size() != 202)
        return "unexpected check count";
    if (auto f = r.first_failure())
        return f->label + " [" + f->detail + "]";
    return {};
}

std::string c9_recurrences()
{
    const auto r = verify_recurrence_consistency(40);
    if (!r.overall())
        return "counterexample at m=" + std::to_string(*r.counterexample);
    return r.passed.size() == 40 ? std::string() : "unexpected report length";
}

std::string c10_constant_term()
{
    const auto r = verify_constant_term_bernoulli(30);
    if (auto f = r.first_failure())
        return f->label + " [" + f->detail + "]";
    return r.checks.size() == 29 ? std::string() : "unexpected check count";
}

std::string c11a_faulhaber_200()
{
    const auto f = faulhaber_form(200);
    return f.coefficients().size() == 100 ? std::string() : "wrong coefficient count";
}

std::string c11b_bernoulli_200()
{
    BernoulliCache cache;
    const Rational b = cache.at(200);
    return b.denominator() == BigInt(1) || b.is_zero() ? "implausible B_200" : std::string();
}

}  // namespace

int main()
{
    // Performance runs first, against a cold Bernoulli cache.
    const std::vector<Criterion> criteria{
        {11, "performance: faulhaber_form(200)", 10.0, c11a_faulhaber_200},
        {11, "performance: bernoulli_number(200)", 10.0, c11b_bernoulli_200},
        {1, "reference values: monomial and Faulhaber coefficients for powers 1-5", 1.0, c1_reference_values},
        {2, "reference values: shifted forms for powers 1-2", 1.0, c2_shifted_values},
        {3, "oracle equivalence: 6000 exact checks, m<=30, n<=200", 30.0, c3_oracle_equivalence},
        {4, "odd Bernoulli numbers vanish, 1<=m<=100", 10.0, c4_odd_bernoulli},
        {5, "round trips: triangular 2..100, shifted 1..60", 60.0, c5_round_trips},
        {6, "inductive derivation = direct decomposition, 2..40, no residual sum k", 60.0, c6_algorithm_agreement},
        {7, "closed-form shifted coefficients = converted, powers <= 60", 30.0, c7_closed_form},
        {8, "lemma identities: polynomial and numeric n<=100", 0.0, c8_lemma},
        {9, "recurrences reproduce B_m(x) and S_m(x), m<=40", 30.0, c9_recurrences},
        {10, "last even Faulhaber coefficient / 6 = B_2m, 2<=m<=30", 0.0, c10_constant_term},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            failure = c.body();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && c.limit_seconds > 0 && secs >= c.limit_seconds)
            failure = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
        const bool pass = failure.empty();
        failures += pass ? 0 : 1;
        std::printf("[%s] criterion %2d: %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    pass ? "" : " -- ", failure.c_str());
    }
    std::printf("%s: %d of %zu criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
