#include "faulhaber/recurrence.hpp"

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/errors.hpp"
#include "faulhaber/powersum.hpp"

#include <stdexcept>
#include <string>

namespace faulhaber {

namespace {

// Both recurrences only ever consume B_k with k >= 2, where the B_1 sign
// convention cannot matter.
Rational recurrence_bernoulli(long k)
{
    if (k < 2)
        throw ConsistencyError("recurrence requested B_" + std::to_string(k));
    return bernoulli_number(static_cast<std::size_t>(k));
}

Rational choose(long n, long k)
{
    return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

}  // namespace

std::vector<Polynomial> he_ricci_sequence(long max_m)
{
    if (max_m < 0)
        throw std::invalid_argument("he_ricci_sequence: max must be non-negative");
    const Polynomial shift = Polynomial::shifted_identity(Rational(-1, 2));
    std::vector<Polynomial> b{Polynomial::constant(1)};
    for (long m = 1; m <= max_m; ++m) {
        Polynomial sum;
        for (long r = 0; r <= m - 2; ++r)
            sum += b[static_cast<std::size_t>(r)] * (choose(m, r) * recurrence_bernoulli(m - r));
        b.push_back(shift * b.back() - sum * Rational(1, m));
    }
    return b;
}

Polynomial he_ricci_polynomial(long m)
{
    if (m < 1)
        throw std::invalid_argument("he_ricci_polynomial: m must be at least 1");
    return he_ricci_sequence(m).back();
}

std::vector<Polynomial> partial_sum_sequence(long max_m)
{
    if (max_m < 1)
        throw std::invalid_argument("partial_sum_sequence: max must be at least 1");
    const Polynomial shift = Polynomial::shifted_identity(Rational(1, 2));
    std::vector<Polynomial> s(2);
    s[1] = Polynomial({Rational(0), Rational(1, 2), Rational(1, 2)});
    for (long m = 2; m <= max_m; ++m) {
        Polynomial sum;
        for (long r = 1; r <= m - 2; ++r)
            sum += s[static_cast<std::size_t>(r)] * (choose(m, r) * recurrence_bernoulli(m - r));
        s.push_back((shift * s.back() * Rational(m) - sum) * Rational(1, m + 1));
    }
    return s;
}

Polynomial partial_sum_polynomial(long m)
{
    if (m < 2)
        throw std::invalid_argument("partial_sum_polynomial: m must be at least 2");
    return partial_sum_sequence(m).back();
}

RecurrenceReport verify_recurrence_consistency(long max_m)
{
    if (max_m < 2)
        throw std::invalid_argument("recurrence: max must be at least 2");
    const auto bernoulli_route = he_ricci_sequence(max_m);
    const auto sum_route = partial_sum_sequence(max_m);

    RecurrenceReport report;
    report.max_index = max_m;
    for (long m = 1; m <= max_m; ++m) {
        const auto i = static_cast<std::size_t>(m);
        bool ok = bernoulli_route[i] == bernoulli_polynomial(i);
        if (m >= 2)
            ok = ok && sum_route[i] == powersum_monomial(m);
        report.passed.push_back(ok);
        if (!ok && !report.counterexample)
            report.counterexample = m;
    }
    return report;
}

}  // namespace faulhaber
