#include "faulhaber/powersum.hpp"

#include "faulhaber/bernoulli.hpp"

#include <stdexcept>
#include <string>

namespace faulhaber {

namespace {

void require_positive_exponent(long m, const char* what)
{
    if (m < 1)
        throw std::invalid_argument(std::string(what) + ": exponent must be at least 1, got " + std::to_string(m));
}

BigInt literal_power(const BigInt& base, long exponent)
{
    BigInt r = 1;
    for (long i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

}  // namespace

Polynomial powersum_monomial(long m)
{
    require_positive_exponent(m, "powersum_monomial");
    const auto top = static_cast<std::size_t>(m + 1);
    std::vector<Rational> coeffs(top + 1);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(m); ++j) {
        Rational term = Rational(binomial(top, j)) * bernoulli_number(j);
        if (j % 2 == 1)
            term = -term;
        coeffs[top - j] = term / Rational(static_cast<long>(top));
    }
    return Polynomial(std::move(coeffs));
}

Polynomial powersum_via_bernoulli_poly(long m)
{
    require_positive_exponent(m, "powersum_via_bernoulli_poly");
    const auto next = static_cast<std::size_t>(m + 1);
    const Polynomial shifted = compose(bernoulli_polynomial(next), Polynomial::shifted_identity(1));
    return (shifted - Polynomial::constant(bernoulli_number(next))) * Rational(1, m + 1);
}

BigInt oracle_sum(long m, const BigInt& n)
{
    if (m < 0 || n < 1)
        throw std::invalid_argument("oracle_sum: requires m >= 0 and n >= 1");
    BigInt total = 0;
    for (BigInt k = 1; k <= n; ++k)
        total += literal_power(k, m);
    return total;
}

BigInt powersum_value(long m, const BigInt& n)
{
    if (m < 0 || n < 1)
        throw std::invalid_argument("powersum_value: requires m >= 0 and n >= 1");
    if (m == 0)
        return n;
    const Rational value = powersum_monomial(m).eval(Rational(n));
    if (!value.is_integer())
        throw std::logic_error("power-sum polynomial produced a non-integer at n = " + n.get_str());
    return value.numerator();
}

SumIdentityReport check_partial_sum_identity(long m, long n)
{
    if (m < 0 || n < 1)
        throw std::invalid_argument("check_partial_sum_identity: requires m >= 0 and n >= 1");
    SumIdentityReport r;
    r.exponent = m;
    r.upper_limit = n;

    BigInt double_sum = 0;
    BigInt running = 0;
    for (long k = 1; k <= n; ++k) {
        running += literal_power(BigInt(k), m);
        double_sum += running;
    }
    r.left = oracle_sum(m + 1, BigInt(n)) + double_sum;
    r.right = BigInt(n + 1) * oracle_sum(m, BigInt(n));
    r.pass = r.left == r.right;
    return r;
}

}  // namespace faulhaber
