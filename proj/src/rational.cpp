#include "faulhaber/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace faulhaber {

namespace {

bool is_integer_text(std::string_view text)
{
    if (!text.empty() && text.front() == '-')
        text.remove_prefix(1);
    if (text.empty())
        return false;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator)
{
    if (denominator == 0)
        throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(BigInt(numerator), BigInt(denominator))
{
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_text(num_text))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt num(std::string(num_text), 10);
    if (slash == std::string_view::npos)
        return Rational(num);

    const auto den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text) || den_text.front() == '-')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational power_of_two(long exponent)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

BigInt binomial(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt result = 1;
    // Each partial product C(n, i) is an integer, so the division is exact.
    for (unsigned long i = 1; i <= k; ++i) {
        result *= n - k + i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    }
    return result;
}

}  // namespace faulhaber
