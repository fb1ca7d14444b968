#include "faulhaber/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace faulhaber {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coefficients_(coefficients)
{
    trim();
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial({c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::shifted_identity(const Rational& shift)
{
    return Polynomial({shift, Rational(1)});
}

int Polynomial::degree() const
{
    return is_zero() ? kMinusInfinity : static_cast<int>(coefficients_.size()) - 1;
}

Rational Polynomial::coefficient(std::size_t k) const
{
    return k < coefficients_.size() ? coefficients_[k] : Rational();
}

Rational Polynomial::eval(const Rational& x) const
{
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coefficients_.size() > coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size());
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
        coefficients_[i] += rhs.coefficients_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coefficients_.size() > coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size());
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
        coefficients_[i] -= rhs.coefficients_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (scalar.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    for (auto& c : coefficients_)
        c *= scalar;
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<Rational> out(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const auto& a = lhs.coefficients_[i];
        if (a.is_zero())
            continue;
        for (std::size_t j = 0; j < rhs.size(); ++j)
            out[i + j] += a * rhs.coefficients_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& c : r.coefficients_)
        c = -c;
    return r;
}

void Polynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back().is_zero())
        coefficients_.pop_back();
}

Polynomial compose(const Polynomial& p, const Polynomial& q)
{
    Polynomial acc;
    const auto coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * q + Polynomial::constant(*it);
    return acc;
}

Polynomial pow(const Polynomial& p, unsigned k)
{
    Polynomial result = Polynomial::constant(1);
    Polynomial base = p;
    while (k != 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k != 0)
            base = base * base;
    }
    return result;
}

DivisionResult divmod(const Polynomial& dividend, const Polynomial& divisor)
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (dividend.degree() < divisor.degree())
        return {Polynomial(), dividend};

    const auto dn = divisor.coefficients();
    const std::size_t shift_count = dividend.size() - divisor.size() + 1;
    std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    std::vector<Rational> quot(shift_count);
    const Rational& lead = divisor.leading();

    for (std::size_t s = shift_count; s-- > 0;) {
        const Rational factor = rem[s + dn.size() - 1] / lead;
        quot[s] = factor;
        if (factor.is_zero())
            continue;
        for (std::size_t j = 0; j < dn.size(); ++j)
            rem[s + j] -= factor * dn[j];
    }
    rem.resize(dn.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial from_descending(std::span<const Rational> coefficients)
{
    std::vector<Rational> ascending(coefficients.rbegin(), coefficients.rend());
    return Polynomial(std::move(ascending));
}

}  // namespace faulhaber
