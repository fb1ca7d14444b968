#pragma once

#include "faulhaber/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace faulhaber {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// low-to-high (index = degree) with no trailing zeros, so the zero
/// polynomial is the empty sequence and equality is sequence equality.
/// The variable is formal; which basis it stands for is up to the caller.
class Polynomial {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    /// c * x^degree
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// x + shift
    static Polynomial shifted_identity(const Rational& shift);

    bool is_zero() const { return coefficients_.empty(); }
    int degree() const;
    std::span<const Rational> coefficients() const& { return coefficients_; }
    std::span<const Rational> coefficients() const&& = delete;
    std::size_t size() const { return coefficients_.size(); }
    /// Coefficient of x^k; zero beyond the degree.
    Rational coefficient(std::size_t k) const;
    const Rational& leading() const { return coefficients_.back(); }

    Rational operator()(const Rational& x) const { return eval(x); }
    Rational eval(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coefficients_;
};

/// p(q(x)), by Horner's scheme over polynomials.
Polynomial compose(const Polynomial& p, const Polynomial& q);

/// p^k; p^0 = 1.
Polynomial pow(const Polynomial& p, unsigned k);

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division over Q. Throws std::domain_error when divisor is zero.
DivisionResult divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Polynomial with the given coefficients listed from the highest power down.
Polynomial from_descending(std::span<const Rational> coefficients);

}  // namespace faulhaber
