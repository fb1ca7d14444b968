#include "faulhaber/shifted.hpp"

#include "faulhaber/bernoulli.hpp"

#include <stdexcept>
#include <string>

namespace faulhaber {

namespace {

std::size_t coefficient_count(int power)
{
    return power % 2 == 0 ? static_cast<std::size_t>(power / 2 + 1) : static_cast<std::size_t>((power - 1) / 2 + 2);
}

}  // namespace

ShiftedForm::ShiftedForm(int power, std::vector<Rational> coefficients)
    : power_(power), coefficients_(std::move(coefficients))
{
    if (power < 1)
        throw std::invalid_argument("ShiftedForm: power must be at least 1");
    if (coefficients_.size() != coefficient_count(power))
        throw std::invalid_argument("ShiftedForm: power " + std::to_string(power) + " needs " +
                                    std::to_string(coefficient_count(power)) + " coefficients, got " +
                                    std::to_string(coefficients_.size()));
}

std::size_t ShiftedForm::exponent_of(std::size_t i) const
{
    // Even 2m: d_i on N^{2m+1-2i}. Odd 2m+1: e_i on N^{2m+2-2i}.
    return static_cast<std::size_t>(power_ + 1) - 2 * i;
}

ShiftedForm ShiftedForm::from_polynomial(int power, const Polynomial& in_n)
{
    if (power < 1)
        throw std::invalid_argument("ShiftedForm: power must be at least 1");
    const auto count = coefficient_count(power);
    const auto top = static_cast<std::size_t>(power + 1);
    if (in_n.degree() > static_cast<int>(top))
        throw ConsistencyError("polynomial in N of degree " + std::to_string(in_n.degree()) + " too large for power " +
                               std::to_string(power));

    // Even powers keep odd exponents of N and vice versa; top has the right parity.
    for (std::size_t k = 0; k < in_n.size(); ++k) {
        if (k % 2 != top % 2 && !in_n.coefficient(k).is_zero())
            throw ConsistencyError("power " + std::to_string(power) + ": nonzero coefficient of N^" +
                                   std::to_string(k) + " breaks parity");
    }
    std::vector<Rational> coeffs(count);
    for (std::size_t i = 0; i < count; ++i)
        coeffs[i] = in_n.coefficient(top - 2 * i);
    return ShiftedForm(power, std::move(coeffs));
}

Polynomial ShiftedForm::in_shifted() const
{
    std::vector<Rational> ascending(static_cast<std::size_t>(power_ + 2));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        ascending[exponent_of(i)] = coefficients_[i];
    return Polynomial(std::move(ascending));
}

Polynomial triangular_in_shifted()
{
    return Polynomial({Rational(-1, 8), Rational(0), Rational(1, 2)});
}

ShiftedForm shifted_form(int power)
{
    if (power < 1)
        throw std::invalid_argument("shifted_form: power must be at least 1");
    const Polynomial u = triangular_in_shifted();
    if (power == 1)
        return ShiftedForm::from_polynomial(1, u);

    const FaulhaberForm form = faulhaber_form(power);
    // sum k^2 = N (N^2/3 - 1/12);  (sum k)^2 = (N^2/2 - 1/8)^2
    const Polynomial multiplier = form.multiplier() == Multiplier::SumOfSquares
                                      ? Polynomial({Rational(0), Rational(-1, 12), Rational(0), Rational(1, 3)})
                                      : u * u;
    return ShiftedForm::from_polynomial(power, compose(form.in_triangular(), u) * multiplier);
}

ShiftedForm shifted_closed_form(int power)
{
    if (power < 1)
        throw std::invalid_argument("shifted_closed_form: power must be at least 1");
    const auto m = static_cast<std::size_t>(power / 2);
    std::vector<Rational> coeffs;

    if (power % 2 == 0) {
        for (std::size_t i = 0; i <= m; ++i) {
            coeffs.push_back(Rational(binomial(2 * m, 2 * i)) * bernoulli_at_half(2 * i) /
                             Rational(2 * (m - i) + 1));
        }
    } else {
        Rational constant;
        for (std::size_t i = 0; i <= m; ++i) {
            Rational e = Rational(binomial(2 * m + 1, 2 * i)) * bernoulli_at_half(2 * i) / Rational(2 * (m - i) + 2);
            constant -= e * power_of_two(-2 * static_cast<long>(m - i + 1));
            coeffs.push_back(std::move(e));
        }
        coeffs.push_back(constant);
    }
    return ShiftedForm(power, std::move(coeffs));
}

Polynomial shifted_to_monomial(const ShiftedForm& form)
{
    return compose(form.in_shifted(), Polynomial::shifted_identity(Rational(1, 2)));
}

}  // namespace faulhaber
