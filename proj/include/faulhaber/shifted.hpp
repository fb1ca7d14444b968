#pragma once

#include "faulhaber/faulhaber_form.hpp"
#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

#include <vector>

namespace faulhaber {

/// sum_{k=1}^{n} k^power as a polynomial in N = n + 1/2.
///
/// Even power 2m: an odd polynomial in N,
///   d_0 N^{2m+1} + d_1 N^{2m-1} + ... + d_m N        (m+1 coefficients)
/// Odd power 2m+1: an even polynomial in N,
///   e_0 N^{2m+2} + e_1 N^{2m} + ... + e_m N^2 + e_{m+1}   (m+2 coefficients)
///
/// Only the coefficients of the parity that can occur are stored, so an even
/// power never carries a constant term.
class ShiftedForm {
public:
    /// Throws std::invalid_argument when power < 1 or the coefficient count is
    /// not power/2 + 1 (even) or (power-1)/2 + 2 (odd).
    ShiftedForm(int power, std::vector<Rational> coefficients);

    /// Extracts the coefficients from a polynomial in N. Throws
    /// ConsistencyError if a coefficient of the wrong parity is nonzero.
    static ShiftedForm from_polynomial(int power, const Polynomial& in_n);

    int power() const { return power_; }
    Parity parity() const { return power_ % 2 == 0 ? Parity::Even : Parity::Odd; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    /// The full polynomial in N, low-to-high.
    Polynomial in_shifted() const;

    friend bool operator==(const ShiftedForm&, const ShiftedForm&) = default;

private:
    /// Exponent of N multiplying coefficients()[i].
    std::size_t exponent_of(std::size_t i) const;

    int power_;
    std::vector<Rational> coefficients_;
};

/// u written in N: (1/2) N^2 - 1/8
Polynomial triangular_in_shifted();

/// Converts the Faulhaber form by substituting u = N^2/2 - 1/8 and
/// multiplying by the multiplier written in N. Power 1 is N^2/2 - 1/8.
ShiftedForm shifted_form(int power);

/// Coefficients from Bernoulli numbers at 1/2:
///   d_i = C(2m, 2i) B_{2i}(1/2) / (2(m-i)+1)
///   e_i = C(2m+1, 2i) B_{2i}(1/2) / (2(m-i)+2),  e_{m+1} = -sum e_i / 4^{m-i+1}
ShiftedForm shifted_closed_form(int power);

/// Composes with N = x + 1/2.
Polynomial shifted_to_monomial(const ShiftedForm& form);

}  // namespace faulhaber
