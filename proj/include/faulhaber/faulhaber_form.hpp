#pragma once

#include "faulhaber/errors.hpp"
#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"
#include "faulhaber/report.hpp"

#include <vector>

namespace faulhaber {

enum class Parity { Even, Odd };

/// The factor pulled out of a Faulhaber form: sum k^2 for even powers,
/// (sum k)^2 for odd powers.
enum class Multiplier { SumOfSquares, SquareOfSum };

/// u(n) = (n^2 + n)/2, the triangular numbers.
Polynomial triangular_variable();
/// sum k^2 = (2n^3 + 3n^2 + n)/6
Polynomial sum_of_squares_polynomial();
/// (sum k)^2 = u(n)^2
Polynomial square_of_sum_polynomial();
Polynomial multiplier_polynomial(Multiplier m);

/// sum_{k=1}^{n} k^power written as [polynomial in u] * multiplier, with
/// power = 2m or 2m+1 and exactly m coefficients. Coefficients are held
/// highest power of u first: coefficients()[i] multiplies u^{m-1-i}.
class FaulhaberForm {
public:
    /// Builds the form for `power` (>= 2) from its coefficient polynomial in u.
    /// Throws ConsistencyError if the degree does not fit power.
    static FaulhaberForm from_polynomial(int power, const Polynomial& in_u);

    int power() const { return power_; }
    Parity parity() const { return power_ % 2 == 0 ? Parity::Even : Parity::Odd; }
    Multiplier multiplier() const
    {
        return parity() == Parity::Even ? Multiplier::SumOfSquares : Multiplier::SquareOfSum;
    }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    /// Coefficient polynomial in u, low-to-high.
    Polynomial in_triangular() const;

    friend bool operator==(const FaulhaberForm&, const FaulhaberForm&) = default;

private:
    FaulhaberForm(int power, std::vector<Rational> coefficients)
        : power_(power), coefficients_(std::move(coefficients))
    {
    }

    int power_ = 2;
    std::vector<Rational> coefficients_;
};

/// Rewrites p(n) as q(u) with u = n(n+1)/2 by stripping leading terms:
/// a leading L n^{2d} becomes L 2^d u^d. Throws NotTriangularError if an
/// odd-degree remainder appears.
Polynomial triangular_decompose(const Polynomial& p);

/// Direct change of basis: divides the monomial power sum by the multiplier
/// (the division must be exact) and decomposes the quotient.
FaulhaberForm faulhaber_form(int power);

/// Record of one odd step of the partial-sums induction: the constant c of
/// the preceding even form, the Bernoulli number it must cancel against, and
/// what is left of the sum k term after cancellation.
struct OddStepRecord {
    int power = 0;
    Rational even_constant;
    Rational bernoulli;
    Rational residual;
};

struct InductiveDerivation {
    std::vector<FaulhaberForm> forms;  // powers 2..target
    std::vector<OddStepRecord> odd_steps;
};

/// Builds every form up to `power` from the two base cases by the method of
/// partial sums. Throws ConsistencyError if an odd Bernoulli number the
/// derivation relies on is nonzero or a sum k term survives cancellation.
InductiveDerivation derive_faulhaber_forms(int power);

FaulhaberForm faulhaber_form_inductive(int power);

/// Substitutes u(n) and multiplies back by the multiplier.
Polynomial expand_to_monomial(const FaulhaberForm& form);

/// (sum k^power)^2 as a polynomial in u, for even power >= 2.
Polynomial square_in_triangular(int power);

/// Both identities
///   (n + 1/2) (sum k)^2 = (3/2) u sum k^2
///   (n + 1/2) sum k^2  = ((4/3) u + 1/6) sum k
/// as polynomial identities in n and numerically for n = 1..max_n.
VerificationReport verify_lemma(long max_n);

/// (last coefficient of the form for 2m) / 6 = B_{2m} for m = 2..max_m.
VerificationReport verify_constant_term_bernoulli(long max_m);

}  // namespace faulhaber
