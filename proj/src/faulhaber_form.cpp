#include "faulhaber/faulhaber_form.hpp"

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/powersum.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace faulhaber {

namespace {

void require_power(int power, int minimum, const char* what)
{
    if (power < minimum)
        throw std::invalid_argument(std::string(what) + ": power must be at least " + std::to_string(minimum) +
                                    ", got " + std::to_string(power));
}

// q(u) -> (q(u) - q(0)) / u
Polynomial drop_constant_and_divide_by_u(const Polynomial& q)
{
    const auto c = q.coefficients();
    if (c.size() <= 1)
        return {};
    return Polynomial(std::vector<Rational>(c.begin() + 1, c.end()));
}

// Coefficient with which sum_{k} sum_{l<=k} l^{p-1} contributes S_{p-j}, from
//   sum_{l=1}^{k} l^{p-1} = (1/p) sum_{j=0}^{p-1} (-1)^j C(p, j) B_j k^{p-j}.
Rational double_sum_weight(int p, int j)
{
    Rational w = Rational(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(j))) *
                 bernoulli_number(static_cast<std::size_t>(j)) / Rational(p);
    return j % 2 == 1 ? -w : w;
}

// The induction assumes B_j = 0 for the odd j >= 3 that enter the double sum.
void require_odd_bernoulli_vanish(int p)
{
    for (int j = 3; j < p; j += 2) {
        if (!bernoulli_number(static_cast<std::size_t>(j)).is_zero())
            throw ConsistencyError("induction step " + std::to_string(p) + ": B_" + std::to_string(j) +
                                   " is nonzero");
    }
    if (double_sum_weight(p, 1) != Rational(1, 2))
        throw ConsistencyError("induction step " + std::to_string(p) + ": S_{p-1} weight is not 1/2");
}

}  // namespace

Polynomial triangular_variable()
{
    return Polynomial({Rational(0), Rational(1, 2), Rational(1, 2)});
}

Polynomial sum_of_squares_polynomial()
{
    return Polynomial({Rational(0), Rational(1, 6), Rational(1, 2), Rational(1, 3)});
}

Polynomial square_of_sum_polynomial()
{
    const auto u = triangular_variable();
    return u * u;
}

Polynomial multiplier_polynomial(Multiplier m)
{
    return m == Multiplier::SumOfSquares ? sum_of_squares_polynomial() : square_of_sum_polynomial();
}

FaulhaberForm FaulhaberForm::from_polynomial(int power, const Polynomial& in_u)
{
    require_power(power, 2, "FaulhaberForm");
    const auto count = static_cast<std::size_t>(power / 2);
    if (in_u.size() > count)
        throw ConsistencyError("coefficient polynomial of degree " + std::to_string(in_u.degree()) +
                               " does not fit power " + std::to_string(power));
    std::vector<Rational> desc(count);
    for (std::size_t i = 0; i < count; ++i)
        desc[i] = in_u.coefficient(count - 1 - i);
    return FaulhaberForm(power, std::move(desc));
}

Polynomial FaulhaberForm::in_triangular() const
{
    return from_descending(coefficients_);
}

Polynomial triangular_decompose(const Polynomial& p)
{
    Polynomial rest = p;
    std::vector<Rational> out;
    std::vector<Polynomial> u_powers{Polynomial::constant(1)};
    const auto u = triangular_variable();

    while (!rest.is_zero()) {
        const int deg = rest.degree();
        if (deg % 2 != 0)
            throw NotTriangularError("remainder of odd degree " + std::to_string(deg) +
                                     " is not a polynomial in n(n+1)/2");
        const auto d = static_cast<std::size_t>(deg / 2);
        while (u_powers.size() <= d)
            u_powers.push_back(u_powers.back() * u);
        if (out.size() <= d)
            out.resize(d + 1);
        const Rational c = rest.leading() * power_of_two(static_cast<long>(d));
        out[d] = c;
        rest -= u_powers[d] * c;
    }
    return Polynomial(std::move(out));
}

FaulhaberForm faulhaber_form(int power)
{
    require_power(power, 2, "faulhaber_form");
    const Multiplier mult = power % 2 == 0 ? Multiplier::SumOfSquares : Multiplier::SquareOfSum;
    auto [quotient, remainder] = divmod(powersum_monomial(power), multiplier_polynomial(mult));
    if (!remainder.is_zero())
        throw ConsistencyError("sum k^" + std::to_string(power) + " is not divisible by its multiplier");
    return FaulhaberForm::from_polynomial(power, triangular_decompose(quotient));
}

InductiveDerivation derive_faulhaber_forms(int power)
{
    require_power(power, 2, "derive_faulhaber_forms");

    // Coefficient polynomials in u, keyed by power.
    std::map<int, Polynomial> in_u;
    in_u[2] = Polynomial::constant(1);
    in_u[3] = Polynomial::constant(1);
    const Polynomial u_var = Polynomial::monomial(1, 1);

    InductiveDerivation out;
    for (int p = 4; p <= power; ++p) {
        // (n+1) S_{p-1} = S_p + sum_k sum_{l<=k} l^{p-1}; expand the double sum
        // in S_p, S_{p-1}, S_{p-2}, S_{p-4}, ... and solve
        //   ((p+1)/p) S_p = (n + 1/2) S_{p-1} - [terms in lower S of p's parity]
        require_odd_bernoulli_vanish(p);
        const Rational scale = Rational(p, p + 1);

        // F collects the lower sums sharing p's parity, each already of the
        // form (poly in u) * multiplier.
        Polynomial lower;
        const int lowest = p % 2 == 0 ? 2 : 3;
        for (int j = 2; p - j >= lowest; j += 2)
            lower += in_u.at(p - j) * double_sum_weight(p, j);

        if (p % 2 == 0) {
            // (n + 1/2) (sum k)^2 A(u) = (3/2) u A(u) sum k^2
            const Polynomial lifted = u_var * in_u.at(p - 1) * Rational(3, 2);
            in_u[p] = (lifted - lower) * scale;
        } else {
            // (n + 1/2) C(u) sum k^2 = C(u) ((4/3) (sum k)^2 + (1/6) sum k)
            //   = [(4/3) C(u) + (1/6) (C(u) - c)/u] (sum k)^2 + (c/6) sum k
            const Polynomial& even = in_u.at(p - 1);
            const Rational c = even.coefficient(0);
            const Polynomial lifted =
                even * Rational(4, 3) + drop_constant_and_divide_by_u(even) * Rational(1, 6);

            // The S_1 term of the double sum is C(p, p-1) B_{p-1} / p = B_{p-1}.
            const Rational b = double_sum_weight(p, p - 1);
            const Rational residual = c / Rational(6) - b;
            out.odd_steps.push_back({p, c, bernoulli_number(static_cast<std::size_t>(p - 1)), residual});
            if (!residual.is_zero())
                throw ConsistencyError("induction step " + std::to_string(p) + ": sum k term survives with " +
                                       residual.to_string());
            in_u[p] = (lifted - lower) * scale;
        }
    }

    for (int p = 2; p <= power; ++p)
        out.forms.push_back(FaulhaberForm::from_polynomial(p, in_u.at(p)));
    return out;
}

FaulhaberForm faulhaber_form_inductive(int power)
{
    return derive_faulhaber_forms(power).forms.back();
}

Polynomial expand_to_monomial(const FaulhaberForm& form)
{
    return compose(form.in_triangular(), triangular_variable()) * multiplier_polynomial(form.multiplier());
}

Polynomial square_in_triangular(int power)
{
    require_power(power, 2, "square_in_triangular");
    if (power % 2 != 0)
        throw std::invalid_argument("square_in_triangular: power must be even, got " + std::to_string(power));
    const auto s = powersum_monomial(power);
    return triangular_decompose(s * s);
}

VerificationReport verify_lemma(long max_n)
{
    if (max_n < 1)
        throw std::invalid_argument("lemma: max must be at least 1");
    VerificationReport report{"lemma", {}};

    const auto u = triangular_variable();
    const auto squares = sum_of_squares_polynomial();
    const auto shift = Polynomial::shifted_identity(Rational(1, 2));

    report.add("identity 1 (polynomial)", shift * u * u == u * squares * Rational(3, 2));
    report.add("identity 2 (polynomial)",
               shift * squares == (u * Rational(4, 3) + Polynomial::constant(Rational(1, 6))) * u);

    for (long n = 1; n <= max_n; ++n) {
        const BigInt nn(n);
        const Rational s1(oracle_sum(1, nn));
        const Rational s2(oracle_sum(2, nn));
        const Rational tri(n * (n + 1) / 2);
        const Rational half_shift = Rational(nn) + Rational(1, 2);

        const Rational lhs1 = half_shift * s1 * s1;
        const Rational rhs1 = Rational(3, 2) * tri * s2;
        const Rational lhs2 = half_shift * s2;
        const Rational rhs2 = (Rational(4, 3) * tri + Rational(1, 6)) * s1;
        const auto at = " at n=" + std::to_string(n);
        report.add("identity 1 (numeric)" + at, lhs1 == rhs1, lhs1.to_string() + " vs " + rhs1.to_string());
        report.add("identity 2 (numeric)" + at, lhs2 == rhs2, lhs2.to_string() + " vs " + rhs2.to_string());
    }
    return report;
}

VerificationReport verify_constant_term_bernoulli(long max_m)
{
    if (max_m < 2)
        throw std::invalid_argument("constant-term: max must be at least 2");
    VerificationReport report{"constant-term", {}};
    for (long m = 2; m <= max_m; ++m) {
        const auto form = faulhaber_form(static_cast<int>(2 * m));
        const Rational lhs = form.coefficients().back() / Rational(6);
        const Rational b = bernoulli_number(static_cast<std::size_t>(2 * m));
        report.add("c/6 = B_" + std::to_string(2 * m), lhs == b, lhs.to_string() + " vs " + b.to_string());
    }
    return report;
}

}  // namespace faulhaber
