#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/faulhaber_form.hpp"
#include "faulhaber/powersum.hpp"
#include "random_poly.hpp"

using namespace faulhaber;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

std::vector<Rational> coeffs(std::initializer_list<Rational> c) { return c; }

// Value of the form at n using only brute-force sums for the multiplier.
Rational form_value_by_oracle(const FaulhaberForm& f, long n)
{
    const Rational u(n * (n + 1) / 2);
    const Rational mult = f.multiplier() == Multiplier::SumOfSquares
                              ? Rational(oracle_sum(2, n))
                              : Rational(oracle_sum(1, n)) * Rational(oracle_sum(1, n));
    return f.in_triangular().eval(u) * mult;
}

}  // namespace

TEST_CASE("triangular_decompose")
{
    CHECK(triangular_decompose(Polynomial{q(0), q(1), q(1)}) == Polynomial{q(0), q(2)});
    CHECK(triangular_decompose(Polynomial{q(0), q(0), q(1, 4), q(1, 2), q(1, 4)}) == Polynomial{q(0), q(0), q(1)});
    CHECK(triangular_decompose(Polynomial()).is_zero());
    CHECK(triangular_decompose(Polynomial{q(5)}) == Polynomial{q(5)});
    CHECK_THROWS_AS(triangular_decompose(Polynomial::monomial(q(1), 3)), NotTriangularError);
    // Even degree but not symmetric under n -> -1-n.
    CHECK_THROWS_AS(triangular_decompose(Polynomial::monomial(q(1), 2)), NotTriangularError);
}

TEST_CASE("triangular_decompose inverts substitution of u(n)")
{
    testing::PolyGenerator gen(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const auto qpoly = gen.polynomial(10);
        CHECK(triangular_decompose(compose(qpoly, triangular_variable())) == qpoly);
    }
}

TEST_CASE("faulhaber_form small powers")
{
    const auto f2 = faulhaber_form(2);
    CHECK(f2.coefficients() == coeffs({q(1)}));
    CHECK(f2.multiplier() == Multiplier::SumOfSquares);
    const auto f3 = faulhaber_form(3);
    CHECK(f3.coefficients() == coeffs({q(1)}));
    CHECK(f3.multiplier() == Multiplier::SquareOfSum);
    const auto f4 = faulhaber_form(4);
    CHECK(f4.coefficients() == coeffs({q(6, 5), q(-1, 5)}));
    CHECK(f4.parity() == Parity::Even);
    const auto f5 = faulhaber_form(5);
    CHECK(f5.coefficients() == coeffs({q(4, 3), q(-1, 3)}));
    CHECK(f5.parity() == Parity::Odd);
    CHECK_THROWS_AS(faulhaber_form(1), std::invalid_argument);
}

TEST_CASE("form has power/2 coefficients and matches brute force")
{
    for (int p = 2; p <= 30; ++p) {
        const auto f = faulhaber_form(p);
        CHECK(f.coefficients().size() == static_cast<std::size_t>(p / 2));
        CHECK_FALSE(f.coefficients().front().is_zero());
        for (long n = 1; n <= 20; ++n)
            REQUIRE(form_value_by_oracle(f, n) == Rational(oracle_sum(p, n)));
    }
}

TEST_CASE("inductive derivation")
{
    CHECK(faulhaber_form_inductive(2) == faulhaber_form(2));
    CHECK(faulhaber_form_inductive(3) == faulhaber_form(3));
    CHECK(faulhaber_form_inductive(4).coefficients() == coeffs({q(6, 5), q(-1, 5)}));
    CHECK(faulhaber_form_inductive(5).coefficients() == coeffs({q(4, 3), q(-1, 3)}));
    CHECK(faulhaber_form_inductive(7) == faulhaber_form(7));

    const auto d = derive_faulhaber_forms(40);
    REQUIRE(d.forms.size() == 39);
    for (const auto& f : d.forms)
        CHECK_MESSAGE(f == faulhaber_form(f.power()), "power " << f.power());
    // Odd powers 5, 7, ..., 39.
    CHECK(d.odd_steps.size() == 18);
    for (const auto& s : d.odd_steps) {
        CHECK(s.residual.is_zero());
        CHECK(s.even_constant / q(6) == s.bernoulli);
    }
    CHECK(d.odd_steps.front().power == 5);
    CHECK(d.odd_steps.front().even_constant == q(-1, 5));
    CHECK(d.odd_steps.front().bernoulli == q(-1, 30));
}

TEST_CASE("expand_to_monomial")
{
    CHECK(expand_to_monomial(faulhaber_form(3)) == Polynomial{q(0), q(0), q(1, 4), q(1, 2), q(1, 4)});
    CHECK(expand_to_monomial(faulhaber_form(4)) == powersum_monomial(4));
    CHECK(expand_to_monomial(faulhaber_form(12)) == powersum_monomial(12));
}

TEST_CASE("from_polynomial rejects a coefficient list too long for the power")
{
    CHECK_THROWS_AS(FaulhaberForm::from_polynomial(4, Polynomial{q(1), q(1), q(1)}), ConsistencyError);
}

TEST_CASE("square_in_triangular")
{
    const auto g = square_in_triangular(2);
    CHECK(g == Polynomial{q(0), q(0), q(1, 9), q(8, 9)});
    CHECK(g.eval(q(6)) == q(196));
    CHECK(g.eval(q(1)) == q(1));
    for (int p = 2; p <= 10; p += 2) {
        const auto h = square_in_triangular(p);
        for (long n = 1; n <= 20; ++n) {
            const BigInt s = oracle_sum(p, n);
            REQUIRE(h.eval(Rational(n * (n + 1) / 2)) == Rational(BigInt(s * s)));
        }
    }
    CHECK_THROWS_AS(square_in_triangular(3), std::invalid_argument);
}

TEST_CASE("verify_lemma")
{
    const auto r = verify_lemma(100);
    CHECK(r.passed());
    CHECK(r.checks.size() == 2 + 2 * 100);
    CHECK(r.checks[0].label == "identity 1 (polynomial)");
    CHECK(r.checks[0].pass);
    CHECK(r.checks[1].pass);
    // Hand evaluation at n = 2: both sides of identity 1 are 45/2.
    const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                                 [](const CheckResult& c) { return c.label == "identity 1 (numeric) at n=2"; });
    REQUIRE(it != r.checks.end());
    CHECK(it->detail == "45/2 vs 45/2");
}

TEST_CASE("verify_constant_term_bernoulli")
{
    const auto r = verify_constant_term_bernoulli(30);
    CHECK(r.passed());
    CHECK(r.checks.size() == 29);
    CHECK(faulhaber_form(4).coefficients().back() / q(6) == q(-1, 30));
    CHECK(faulhaber_form(6).coefficients().back() / q(6) == q(1, 42));
    CHECK_THROWS_AS(verify_constant_term_bernoulli(1), std::invalid_argument);
}
