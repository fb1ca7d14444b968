#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "faulhaber/powersum.hpp"

using namespace faulhaber;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST_CASE("powersum_monomial reproduces the small closed forms")
{
    CHECK(powersum_monomial(1) == Polynomial{q(0), q(1, 2), q(1, 2)});
    CHECK(powersum_monomial(2) == Polynomial{q(0), q(1, 6), q(1, 2), q(1, 3)});
    CHECK(powersum_monomial(4) == Polynomial{q(0), q(-1, 30), q(0), q(1, 3), q(1, 2), q(1, 5)});
    CHECK_THROWS_AS(powersum_monomial(0), std::invalid_argument);
}

TEST_CASE("powersum_via_bernoulli_poly")
{
    CHECK(powersum_via_bernoulli_poly(1) == Polynomial{q(0), q(1, 2), q(1, 2)});
    CHECK(powersum_via_bernoulli_poly(3) == Polynomial{q(0), q(0), q(1, 4), q(1, 2), q(1, 4)});
    CHECK(powersum_via_bernoulli_poly(5) ==
          Polynomial{q(0), q(0), q(-1, 12), q(0), q(5, 12), q(1, 2), q(1, 6)});
}

TEST_CASE("both polynomial routes agree for m <= 60")
{
    for (long m = 1; m <= 60; ++m)
        CHECK_MESSAGE(powersum_via_bernoulli_poly(m) == powersum_monomial(m), "m = " << m);
}

TEST_CASE("oracle_sum")
{
    CHECK(oracle_sum(2, 3) == 14);
    CHECK(oracle_sum(3, 10) == 3025);
    CHECK(oracle_sum(5, 4) == 1300);
    CHECK(oracle_sum(0, 9) == 9);
    CHECK_THROWS_AS(oracle_sum(2, 0), std::invalid_argument);
}

TEST_CASE("polynomial evaluation equals brute force for m <= 30, n <= 200")
{
    for (long m = 1; m <= 30; ++m) {
        const auto p = powersum_monomial(m);
        BigInt running = 0;
        for (long n = 1; n <= 200; ++n) {
            running = oracle_sum(m, n);
            REQUIRE_MESSAGE(p.eval(Rational(n)) == Rational(running), "m = " << m << " n = " << n);
        }
    }
}

TEST_CASE("no linear term for odd exponents >= 3 and no constant term ever")
{
    for (long m = 1; m <= 40; ++m) {
        const auto p = powersum_monomial(m);
        CHECK(p.coefficient(0).is_zero());
        CHECK(p.degree() == m + 1);
        if (m % 2 == 1 && m >= 3)
            CHECK(p.coefficient(1).is_zero());
    }
}

TEST_CASE("powersum_value handles huge n and m = 0")
{
    CHECK(powersum_value(3, 10) == 3025);
    CHECK(powersum_value(0, BigInt("100000000000000000000")) == BigInt("100000000000000000000"));
    // (n(n+1)/2)^2 with n = 10^30
    const BigInt n("1000000000000000000000000000000");
    const BigInt tri = n * (n + 1) / 2;
    CHECK(powersum_value(3, n) == tri * tri);
}

TEST_CASE("check_partial_sum_identity")
{
    const auto r0 = check_partial_sum_identity(0, 3);
    CHECK(r0.left == 12);
    CHECK(r0.right == 12);
    CHECK(r0.pass);
    const auto r1 = check_partial_sum_identity(1, 3);
    CHECK(r1.left == 24);
    CHECK(r1.right == 24);
    CHECK(check_partial_sum_identity(2, 5).pass);
    for (long m = 0; m <= 10; ++m)
        for (long n = 1; n <= 50; ++n)
            REQUIRE(check_partial_sum_identity(m, n).pass);
    CHECK_THROWS_AS(check_partial_sum_identity(-1, 3), std::invalid_argument);
}
