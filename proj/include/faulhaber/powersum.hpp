#pragma once

#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"

namespace faulhaber {

/// Polynomial p of degree m+1 with p(n) = 1^m + ... + n^m, from
///   (1/(m+1)) sum_{j=0}^{m} (-1)^j C(m+1, j) B_j n^{m+1-j}.
/// The cache stores B_1 = -1/2, so the alternating sign is applied here; it
/// only affects j = 1 because the odd B_j vanish for j >= 3.
/// Throws std::invalid_argument when m < 1.
Polynomial powersum_monomial(long m);

/// Same polynomial by the second route (B_{m+1}(x+1) - B_{m+1}) / (m+1).
Polynomial powersum_via_bernoulli_poly(long m);

/// Literal 1^m + 2^m + ... + n^m in exact integers. Independent ground truth:
/// touches neither the polynomial code nor the Bernoulli cache.
BigInt oracle_sum(long m, const BigInt& n);

/// Sum_{k=1}^{n} k^m for any m >= 0 and n >= 1 through the polynomial path
/// (S_0 = n handled directly).
BigInt powersum_value(long m, const BigInt& n);

struct SumIdentityReport {
    long exponent = 0;
    long upper_limit = 0;
    BigInt left;
    BigInt right;
    bool pass = false;
};

/// Evaluates both sides of
///   sum k^{m+1} + sum_{k} sum_{l<=k} l^m = (n+1) sum k^m
/// by literal summation.
SumIdentityReport check_partial_sum_identity(long m, long n);

}  // namespace faulhaber
