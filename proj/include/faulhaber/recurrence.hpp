#pragma once

#include "faulhaber/polynomial.hpp"

#include <optional>
#include <vector>

namespace faulhaber {

/// B_0(x), ..., B_max(x) from
///   B_m(x) = (x - 1/2) B_{m-1}(x) - (1/m) sum_{r=0}^{m-2} C(m, r) B_{m-r} B_r(x)
/// starting at B_0(x) = 1.
std::vector<Polynomial> he_ricci_sequence(long max_m);

/// B_m(x) by the recurrence above, m >= 1.
Polynomial he_ricci_polynomial(long m);

/// S_1(x), ..., S_max(x) (index 0 unused) from S_1(x) = x^2/2 + x/2 and
///   S_m(x) = (1/(m+1)) (m (x + 1/2) S_{m-1}(x) - sum_{r=1}^{m-2} C(m, r) B_{m-r} S_r(x)).
/// Bernoulli numbers enter without alternating signs; only B_2..B_{m-1} occur.
std::vector<Polynomial> partial_sum_sequence(long max_m);

/// S_m(x) by the recurrence above, m >= 2.
Polynomial partial_sum_polynomial(long m);

struct RecurrenceReport {
    long max_index = 0;
    /// Index i holds the verdict for m = i + 1; m = 1 covers the Bernoulli
    /// route only since the power-sum recurrence starts at m = 2.
    std::vector<bool> passed;
    std::optional<long> counterexample;

    bool overall() const { return !counterexample.has_value(); }
};

/// For m = 1..max_m checks he_ricci_polynomial(m) = bernoulli_polynomial(m)
/// and, for m >= 2, partial_sum_polynomial(m) = powersum_monomial(m).
/// Throws std::invalid_argument when max_m < 2.
RecurrenceReport verify_recurrence_consistency(long max_m);

}  // namespace faulhaber
