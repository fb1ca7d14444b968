#pragma once

#include "faulhaber/polynomial.hpp"
#include "faulhaber/rational.hpp"
#include "faulhaber/report.hpp"

#include <cstddef>
#include <deque>
#include <shared_mutex>

namespace faulhaber {

/// Memoized Bernoulli numbers B_0, B_1, ... with B_1 = -1/2, generated by
/// the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
///
/// Readers run concurrently; extension takes an exclusive lock. Entries are
/// never modified once written, and the deque keeps them at stable addresses.
class BernoulliCache {
public:
    BernoulliCache();

    /// B_m; fills every index up to m on first request.
    Rational at(std::size_t m) const;

    /// Largest index computed so far.
    std::size_t high_water() const;

private:
    void extend_to(std::size_t m) const;

    mutable std::shared_mutex mutex_;
    mutable std::deque<Rational> values_;
};

/// Process-wide cache used by the free functions below.
BernoulliCache& default_bernoulli_cache();

Rational bernoulli_number(std::size_t m);

/// B_m(x) = sum_{j=0}^{m} C(m, j) B_j x^{m-j}.
Polynomial bernoulli_polynomial(std::size_t m);

/// B_r(1/2) = (2^{1-r} - 1) B_r.
Rational bernoulli_at_half(std::size_t r);

/// Checks B_{2m+1} = 0 for m = 1..max_m. Throws std::invalid_argument when max_m < 1.
VerificationReport verify_odd_zero(long max_m);

}  // namespace faulhaber
