#include "faulhaber/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace faulhaber {

BernoulliCache::BernoulliCache()
{
    values_.push_back(Rational(1));
    values_.push_back(Rational(-1, 2));
}

Rational BernoulliCache::at(std::size_t m) const
{
    {
        std::shared_lock lock(mutex_);
        if (m < values_.size())
            return values_[m];
    }
    extend_to(m);
    std::shared_lock lock(mutex_);
    return values_[m];
}

std::size_t BernoulliCache::high_water() const
{
    std::shared_lock lock(mutex_);
    return values_.size() - 1;
}

void BernoulliCache::extend_to(std::size_t m) const
{
    std::unique_lock lock(mutex_);
    for (std::size_t n = values_.size(); n <= m; ++n) {
        // B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k. The binomial row is
        // advanced multiplicatively: C(n+1, k+1) = C(n+1, k) (n+1-k) / (k+1).
        Rational sum;
        BigInt c = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (!values_[k].is_zero())
                sum += Rational(c) * values_[k];
            c *= static_cast<unsigned long>(n + 1 - k);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
        }
        values_.push_back(-sum / Rational(static_cast<unsigned long>(n + 1)));
    }
}

BernoulliCache& default_bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_number(std::size_t m)
{
    return default_bernoulli_cache().at(m);
}

Polynomial bernoulli_polynomial(std::size_t m)
{
    std::vector<Rational> coeffs(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        coeffs[m - j] = Rational(binomial(m, j)) * bernoulli_number(j);
    return Polynomial(std::move(coeffs));
}

Rational bernoulli_at_half(std::size_t r)
{
    return (power_of_two(1 - static_cast<long>(r)) - Rational(1)) * bernoulli_number(r);
}

VerificationReport verify_odd_zero(long max_m)
{
    if (max_m < 1)
        throw std::invalid_argument("odd-bernoulli: max must be at least 1");
    VerificationReport report{"odd-bernoulli", {}};
    for (long m = 1; m <= max_m; ++m) {
        const auto index = static_cast<std::size_t>(2 * m + 1);
        const Rational b = bernoulli_number(index);
        report.add("B_" + std::to_string(index) + " = 0", b.is_zero(),
                   b.is_zero() ? std::string() : "B_" + std::to_string(index) + " = " + b.to_string());
    }
    return report;
}

}  // namespace faulhaber
