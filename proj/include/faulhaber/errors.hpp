#pragma once

#include <stdexcept>
#include <string>

namespace faulhaber {

/// A polynomial handed to the triangular decomposition is not a polynomial
/// in n(n+1)/2.
class NotTriangularError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact step that must hold for every valid input did not. Never
/// recoverable; indicates a broken invariant in the computation itself.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace faulhaber
