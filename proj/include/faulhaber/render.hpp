#pragma once

#include "faulhaber/faulhaber_form.hpp"
#include "faulhaber/polynomial.hpp"
#include "faulhaber/shifted.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace faulhaber {

enum class Basis { Monomial, Triangular, Shifted };
enum class Method { Direct, Inductive, Closed };
enum class Format { Plain, Latex, Json };

/// Bad user input; the CLI maps it to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RenderRequest {
    long exponent = 1;
    Basis basis = Basis::Monomial;
    Method method = Method::Direct;
    Format format = Format::Plain;

    /// Throws UsageError for exponent < 1, `inductive` outside the triangular
    /// basis, or `closed` outside the shifted basis.
    void validate() const;
};

std::string_view to_string(Basis b);
std::string_view to_string(Method m);

/// "p/q" or "\frac{p}{q}".
std::string render_rational(const Rational& r, Format format);

/// Nonzero terms from the highest power down, e.g. "x^2 - x + 1/6".
/// Plain and LaTeX only; the zero polynomial renders as "0".
std::string render_polynomial(const Polynomial& p, std::string_view variable, Format format);

std::string render_faulhaber(const FaulhaberForm& form, Format format);
std::string render_shifted(const ShiftedForm& form, Format format);

/// Computes and renders sum k^exponent in the requested basis. Deterministic.
std::string render_powersum(const RenderRequest& request);

}  // namespace faulhaber
