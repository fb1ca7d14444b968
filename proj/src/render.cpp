#include "faulhaber/render.hpp"

#include "faulhaber/powersum.hpp"

#include <json.hpp>

#include <sstream>
#include <vector>

namespace faulhaber {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kShiftPlain = "  where N = n + 1/2";
constexpr std::string_view kShiftLatex = ", \\quad N = n + \\frac{1}{2}";

std::string render_magnitude(const Rational& r, Format format)
{
    return render_rational(r.sign() < 0 ? -r : r, format);
}

std::string render_power(std::string_view variable, std::size_t exponent, Format format)
{
    std::string out(variable);
    if (exponent > 1)
        out += format == Format::Latex ? "^{" + std::to_string(exponent) + "}" : "^" + std::to_string(exponent);
    return out;
}

std::size_t term_count(const Polynomial& p)
{
    std::size_t n = 0;
    for (const auto& c : p.coefficients())
        n += c.is_zero() ? 0 : 1;
    return n;
}

std::string parenthesize(const Polynomial& p, std::string_view variable, Format format)
{
    const std::string body = render_polynomial(p, variable, format);
    if (term_count(p) <= 1)
        return body;
    return format == Format::Latex ? "\\left(" + body + "\\right)" : "(" + body + ")";
}

Json coefficient_array(const std::vector<Rational>& coefficients)
{
    Json arr = Json::array();
    for (const auto& c : coefficients)
        arr.push_back(c.to_string());
    return arr;
}

std::string json_document(long power, Basis basis, const Json& multiplier, const std::vector<Rational>& coefficients,
                          std::string_view ordering)
{
    Json doc;
    doc["power"] = power;
    doc["basis"] = std::string(to_string(basis));
    doc["multiplier"] = multiplier;
    doc["coefficients"] = coefficient_array(coefficients);
    doc["ordering"] = std::string(ordering);
    return doc.dump();
}

std::string_view multiplier_name(Multiplier m)
{
    return m == Multiplier::SumOfSquares ? "Sum(k^2)" : "Sum(k)^2";
}

}  // namespace

void RenderRequest::validate() const
{
    if (exponent < 1)
        throw UsageError("exponent must be a positive integer");
    if (method == Method::Inductive && basis != Basis::Triangular)
        throw UsageError("method 'inductive' requires basis 'triangular'");
    if (method == Method::Closed && basis != Basis::Shifted)
        throw UsageError("method 'closed' requires basis 'shifted'");
}

std::string_view to_string(Basis b)
{
    switch (b) {
    case Basis::Monomial: return "monomial";
    case Basis::Triangular: return "triangular";
    case Basis::Shifted: return "shifted";
    }
    return "?";
}

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::Direct: return "direct";
    case Method::Inductive: return "inductive";
    case Method::Closed: return "closed";
    }
    return "?";
}

std::string render_rational(const Rational& r, Format format)
{
    if (format != Format::Latex || r.is_integer())
        return r.to_string();
    const std::string sign = r.sign() < 0 ? "-" : "";
    BigInt num = r.numerator();
    if (num < 0)
        num = -num;
    return sign + "\\frac{" + num.get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string render_polynomial(const Polynomial& p, std::string_view variable, Format format)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    const auto coeffs = p.coefficients();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (c.is_zero())
            continue;
        const bool negative = c.sign() < 0;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        const bool unit = c == Rational(1) || c == Rational(-1);
        if (k == 0) {
            out << render_magnitude(c, format);
        } else if (unit) {
            out << render_power(variable, k, format);
        } else {
            out << render_magnitude(c, format) << (format == Format::Latex ? "" : "*")
                << render_power(variable, k, format);
        }
    }
    return out.str();
}

std::string render_faulhaber(const FaulhaberForm& form, Format format)
{
    if (format == Format::Json) {
        return json_document(form.power(), Basis::Triangular, std::string(multiplier_name(form.multiplier())),
                             form.coefficients(), "paper-descending");
    }
    const Polynomial inner = form.in_triangular();
    if (format == Format::Latex) {
        const std::string tail =
            form.multiplier() == Multiplier::SumOfSquares ? "\\sum k^{2}" : "\\left(\\sum k\\right)^{2}";
        const std::string body = parenthesize(inner, "S_1", format);
        return body + (term_count(inner) <= 1 ? " \\cdot " : "") + tail;
    }
    return parenthesize(inner, "S1", format) + " * " + std::string(multiplier_name(form.multiplier()));
}

std::string render_shifted(const ShiftedForm& form, Format format)
{
    if (format == Format::Json)
        return json_document(form.power(), Basis::Shifted, nullptr, form.coefficients(), "paper-descending");

    const std::string var = "N";
    if (form.parity() == Parity::Odd) {
        const std::string body = render_polynomial(form.in_shifted(), var, format);
        return body + std::string(format == Format::Latex ? kShiftLatex : kShiftPlain);
    }
    // Odd polynomial in N: factor out one N.
    const Polynomial full = form.in_shifted();
    const auto coeffs = full.coefficients();
    const Polynomial reduced(std::vector<Rational>(coeffs.begin() + 1, coeffs.end()));
    const std::string body = parenthesize(reduced, var, format);
    if (format == Format::Latex)
        return "N" + body + std::string(kShiftLatex);
    return "N*" + body + std::string(kShiftPlain);
}

std::string render_powersum(const RenderRequest& request)
{
    request.validate();
    const auto power = static_cast<int>(request.exponent);

    switch (request.basis) {
    case Basis::Monomial: {
        const Polynomial p = powersum_monomial(request.exponent);
        if (request.format == Format::Json) {
            const auto c = p.coefficients();
            return json_document(request.exponent, Basis::Monomial, nullptr, {c.begin(), c.end()}, "ascending");
        }
        return render_polynomial(p, "n", request.format);
    }
    case Basis::Triangular: {
        if (power == 1) {
            // sum k is u itself; there is no multiplier to pull out.
            if (request.format == Format::Json)
                return json_document(1, Basis::Triangular, nullptr, {Rational(1), Rational(0)}, "paper-descending");
            return request.format == Format::Latex ? "S_1" : "S1";
        }
        const FaulhaberForm form =
            request.method == Method::Inductive ? faulhaber_form_inductive(power) : faulhaber_form(power);
        return render_faulhaber(form, request.format);
    }
    case Basis::Shifted: {
        const ShiftedForm form = request.method == Method::Closed ? shifted_closed_form(power) : shifted_form(power);
        return render_shifted(form, request.format);
    }
    }
    return {};
}

}  // namespace faulhaber
