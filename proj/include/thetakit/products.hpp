#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "thetakit/bignum.hpp"

namespace thetakit {

/// Raised when two definitional forms of the same product disagree beyond
/// their combined error bounds. The forms are exact identities, so this
/// always indicates a defect.
class FormMismatch : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

enum class ProductKind { a, b };

struct ProductValue
{
    Rational m;
    Rational n;
    ProductKind kind = ProductKind::a;
    /// Value of the theta-quotient definition.
    RealValue value;
    /// Names of the forms that were evaluated and found to agree:
    /// "theta_quotient", "alternative_theta_quotient", "eta_quotient".
    std::vector<std::string> forms_checked;
};

/// a_{m,n} at q = exp(-pi sqrt(m/n)) from
///   n q^((n-1)/4) psi^2(q^n) phi^2(-q^(2n)) / (psi^2(q) phi^2(-q^2)),
///   n q^((n-1)/4) psi^2(-q^n) phi^2(q^n) / (psi^2(-q) phi^2(q)),
///   n / (f(q) f(-q^2) / (q^((n-1)/8) f(q^n) f(-q^(2n))))^2.
/// Throws std::invalid_argument for non-positive m or n, FormMismatch when
/// the forms disagree.
ProductValue a_numeric(const Rational& m, const Rational& n, const PrecisionSpec& prec);

/// b_{m,n} from
///   n q^((n-1)/4) psi^2(q^n) phi^2(-q^n) / (psi^2(q) phi^2(-q)),
///   n / (f(-q) f(-q^2) / (q^((n-1)/8) f(-q^n) f(-q^(2n))))^2.
ProductValue b_numeric(const Rational& m, const Rational& n, const PrecisionSpec& prec);

} // namespace thetakit
