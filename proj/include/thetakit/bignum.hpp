#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thetakit/bigfloat.hpp"
#include "thetakit/rational.hpp"

namespace thetakit {

class PowerSeries;
class EtaQuotient;

/// Requested decimal accuracy plus extra working digits.
struct PrecisionSpec
{
    int target_digits = 100;
    int guard_digits = 35;

    /// Default guard policy: 0.2 * target + 15.
    static PrecisionSpec for_digits(int target_digits);

    int working_digits() const noexcept { return target_digits + guard_digits; }
    /// Throws std::invalid_argument unless target_digits > 0 and guard_digits >= 15.
    void validate() const;
    /// 10^-(target_digits - slack), e.g. slack = 15 for residual tolerances.
    BigFloat tolerance(int slack = 0) const;
};

/// Thrown when an operation cannot honor its claimed accuracy.
class PrecisionLoss : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A real number together with an upper bound on its absolute error.
class RealValue
{
public:
    RealValue();
    RealValue(long exact_value);
    RealValue(BigFloat value, BigFloat error);

    /// Rational rounded to working precision; the error covers the rounding.
    static RealValue from_rational(const Rational& r);
    static RealValue from_string(std::string_view decimal);
    static RealValue pi();

    const BigFloat& value() const noexcept { return value_; }
    const BigFloat& error() const noexcept { return error_; }
    BigFloat lower() const { return value_ - error_; }
    BigFloat upper() const { return value_ + error_; }

    bool certainly_positive() const { return lower().sign() > 0; }
    bool certainly_nonzero() const { return abs(value_) > error_; }
    /// error <= 10^-target * max(1, |value|).
    bool meets(const PrecisionSpec& prec) const;
    double to_double() const { return value_.to_double(); }
    std::string to_string(int significant_digits) const { return value_.to_string(significant_digits); }

private:
    BigFloat value_;
    BigFloat error_;
};

RealValue operator-(const RealValue& x);
RealValue operator+(const RealValue& a, const RealValue& b);
RealValue operator-(const RealValue& a, const RealValue& b);
RealValue operator*(const RealValue& a, const RealValue& b);
/// Throws std::domain_error when the divisor's interval contains zero.
RealValue operator/(const RealValue& a, const RealValue& b);

RealValue sqrt(const RealValue& x);
RealValue exp(const RealValue& x);
RealValue pow(const RealValue& x, long e);
/// Principal real power of a certainly-positive value.
RealValue pow(const RealValue& x, const Rational& e);
RealValue abs(const RealValue& x);

/// Number of leading decimal digits on which a and b agree, relative to |b|,
/// capped at `cap`.
int digits_agreement(const BigFloat& a, const BigFloat& b, int cap);

/// Runs `compute` under the working precision of `prec`, doubling the guard
/// digits (up to three times) until the result meets the target accuracy.
RealValue evaluate_certified(const PrecisionSpec& prec,
                             const std::function<RealValue(const PrecisionSpec&)>& compute);

/// q = exp(-pi * sqrt(m/n)).
struct Nome
{
    Rational m;
    Rational n;
    RealValue q;
};

Nome nome(const Rational& m, const Rational& n, const PrecisionSpec& prec);

/// Theta building blocks evaluated at x = q^k. Sign conventions follow the
/// classical notation: f_minus is f(-x) = (x;x)_inf, f_plus is f(x) = (-x;-x)_inf,
/// phi_minus is phi(-x), chi_plus is chi(x) = (-x;x^2)_inf and so on.
enum class Block { f_minus, f_plus, phi_plus, phi_minus, psi_plus, psi_minus, chi_plus, chi_minus };

std::string_view to_string(Block b) noexcept;

RealValue eval_block(Block kind, unsigned long k, const RealValue& q, const PrecisionSpec& prec);
/// Same block evaluated directly at argument x in (0, 1).
RealValue eval_block_at(Block kind, const RealValue& x, const PrecisionSpec& prec);

/// Product of f(-+q^k)^e factors times q^(q_power).
RealValue eval_eta_quotient(const EtaQuotient& expr, const RealValue& q, const PrecisionSpec& prec);

/// Sum of the known coefficients of a q-series (lattice exponent e stands for
/// q^(e/24)) at numeric q. No tail term is included.
RealValue evaluate_truncated(const PowerSeries& series, const RealValue& q);

} // namespace thetakit
