#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "thetakit/rational.hpp"

namespace thetakit {

/// Number of bits used for newly created values on the calling thread.
mpfr_prec_t working_bits() noexcept;

/// Decimal digits corresponding to working_bits().
int working_digits() noexcept;

/// Sets the thread-local working precision for the lifetime of the guard.
class WorkingPrecision
{
public:
    explicit WorkingPrecision(int decimal_digits);
    ~WorkingPrecision();

    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

private:
    mpfr_prec_t saved_;
};

/// Owning wrapper around an mpfr_t. Results of arithmetic are rounded to
/// nearest at the working precision of the calling thread; copies keep the
/// precision of their source.
class BigFloat
{
public:
    BigFloat();
    BigFloat(long v);
    BigFloat(int v) : BigFloat(static_cast<long>(v)) {}
    explicit BigFloat(double v);
    explicit BigFloat(const Rational& v);
    explicit BigFloat(const mpz_class& v);

    /// Parses a decimal literal such as "0.05" or "-1.5e-3".
    static BigFloat from_string(std::string_view text);
    static BigFloat pi();
    /// 10^e, correctly rounded.
    static BigFloat pow10(long e);
    /// 2^e, exact.
    static BigFloat pow2(long e);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    int sign() const noexcept { return mpfr_sgn(value_); }
    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
    double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Base-10 exponent estimate: floor(log10|x|), or a large negative number for 0.
    long log10_floor() const;
    /// Scientific notation with the given number of significant digits.
    std::string to_string(int significant_digits) const;
    /// Fixed notation with the given number of digits after the point.
    std::string to_fixed(int fraction_digits) const;

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator-(const BigFloat& x);
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    friend bool operator==(const BigFloat& a, const BigFloat& b) noexcept
    {
        return mpfr_equal_p(a.value_, b.value_) != 0;
    }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) noexcept;

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long e);
/// Principal real k-th root of a nonnegative value.
BigFloat rootn(const BigFloat& x, unsigned long k);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

/// Bound on one rounding error of a result of magnitude |x| at working precision.
BigFloat rounding_bound(const BigFloat& x);

} // namespace thetakit
