#include "thetakit/bigfloat.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace thetakit {

namespace {

constexpr mpfr_prec_t default_bits = 256;

thread_local mpfr_prec_t tls_bits = default_bits;

mpfr_prec_t digits_to_bits(int digits)
{
    // log2(10) = 3.3219..., plus 8 spare bits.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

struct MpfrString
{
    char* p = nullptr;
    ~MpfrString()
    {
        if (p != nullptr) mpfr_free_str(p);
    }
};

} // namespace

mpfr_prec_t working_bits() noexcept
{
    return tls_bits;
}

int working_digits() noexcept
{
    return static_cast<int>(std::floor((tls_bits - 8) / 3.321928094887362));
}

WorkingPrecision::WorkingPrecision(int decimal_digits) : saved_(tls_bits)
{
    if (decimal_digits < 1) throw std::invalid_argument("working precision must be positive");
    tls_bits = digits_to_bits(decimal_digits);
}

WorkingPrecision::~WorkingPrecision()
{
    tls_bits = saved_;
}

BigFloat::BigFloat()
{
    mpfr_init2(value_, tls_bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long v)
{
    mpfr_init2(value_, tls_bits);
    mpfr_set_si(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v)
{
    mpfr_init2(value_, tls_bits);
    mpfr_set_d(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v)
{
    mpfr_init2(value_, tls_bits);
    mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& v)
{
    mpfr_init2(value_, tls_bits);
    mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_string(std::string_view text)
{
    BigFloat r;
    const std::string s(text);
    char* end = nullptr;
    mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
    if (end == s.c_str() || *end != '\0') {
        throw std::invalid_argument("malformed decimal literal: '" + s + "'");
    }
    return r;
}

BigFloat BigFloat::pi()
{
    BigFloat r;
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow10(long e)
{
    BigFloat r;
    mpfr_ui_pow_ui(r.value_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.value_, 1, r.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long e)
{
    BigFloat r;
    mpfr_set_ui_2exp(r.value_, 1, e, MPFR_RNDN);
    return r;
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    // Steal the limbs and leave `other` as a valid minimal-precision zero.
    *value_ = *other.value_;
    mpfr_init2(other.value_, MPFR_PREC_MIN);
    mpfr_set_zero(other.value_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(value_);
}

long BigFloat::log10_floor() const
{
    if (is_zero()) return -1000000000L;
    BigFloat a = abs(*this);
    mpfr_log10(a.value_, a.value_, MPFR_RNDD);
    mpfr_floor(a.value_, a.value_);
    return mpfr_get_si(a.value_, MPFR_RNDD);
}

std::string BigFloat::to_string(int significant_digits) const
{
    if (mpfr_nan_p(value_)) return "nan";
    if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    mpfr_exp_t exp10 = 0;
    MpfrString s;
    s.p = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(significant_digits), value_, MPFR_RNDN);
    std::string digits(s.p);
    std::string out;
    if (!digits.empty() && digits[0] == '-') {
        out = "-";
        digits.erase(0, 1);
    }
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    const long e = static_cast<long>(exp10) - 1;
    if (e != 0) out += "e" + std::to_string(e);
    return out;
}

std::string BigFloat::to_fixed(int fraction_digits) const
{
    const auto width = mpfr_snprintf(nullptr, 0, "%.*RNf", fraction_digits, value_);
    std::string out(static_cast<std::size_t>(width) + 1, '\0');
    mpfr_snprintf(out.data(), out.size(), "%.*RNf", fraction_digits, value_);
    out.resize(static_cast<std::size_t>(width));
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs)
{
    *this = *this + rhs;
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs)
{
    *this = *this - rhs;
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs)
{
    *this = *this * rhs;
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs)
{
    *this = *this / rhs;
    return *this;
}

BigFloat operator-(const BigFloat& x)
{
    BigFloat r;
    mpfr_neg(r.value_, x.value_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b)
{
    BigFloat r;
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b)
{
    BigFloat r;
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b)
{
    BigFloat r;
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero");
    BigFloat r;
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) noexcept
{
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x)
{
    BigFloat r;
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x)
{
    if (x.sign() < 0) throw std::domain_error("square root of a negative number");
    BigFloat r;
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x)
{
    BigFloat r;
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat expm1(const BigFloat& x)
{
    BigFloat r;
    mpfr_expm1(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x)
{
    if (x.sign() <= 0) throw std::domain_error("logarithm of a nonpositive number");
    BigFloat r;
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y)
{
    BigFloat r;
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, long e)
{
    BigFloat r;
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

BigFloat rootn(const BigFloat& x, unsigned long k)
{
    if (k == 0) throw std::domain_error("zeroth root");
    if (x.sign() < 0) throw std::domain_error("real root of a negative number");
    BigFloat r;
    mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b)
{
    return a < b ? b : a;
}

BigFloat min(const BigFloat& a, const BigFloat& b)
{
    return b < a ? b : a;
}

BigFloat rounding_bound(const BigFloat& x)
{
    BigFloat r = abs(x);
    mpfr_mul_2si(r.get(), r.get(), 1 - static_cast<long>(working_bits()), MPFR_RNDU);
    return r;
}

} // namespace thetakit
