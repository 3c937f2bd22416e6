#include "thetakit/bignum.hpp"

#include <cmath>
#include <utility>

#include "thetakit/eta_quotient.hpp"
#include "thetakit/exactseries.hpp"

namespace thetakit {

// ---------------------------------------------------------------------------
// PrecisionSpec

PrecisionSpec PrecisionSpec::for_digits(int target_digits)
{
    return PrecisionSpec{target_digits, target_digits / 5 + 15};
}

void PrecisionSpec::validate() const
{
    if (target_digits <= 0) throw std::invalid_argument("target_digits must be positive");
    if (guard_digits < 15) throw std::invalid_argument("guard_digits must be at least 15");
}

BigFloat PrecisionSpec::tolerance(int slack) const
{
    return BigFloat::pow10(-(target_digits - slack));
}

// ---------------------------------------------------------------------------
// RealValue

RealValue::RealValue() = default;

RealValue::RealValue(long exact_value) : value_(exact_value), error_(0L) {}

RealValue::RealValue(BigFloat value, BigFloat error) : value_(std::move(value)), error_(std::move(error))
{
    if (error_.sign() < 0) throw std::invalid_argument("negative error bound");
}

RealValue RealValue::from_rational(const Rational& r)
{
    BigFloat v(r);
    BigFloat e = rounding_bound(v);
    return {std::move(v), std::move(e)};
}

RealValue RealValue::from_string(std::string_view decimal)
{
    BigFloat v = BigFloat::from_string(decimal);
    BigFloat e = rounding_bound(v);
    return {std::move(v), std::move(e)};
}

RealValue RealValue::pi()
{
    BigFloat v = BigFloat::pi();
    BigFloat e = rounding_bound(v);
    return {std::move(v), std::move(e)};
}

bool RealValue::meets(const PrecisionSpec& prec) const
{
    return error_ <= prec.tolerance() * max(BigFloat(1L), abs(value_));
}

RealValue operator-(const RealValue& x)
{
    return {-x.value(), x.error()};
}

RealValue operator+(const RealValue& a, const RealValue& b)
{
    BigFloat v = a.value() + b.value();
    BigFloat e = a.error() + b.error() + rounding_bound(v);
    return {std::move(v), std::move(e)};
}

RealValue operator-(const RealValue& a, const RealValue& b)
{
    BigFloat v = a.value() - b.value();
    BigFloat e = a.error() + b.error() + rounding_bound(v);
    return {std::move(v), std::move(e)};
}

RealValue operator*(const RealValue& a, const RealValue& b)
{
    BigFloat v = a.value() * b.value();
    BigFloat e = abs(a.value()) * b.error() + abs(b.value()) * a.error() + a.error() * b.error() +
                 rounding_bound(v);
    return {std::move(v), std::move(e)};
}

RealValue operator/(const RealValue& a, const RealValue& b)
{
    const BigFloat margin = abs(b.value()) - b.error();
    if (margin.sign() <= 0) throw std::domain_error("division by a value whose interval contains zero");
    BigFloat v = a.value() / b.value();
    BigFloat e = (a.error() + abs(v) * b.error()) / margin + rounding_bound(v);
    return {std::move(v), std::move(e)};
}

RealValue sqrt(const RealValue& x)
{
    const BigFloat lo = x.lower();
    if (lo.sign() < 0) throw std::domain_error("square root of a possibly negative value");
    BigFloat v = sqrt(x.value());
    const BigFloat denom = v + sqrt(lo);
    BigFloat e = denom.is_zero() ? sqrt(x.error()) : x.error() / denom;
    e += rounding_bound(v);
    return {std::move(v), std::move(e)};
}

RealValue exp(const RealValue& x)
{
    BigFloat v = exp(x.value());
    BigFloat e = v * expm1(x.error()) + rounding_bound(v);
    return {std::move(v), std::move(e)};
}

RealValue abs(const RealValue& x)
{
    return {abs(x.value()), x.error()};
}

RealValue pow(const RealValue& x, long e)
{
    if (e == 0) return RealValue(1L);
    if (e == 1) return x;
    BigFloat v = pow(x.value(), e);
    // Mean-value bound over the magnitude interval [lo, hi].
    const BigFloat hi = abs(x.value()) + x.error();
    const BigFloat lo = abs(x.value()) - x.error();
    BigFloat slope;
    if (e - 1 >= 0) {
        slope = pow(hi, e - 1);
    } else {
        if (lo.sign() <= 0) throw std::domain_error("negative power of a value whose interval contains zero");
        slope = pow(lo, e - 1);
    }
    BigFloat err = BigFloat(std::abs(e)) * slope * x.error() + rounding_bound(v);
    return {std::move(v), std::move(err)};
}

RealValue pow(const RealValue& x, const Rational& e)
{
    if (e.get_den() == 1) return pow(x, to_long(e));
    if (!x.certainly_positive()) throw std::domain_error("fractional power of a value not certainly positive");
    const long p = e.get_num().get_si();
    const unsigned long q = e.get_den().get_ui();
    BigFloat v = pow(rootn(x.value(), q), p);
    const BigFloat r(e);
    const BigFloat r_minus_one = r - BigFloat(1L);
    const BigFloat slope = max(pow(x.lower(), r_minus_one), pow(x.upper(), r_minus_one));
    BigFloat err = abs(r) * slope * x.error() + BigFloat(std::abs(p) + 2) * rounding_bound(v);
    return {std::move(v), std::move(err)};
}

int digits_agreement(const BigFloat& a, const BigFloat& b, int cap)
{
    const BigFloat diff = abs(a - b);
    if (diff.is_zero()) return cap;
    const BigFloat scale = b.is_zero() ? BigFloat(1L) : abs(b);
    const long d = -(diff / scale).log10_floor() - 1;
    if (d < 0) return 0;
    return d > cap ? cap : static_cast<int>(d);
}

RealValue evaluate_certified(const PrecisionSpec& prec,
                             const std::function<RealValue(const PrecisionSpec&)>& compute)
{
    prec.validate();
    PrecisionSpec attempt = prec;
    for (int round = 0; round < 4; ++round) {
        WorkingPrecision wp(attempt.working_digits());
        RealValue r = compute(attempt);
        if (r.meets(prec)) return r;
        attempt.guard_digits *= 2;
    }
    throw PrecisionLoss("could not reach " + std::to_string(prec.target_digits) + " digits");
}

// ---------------------------------------------------------------------------
// Nome

Nome nome(const Rational& m, const Rational& n, const PrecisionSpec& prec)
{
    if (m <= 0 || n <= 0) throw std::invalid_argument("nome requires positive m and n");
    Rational ratio = m / n;
    RealValue q = evaluate_certified(prec, [&](const PrecisionSpec&) {
        return exp(-(RealValue::pi() * sqrt(RealValue::from_rational(ratio))));
    });
    return Nome{m, n, std::move(q)};
}

// ---------------------------------------------------------------------------
// Theta blocks

std::string_view to_string(Block b) noexcept
{
    switch (b) {
    case Block::f_minus: return "f_minus";
    case Block::f_plus: return "f_plus";
    case Block::phi_plus: return "phi_plus";
    case Block::phi_minus: return "phi_minus";
    case Block::psi_plus: return "psi_plus";
    case Block::psi_minus: return "psi_minus";
    case Block::chi_plus: return "chi_plus";
    case Block::chi_minus: return "chi_minus";
    }
    return "unknown";
}

namespace {

struct Term
{
    long exponent;
    long coefficient;
};

long parity_sign(long v)
{
    return (v % 2 == 0) ? 1 : -1;
}

// Nonzero terms of the sparse theta series in strictly increasing exponent order.
class TermStream
{
public:
    explicit TermStream(Block kind) : kind_(kind) {}

    long coefficient_bound() const { return (kind_ == Block::phi_plus || kind_ == Block::phi_minus) ? 2 : 1; }

    Term next()
    {
        switch (kind_) {
        case Block::f_minus:
        case Block::f_plus: {
            // Generalized pentagonal numbers 0, 1, 2, 5, 7, 12, 15, ...
            Term t{0, 1};
            if (index_ > 0) {
                const long n = (index_ + 1) / 2;
                t.exponent = (index_ % 2 == 1) ? n * (3 * n - 1) / 2 : n * (3 * n + 1) / 2;
                t.coefficient = parity_sign(n);
            }
            if (kind_ == Block::f_plus) t.coefficient *= parity_sign(t.exponent);
            ++index_;
            return t;
        }
        case Block::phi_plus:
        case Block::phi_minus: {
            const long n = index_++;
            if (n == 0) return {0, 1};
            return {n * n, kind_ == Block::phi_plus ? 2 : 2 * parity_sign(n)};
        }
        case Block::psi_plus:
        case Block::psi_minus: {
            const long n = index_++;
            const long e = n * (n + 1) / 2;
            return {e, kind_ == Block::psi_plus ? 1 : parity_sign(e)};
        }
        default:
            throw std::logic_error("composite block has no term stream");
        }
    }

private:
    Block kind_;
    long index_ = 0;
};

// Sum of c_j x^{e_j} with |c_j| <= C. Tail after exponent E: C x^E / (1 - x);
// derivative tail: C x^(E-1) (E/(1-x) + x/(1-x)^2), both at the upper end of x.
RealValue sum_theta_series(Block kind, const RealValue& x)
{
    TermStream stream(kind);
    const BigFloat bound(stream.coefficient_bound());
    const BigFloat& xv = x.value();
    const BigFloat xh = x.upper();
    const BigFloat one(1L);
    const BigFloat gap = one - xh;
    const BigFloat eps = BigFloat::pow10(-(working_digits() + 2));

    BigFloat sum;
    BigFloat derivative;
    BigFloat rounding;
    BigFloat tail;
    Term term = stream.next();
    Term next{};
    for (;;) {
        const BigFloat t = (term.exponent == 0 ? one : pow(xv, term.exponent)) * BigFloat(term.coefficient);
        sum += t;
        rounding += BigFloat(4L) * rounding_bound(t);
        if (term.exponent > 0) {
            derivative += BigFloat(std::abs(term.coefficient) * term.exponent) * pow(xh, term.exponent - 1);
        }
        next = stream.next();
        tail = bound * pow(xh, next.exponent) / gap;
        if (tail <= eps * max(one, abs(sum))) break;
        term = next;
    }
    const BigFloat e_next(next.exponent);
    const BigFloat derivative_tail =
        bound * pow(xh, next.exponent - 1) * (e_next / gap + xh / (gap * gap));
    BigFloat err = x.error() * (derivative + derivative_tail) + tail + rounding + rounding_bound(sum);
    return {std::move(sum), std::move(err)};
}

} // namespace

RealValue eval_block_at(Block kind, const RealValue& x, const PrecisionSpec& prec)
{
    prec.validate();
    WorkingPrecision wp(prec.working_digits());
    if (x.value().sign() <= 0 || x.upper() >= BigFloat(1L)) {
        throw std::domain_error("theta block argument must lie in (0, 1)");
    }
    RealValue r;
    switch (kind) {
    case Block::chi_plus:
        r = sum_theta_series(Block::f_plus, x) / sum_theta_series(Block::f_minus, x * x);
        break;
    case Block::chi_minus:
        r = sum_theta_series(Block::f_minus, x) / sum_theta_series(Block::f_minus, x * x);
        break;
    default:
        r = sum_theta_series(kind, x);
        break;
    }
    if (!r.meets(prec)) throw PrecisionLoss(std::string("block ") + std::string(to_string(kind)) + " lost accuracy");
    return r;
}

RealValue eval_block(Block kind, unsigned long k, const RealValue& q, const PrecisionSpec& prec)
{
    if (k == 0) throw std::invalid_argument("block argument power k must be positive");
    WorkingPrecision wp(prec.working_digits());
    return eval_block_at(kind, pow(q, static_cast<long>(k)), prec);
}

RealValue eval_eta_quotient(const EtaQuotient& expr, const RealValue& q, const PrecisionSpec& prec)
{
    prec.validate();
    WorkingPrecision wp(prec.working_digits());
    RealValue r(1L);
    if (expr.q_power() != 0) r = pow(q, expr.q_power());
    for (const auto& f : expr.factors()) {
        const RealValue b = eval_block(f.plus ? Block::f_plus : Block::f_minus, f.k, q, prec);
        r = r * pow(b, f.exponent);
    }
    if (!r.meets(prec)) throw PrecisionLoss("eta quotient " + render(expr) + " lost accuracy");
    return r;
}

RealValue evaluate_truncated(const PowerSeries& series, const RealValue& q)
{
    const RealValue root = pow(q, Rational(mpz_class(1), mpz_class(PowerSeries::lattice)));
    RealValue sum;
    for (const auto& [e, c] : series.terms()) {
        sum = sum + RealValue::from_rational(c) * pow(root, e);
    }
    return sum;
}

} // namespace thetakit
