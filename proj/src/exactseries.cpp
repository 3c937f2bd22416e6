#include "thetakit/exactseries.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thetakit {

PowerSeries::PowerSeries(long order) : order_(order) {}

PowerSeries::PowerSeries(std::map<long, Rational> coefficients, long order) : order_(order)
{
    for (auto& [e, c] : coefficients) {
        if (e > order) break;
        if (c != 0) terms_.emplace(e, std::move(c));
    }
}

PowerSeries PowerSeries::constant(const Rational& c, long order)
{
    return monomial(c, 0, order);
}

PowerSeries PowerSeries::monomial(const Rational& c, long exponent, long order)
{
    return PowerSeries({{exponent, c}}, order);
}

Rational PowerSeries::coefficient(long e) const
{
    if (e > order_) throw std::out_of_range("coefficient beyond the known order");
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

long PowerSeries::valuation() const noexcept
{
    return terms_.empty() ? order_ + 1 : terms_.begin()->first;
}

PowerSeries PowerSeries::truncated(long order) const
{
    if (order >= order_) return *this;
    PowerSeries r(order);
    for (const auto& [e, c] : terms_) {
        if (e > order) break;
        r.terms_.emplace(e, c);
    }
    return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs)
{
    order_ = std::min(order_, rhs.order_);
    while (!terms_.empty() && terms_.rbegin()->first > order_) terms_.erase(std::prev(terms_.end()));
    for (const auto& [e, c] : rhs.terms_) {
        if (e > order_) break;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs)
{
    return *this += -rhs;
}

PowerSeries operator-(const PowerSeries& a)
{
    PowerSeries r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a)
{
    if (c == 0) return PowerSeries(a.order_);
    PowerSeries r = a;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    const long order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
    std::map<long, Rational> acc;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            const long e = ea + eb;
            if (e > order) break;
            acc[e] += ca * cb;
        }
    }
    return PowerSeries(std::move(acc), order);
}

PowerSeries invert(const PowerSeries& a)
{
    if (a.is_zero()) throw std::domain_error("cannot invert a series with no known nonzero coefficient");
    const long lead = a.valuation();
    const long precision = a.relative_precision();
    const Rational inv_lead = 1 / a.terms().begin()->second;

    // Only multiples of the gcd of the exponent gaps can appear in the inverse.
    long step = 0;
    for (const auto& [e, c] : a.terms()) step = std::gcd(step, e - lead);
    if (step == 0) step = precision + 1;

    // b_r = -(1/c) * sum_{s>0} a_{lead+s} b_{r-s}, stored densely on the step lattice.
    std::vector<Rational> b(static_cast<std::size_t>(precision / step + 1));
    b[0] = inv_lead;
    for (std::size_t r = 1; r < b.size(); ++r) {
        Rational acc = 0;
        for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it) {
            const auto s = static_cast<std::size_t>((it->first - lead) / step);
            if (s > r) break;
            acc += it->second * b[r - s];
        }
        b[r] = -inv_lead * acc;
    }
    std::map<long, Rational> out;
    for (std::size_t r = 0; r < b.size(); ++r) {
        if (b[r] != 0) out.emplace(-lead + static_cast<long>(r) * step, std::move(b[r]));
    }
    return PowerSeries(std::move(out), -lead + precision);
}

PowerSeries pow_int(const PowerSeries& a, long e)
{
    if (e < 0) return pow_int(invert(a), -e);
    if (e == 0) return PowerSeries::constant(1, a.relative_precision());
    PowerSeries base = a;
    std::optional<PowerSeries> result;
    for (long k = e;;) {
        if (k & 1) result = result ? *result * base : base;
        k >>= 1;
        if (k == 0) break;
        base = base * base;
    }
    return *result;
}

PowerSeries shift(const PowerSeries& a, long d)
{
    std::map<long, Rational> out;
    for (const auto& [e, c] : a.terms()) out.emplace(e + d, c);
    return PowerSeries(std::move(out), a.order() + d);
}

PowerSeries scale_argument(const PowerSeries& a, unsigned long k)
{
    if (k == 0) throw std::invalid_argument("scale_argument requires k > 0");
    const long kk = static_cast<long>(k);
    std::map<long, Rational> out;
    for (const auto& [e, c] : a.terms()) out.emplace(e * kk, c);
    // Unknown terms start at exponent k*(N+1).
    return PowerSeries(std::move(out), kk * (a.order() + 1) - 1);
}

namespace {

void require_order(long order)
{
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

long sign_of_parity(long v)
{
    return v % 2 == 0 ? 1 : -1;
}

} // namespace

PowerSeries series_f(unsigned long k, Sign sign, long order)
{
    if (k == 0) throw std::invalid_argument("series_f requires k > 0");
    require_order(order);
    const long scale = PowerSeries::lattice * static_cast<long>(k);
    std::map<long, Rational> terms{{0, Rational(1)}};
    for (long n = 1;; ++n) {
        const long g1 = n * (3 * n - 1) / 2;
        const long g2 = n * (3 * n + 1) / 2;
        if (g1 * scale > order) break;
        for (const long g : {g1, g2}) {
            if (g * scale > order) break;
            long c = sign_of_parity(n);
            if (sign == Sign::plus) c *= sign_of_parity(g);
            terms.emplace(g * scale, Rational(c));
        }
    }
    return PowerSeries(std::move(terms), order);
}

PowerSeries series_phi(Sign sign, long order)
{
    require_order(order);
    std::map<long, Rational> terms{{0, Rational(1)}};
    for (long n = 1; n * n * PowerSeries::lattice <= order; ++n) {
        const long c = sign == Sign::plus ? 2 : 2 * sign_of_parity(n);
        terms.emplace(n * n * PowerSeries::lattice, Rational(c));
    }
    return PowerSeries(std::move(terms), order);
}

PowerSeries series_psi(Sign sign, long order)
{
    require_order(order);
    std::map<long, Rational> terms;
    for (long n = 0;; ++n) {
        const long t = n * (n + 1) / 2;
        if (t * PowerSeries::lattice > order) break;
        terms.emplace(t * PowerSeries::lattice, Rational(sign == Sign::plus ? 1 : sign_of_parity(t)));
    }
    return PowerSeries(std::move(terms), order);
}

PowerSeries euler_product(long order)
{
    require_order(order);
    PowerSeries acc = PowerSeries::constant(1, order);
    for (long n = 1; n * PowerSeries::lattice <= order; ++n) {
        acc = acc * PowerSeries({{0, Rational(1)}, {n * PowerSeries::lattice, Rational(-1)}}, order);
    }
    return acc;
}

SeriesCheck check_vanishes(const PowerSeries& s)
{
    SeriesCheck out;
    out.checked_through = s.order();
    if (!s.is_zero()) {
        out.pass = false;
        out.first_failure = s.terms().begin()->first;
    }
    return out;
}

SeriesCheck compare_series(const PowerSeries& lhs, const PowerSeries& rhs)
{
    return check_vanishes(lhs - rhs);
}

Entry24Check check_entry24(long order)
{
    require_order(order);
    const auto f1p = series_f(1, Sign::plus, order);
    const auto f1 = series_f(1, Sign::minus, order);
    const auto f2 = series_f(2, Sign::minus, order);
    const auto f4 = series_f(4, Sign::minus, order);
    Entry24Check out;
    out.product_form = compare_series(f1p * f2, series_psi(Sign::minus, order) * series_phi(Sign::plus, order));
    out.quotient_form = compare_series(f1p * invert(f2), pow_int(f2, 2) * invert(f1 * f4));
    return out;
}

std::string render(const PowerSeries& s)
{
    auto q_power = [](long e) {
        Rational r(mpz_class(e), mpz_class(PowerSeries::lattice));
        r.canonicalize();
        if (r == 1) return std::string("q");
        if (r.get_den() == 1 && r > 0) return "q^" + to_string(r);
        return "q^(" + to_string(r) + ")";
    };
    std::string out;
    for (const auto& [e, c] : s.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (e == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += q_power(e);
        }
    }
    if (out.empty()) out = "0";
    return out + " + O(" + q_power(s.order() + 1) + ")";
}

} // namespace thetakit
