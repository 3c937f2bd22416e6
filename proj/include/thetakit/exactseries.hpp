#pragma once

#include <map>
#include <optional>
#include <string>

#include "thetakit/rational.hpp"

namespace thetakit {

/// Truncated Laurent series in q^(1/24) with exact rational coefficients.
///
/// A lattice exponent e stands for q^(e/24). Coefficients are known for every
/// e <= order(); nothing is claimed beyond it. Zero coefficients are never
/// stored. Arithmetic propagates the order soundly: for a product of series
/// with orders N1, N2 and valuations v1, v2 the result is known up to
/// min(N1 + v2, N2 + v1).
class PowerSeries
{
public:
    static constexpr long lattice = 24;

    /// The series known to be zero up to `order`.
    explicit PowerSeries(long order = 0);
    /// Drops zero coefficients and any exponent beyond `order`.
    PowerSeries(std::map<long, Rational> coefficients, long order);

    static PowerSeries constant(const Rational& c, long order);
    static PowerSeries monomial(const Rational& c, long exponent, long order);

    long order() const noexcept { return order_; }
    const std::map<long, Rational>& terms() const noexcept { return terms_; }
    /// Coefficient of q^(e/24); throws std::out_of_range for e > order().
    Rational coefficient(long e) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Lowest stored exponent, or order() + 1 for a series known to vanish.
    long valuation() const noexcept;
    /// order() - valuation(): how many lattice steps past the leading term are known.
    long relative_precision() const noexcept { return order_ - valuation(); }

    PowerSeries truncated(long order) const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator-(const PowerSeries& a);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& a);

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::map<long, Rational> terms_;
    long order_;
};

/// Multiplicative inverse; throws std::domain_error for a series with no
/// known nonzero coefficient.
PowerSeries invert(const PowerSeries& a);
PowerSeries pow_int(const PowerSeries& a, long e);
/// Multiplies by q^(d/24).
PowerSeries shift(const PowerSeries& a, long d);
/// Substitutes q -> q^k.
PowerSeries scale_argument(const PowerSeries& a, unsigned long k);

enum class Sign { plus, minus };

/// f(-q^k) (minus) or f(q^k) (plus), known to the given lattice order.
/// Throws std::invalid_argument for k = 0 or a negative order.
PowerSeries series_f(unsigned long k, Sign sign, long order);
/// phi(q) or phi(-q).
PowerSeries series_phi(Sign sign, long order);
/// psi(q) or psi(-q).
PowerSeries series_psi(Sign sign, long order);
/// Euler product prod_{n>=1} (1 - q^n) expanded factor by factor (reference
/// implementation for the pentagonal sum).
PowerSeries euler_product(long order);

/// Result of a coefficient-wise comparison.
struct SeriesCheck
{
    bool pass = true;
    /// First lattice exponent where the sides differ, when they do.
    std::optional<long> first_failure;
    /// Highest lattice exponent compared.
    long checked_through = 0;
};

/// Compares two series on every exponent both of them know.
SeriesCheck compare_series(const PowerSeries& lhs, const PowerSeries& rhs);
/// All coefficients up to the series order vanish.
SeriesCheck check_vanishes(const PowerSeries& s);

struct Entry24Check
{
    /// f(q) f(-q^2) = psi(-q) phi(q)
    SeriesCheck product_form;
    /// f(q) / f(-q^2) = f(-q^2)^2 / (f(-q) f(-q^4))
    SeriesCheck quotient_form;
    bool pass() const noexcept { return product_form.pass && quotient_form.pass; }
};

Entry24Check check_entry24(long order);

std::string render(const PowerSeries& s);

} // namespace thetakit
