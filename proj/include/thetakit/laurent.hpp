#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "thetakit/bigfloat.hpp"
#include "thetakit/rational.hpp"

namespace thetakit {

namespace detail {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const BigFloat& c) { return c.is_zero(); }
inline Rational coeff_reciprocal(const Rational& c) { return Rational(1) / c; }
inline BigFloat coeff_reciprocal(const BigFloat& c) { return BigFloat(1L) / c; }

} // namespace detail

/// Laurent polynomial in two variables X, Y: sum of c * X^a * Y^b with
/// integer a, b. Zero coefficients are never stored.
template <class T>
class Laurent2
{
public:
    using Exponents = std::pair<long, long>;

    Laurent2() = default;

    static Laurent2 constant(const T& c) { return monomial(c, 0, 0); }
    static Laurent2 monomial(const T& c, long a, long b)
    {
        Laurent2 r;
        if (!detail::coeff_is_zero(c)) r.terms_.emplace(Exponents{a, b}, c);
        return r;
    }
    static Laurent2 x() { return monomial(T(1L), 1, 0); }
    static Laurent2 y() { return monomial(T(1L), 0, 1); }

    const std::map<Exponents, T>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Componentwise minimum exponents; (0, 0) for the zero polynomial.
    Exponents min_exponents() const
    {
        if (terms_.empty()) return {0, 0};
        Exponents m = terms_.begin()->first;
        for (const auto& [e, c] : terms_) {
            m.first = std::min(m.first, e.first);
            m.second = std::min(m.second, e.second);
        }
        return m;
    }

    /// Multiplies by X^a Y^b.
    Laurent2 shifted(long a, long b) const
    {
        Laurent2 r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents{e.first + a, e.second + b}, c);
        return r;
    }

    /// The same relation multiplied by the smallest monomial making every
    /// exponent nonnegative.
    Laurent2 cleared() const
    {
        const auto [a, b] = min_exponents();
        return shifted(-a, -b);
    }

    Laurent2& operator+=(const Laurent2& rhs)
    {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    Laurent2& operator-=(const Laurent2& rhs)
    {
        for (const auto& [e, c] : rhs.terms_) add_term(e, T(-c));
        return *this;
    }

    friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
    friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
    friend Laurent2 operator-(const Laurent2& a) { return Laurent2() - a; }

    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b)
    {
        Laurent2 r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.add_term(Exponents{ea.first + eb.first, ea.second + eb.second}, T(ca * cb));
            }
        }
        return r;
    }

    /// Reciprocal of a single-term polynomial; throws std::domain_error otherwise.
    Laurent2 monomial_inverse() const
    {
        if (!is_monomial()) throw std::domain_error("only a single-term polynomial can be inverted");
        const auto& [e, c] = *terms_.begin();
        return monomial(detail::coeff_reciprocal(c), -e.first, -e.second);
    }

    Laurent2 pow(long n) const
    {
        if (n < 0) return monomial_inverse().pow(-n);
        Laurent2 result = constant(T(1L));
        Laurent2 base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Laurent2&, const Laurent2&) = default;

private:
    void add_term(const Exponents& e, const T& c)
    {
        if (detail::coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    std::map<Exponents, T> terms_;
};

} // namespace thetakit
