#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "thetakit/bignum.hpp"
#include "thetakit/parse_error.hpp"
#include "thetakit/rational.hpp"

namespace thetakit {

/// Immutable expression tree over integers with field operations, sqrt and
/// rational powers. Copies share structure.
class RadicalExpr
{
public:
    enum class Kind { integer, add, sub, mul, div, neg, pow, sqrt };

    static RadicalExpr integer(const mpz_class& value);
    static RadicalExpr binary(Kind kind, RadicalExpr lhs, RadicalExpr rhs);
    static RadicalExpr negate(RadicalExpr operand);
    static RadicalExpr power(RadicalExpr base, const Rational& exponent);
    static RadicalExpr square_root(RadicalExpr operand);

    RadicalExpr() : RadicalExpr(integer(0)) {}

    Kind kind() const noexcept;
    /// Literal value; only for Kind::integer.
    const mpz_class& value() const;
    /// Left operand of a binary node, or the single operand of neg, pow, sqrt.
    const RadicalExpr& lhs() const;
    const RadicalExpr& rhs() const;
    const Rational& exponent() const;

    /// Nesting depth; integer literals and square roots of literals count as
    /// depth 0.
    int depth() const;

    friend bool operator==(const RadicalExpr& a, const RadicalExpr& b);

    friend RadicalExpr operator+(RadicalExpr a, RadicalExpr b) { return binary(Kind::add, std::move(a), std::move(b)); }
    friend RadicalExpr operator-(RadicalExpr a, RadicalExpr b) { return binary(Kind::sub, std::move(a), std::move(b)); }
    friend RadicalExpr operator*(RadicalExpr a, RadicalExpr b) { return binary(Kind::mul, std::move(a), std::move(b)); }
    friend RadicalExpr operator/(RadicalExpr a, RadicalExpr b) { return binary(Kind::div, std::move(a), std::move(b)); }

private:
    struct Node;
    explicit RadicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Grammar: integers, + - * / ^, parentheses and sqrt(...). Exponents are
/// integer or parenthesized rational literals such as ^3, ^(5/2), ^(-1/6).
/// Throws ParseError on syntax errors and when a fractional power or sqrt is
/// applied to a base that is not positive.
RadicalExpr parse_radical(std::string_view text);

/// Canonical text with minimal parentheses; parse_radical(render(e)) == e.
std::string render(const RadicalExpr& expr);

/// Certified evaluation. Throws std::domain_error on division by zero or a
/// non-positive base under a fractional power.
RealValue eval_radical(const RadicalExpr& expr, const PrecisionSpec& prec);

} // namespace thetakit
