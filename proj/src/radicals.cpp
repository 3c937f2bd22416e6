#include "thetakit/radicals.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace thetakit {

struct RadicalExpr::Node
{
    Kind kind = Kind::integer;
    mpz_class value;
    Rational exponent;
    std::vector<RadicalExpr> operands;
};

RadicalExpr RadicalExpr::integer(const mpz_class& value)
{
    auto n = std::make_shared<Node>();
    n->value = value;
    return RadicalExpr(std::move(n));
}

RadicalExpr RadicalExpr::binary(Kind kind, RadicalExpr lhs, RadicalExpr rhs)
{
    if (kind != Kind::add && kind != Kind::sub && kind != Kind::mul && kind != Kind::div) {
        throw std::invalid_argument("not a binary operator");
    }
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->operands = {std::move(lhs), std::move(rhs)};
    return RadicalExpr(std::move(n));
}

RadicalExpr RadicalExpr::negate(RadicalExpr operand)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::neg;
    n->operands = {std::move(operand)};
    return RadicalExpr(std::move(n));
}

RadicalExpr RadicalExpr::power(RadicalExpr base, const Rational& exponent)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::pow;
    n->operands = {std::move(base)};
    n->exponent = exponent;
    n->exponent.canonicalize();
    return RadicalExpr(std::move(n));
}

RadicalExpr RadicalExpr::square_root(RadicalExpr operand)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::sqrt;
    n->operands = {std::move(operand)};
    return RadicalExpr(std::move(n));
}

RadicalExpr::Kind RadicalExpr::kind() const noexcept
{
    return node_->kind;
}

const mpz_class& RadicalExpr::value() const
{
    if (node_->kind != Kind::integer) throw std::logic_error("not an integer literal");
    return node_->value;
}

const RadicalExpr& RadicalExpr::lhs() const
{
    if (node_->operands.empty()) throw std::logic_error("leaf has no operand");
    return node_->operands[0];
}

const RadicalExpr& RadicalExpr::rhs() const
{
    if (node_->operands.size() < 2) throw std::logic_error("node has no second operand");
    return node_->operands[1];
}

const Rational& RadicalExpr::exponent() const
{
    if (node_->kind != Kind::pow) throw std::logic_error("not a power node");
    return node_->exponent;
}

namespace {

using Kind = RadicalExpr::Kind;

} // namespace

int RadicalExpr::depth() const
{
    switch (kind()) {
    case Kind::integer: return 0;
    case Kind::sqrt:
        if (lhs().kind() == Kind::integer) return 0;
        return 1 + lhs().depth();
    case Kind::neg:
    case Kind::pow: return 1 + lhs().depth();
    default: return 1 + std::max(lhs().depth(), rhs().depth());
    }
}

bool operator==(const RadicalExpr& x, const RadicalExpr& y)
{
    if (x.node_ == y.node_) return true;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
    case RadicalExpr::Kind::integer: return x.value() == y.value();
    case RadicalExpr::Kind::pow: return x.exponent() == y.exponent() && x.lhs() == y.lhs();
    case RadicalExpr::Kind::neg:
    case RadicalExpr::Kind::sqrt: return x.lhs() == y.lhs();
    default: return x.lhs() == y.lhs() && x.rhs() == y.rhs();
    }
}

// ---------------------------------------------------------------- evaluation

namespace {

RealValue eval_node(const RadicalExpr& e)
{
    switch (e.kind()) {
    case Kind::integer: return RealValue::from_rational(Rational(e.value()));
    case Kind::add: {
        const RealValue a = eval_node(e.lhs());
        return a + eval_node(e.rhs());
    }
    case Kind::sub: {
        const RealValue a = eval_node(e.lhs());
        return a - eval_node(e.rhs());
    }
    case Kind::mul: {
        const RealValue a = eval_node(e.lhs());
        return a * eval_node(e.rhs());
    }
    case Kind::div: {
        const RealValue a = eval_node(e.lhs());
        const RealValue b = eval_node(e.rhs());
        if (!b.certainly_nonzero()) throw std::domain_error("division by zero in radical expression");
        return a / b;
    }
    case Kind::neg: return -eval_node(e.lhs());
    case Kind::sqrt: {
        const RealValue x = eval_node(e.lhs());
        if (x.value().sign() < 0 || !(x.certainly_positive() || x.value().is_zero())) {
            throw std::domain_error("square root of a non-positive value");
        }
        return sqrt(x);
    }
    case Kind::pow: {
        const Rational& p = e.exponent();
        const RealValue x = eval_node(e.lhs());
        if (p.get_den() == 1) {
            if (p < 0 && !x.certainly_nonzero()) throw std::domain_error("negative power of zero");
            return pow(x, to_long(p));
        }
        if (!x.certainly_positive()) throw std::domain_error("fractional power of a non-positive value");
        return pow(x, p);
    }
    }
    throw std::logic_error("unknown radical node");
}

} // namespace

RealValue eval_radical(const RadicalExpr& expr, const PrecisionSpec& prec)
{
    return evaluate_certified(prec, [&](const PrecisionSpec&) { return eval_node(expr); });
}

// ------------------------------------------------------------------- parsing

namespace {

class RadicalParser
{
public:
    explicit RadicalParser(std::string_view text) : text_(text) {}

    RadicalExpr parse()
    {
        RadicalExpr e = expr();
        skip_space();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message, std::size_t at) const
    {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column);
    }
    [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'" + (pos_ < text_.size() ? std::string(", found '") + text_[pos_] + "'" : ", found end of input"));
        }
    }

    mpz_class integer_literal()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    RadicalExpr expr()
    {
        RadicalExpr acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RadicalExpr term()
    {
        RadicalExpr acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                acc = acc / unary();
            } else {
                return acc;
            }
        }
    }

    RadicalExpr unary()
    {
        if (accept('-')) return RadicalExpr::negate(unary());
        return power();
    }

    RadicalExpr power()
    {
        const std::size_t base_at = (skip_space(), pos_);
        RadicalExpr base = atom();
        if (!accept('^')) return base;
        const Rational e = exponent();
        if (e.get_den() != 1) require_positive(base, base_at, "fractional power");
        return RadicalExpr::power(std::move(base), e);
    }

    Rational exponent()
    {
        if (accept('(')) {
            const bool negative = accept('-');
            Rational r(integer_literal());
            if (accept('/')) {
                const std::size_t at = pos_;
                const mpz_class d = integer_literal();
                if (d == 0) fail("zero denominator in exponent", at);
                r = Rational(r.get_num(), d);
                r.canonicalize();
            }
            expect(')');
            return negative ? Rational(-r) : r;
        }
        const bool negative = accept('-');
        Rational r(integer_literal());
        return negative ? Rational(-r) : r;
    }

    RadicalExpr atom()
    {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return RadicalExpr::integer(integer_literal());
        if (accept('(')) {
            RadicalExpr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name != "sqrt") fail("unknown symbol '" + std::string(name) + "'", start);
            expect('(');
            const std::size_t arg_at = (skip_space(), pos_);
            RadicalExpr inner = expr();
            expect(')');
            require_positive(inner, arg_at, "sqrt");
            return RadicalExpr::square_root(std::move(inner));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    /// Principal roots only: checks the base numerically at 30 digits.
    void require_positive(const RadicalExpr& base, std::size_t at, const std::string& what) const
    {
        bool positive = false;
        try {
            WorkingPrecision wp(45);
            const RealValue v = eval_node(base);
            positive = v.certainly_positive() || (what == "sqrt" && v.value().is_zero());
        } catch (const std::domain_error& e) {
            fail(e.what(), at);
        }
        if (!positive) fail(what + " of a non-positive base", at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// ----------------------------------------------------------------- rendering

int precedence(Kind k)
{
    switch (k) {
    case Kind::add:
    case Kind::sub: return 1;
    case Kind::mul:
    case Kind::div: return 2;
    case Kind::neg: return 3;
    case Kind::pow: return 4;
    default: return 5;
    }
}

std::string render_exponent(const Rational& e)
{
    if (e.get_den() == 1 && e >= 0) return to_string(e);
    return "(" + to_string(e) + ")";
}

std::string render_node(const RadicalExpr& e);

std::string wrap_if(bool cond, const std::string& s)
{
    return cond ? "(" + s + ")" : s;
}

std::string render_node(const RadicalExpr& e)
{
    const Kind k = e.kind();
    switch (k) {
    case Kind::integer: return wrap_if(e.value() < 0, e.value().get_str());
    case Kind::sqrt: return "sqrt(" + render_node(e.lhs()) + ")";
    case Kind::neg: {
        const RadicalExpr& operand = e.lhs();
        return "-" + wrap_if(precedence(operand.kind()) < 4, render_node(operand));
    }
    case Kind::pow: {
        const RadicalExpr& base = e.lhs();
        return wrap_if(precedence(base.kind()) < 5, render_node(base)) + "^" + render_exponent(e.exponent());
    }
    default: {
        const RadicalExpr& a = e.lhs();
        const RadicalExpr& b = e.rhs();
        const int p = precedence(k);
        // Equal-precedence right operands keep their parentheses (the parser is left-associative).
        const std::string left = wrap_if(precedence(a.kind()) < p, render_node(a));
        const std::string right = wrap_if(precedence(b.kind()) <= p || b.kind() == Kind::neg, render_node(b));
        switch (k) {
        case Kind::add: return left + " + " + right;
        case Kind::sub: return left + " - " + right;
        case Kind::mul: return left + "*" + right;
        default: return left + "/" + right;
        }
    }
    }
}

} // namespace

RadicalExpr parse_radical(std::string_view text)
{
    return RadicalParser(text).parse();
}

std::string render(const RadicalExpr& expr)
{
    return render_node(expr);
}

} // namespace thetakit
