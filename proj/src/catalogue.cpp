#include "thetakit/catalogue.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thetakit {

namespace embedded {
extern const std::string_view identities;
}

namespace {

enum class Tok { ident, integer, string, punct, end };

struct Token
{
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t offset = 0;
};

class Lexer
{
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next()
    {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.column = column_;
        t.offset = pos_;
        if (pos_ >= text_.size()) return t;
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::ident;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                t.text += advance();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::integer;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += advance();
        } else if (c == '"') {
            t.kind = Tok::string;
            advance();
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\n') throw ParseError("unterminated string", t.line, t.column);
                t.text += advance();
            }
            if (pos_ >= text_.size()) throw ParseError("unterminated string", t.line, t.column);
            advance();
        } else if (std::string_view("{}()=;:*/^+-").find(c) != std::string_view::npos) {
            t.kind = Tok::punct;
            t.text = advance();
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
        }
        return t;
    }

    std::size_t position() const noexcept { return pos_; }

private:
    char advance()
    {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space_and_comments()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text), lexer_(text) { cur_ = lexer_.next(); }

    std::vector<IdentityRecord> catalogue()
    {
        std::vector<IdentityRecord> out;
        std::set<std::string> seen;
        while (cur_.kind != Tok::end) {
            const Token start = cur_;
            auto rec = record();
            if (!seen.insert(rec.id).second) {
                throw ParseError("duplicate identity id '" + rec.id + "'", start.line, start.column);
            }
            out.push_back(std::move(rec));
        }
        return out;
    }

    Relation relation_only()
    {
        auto r = relation_equation();
        expect_end();
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& message, const Token& at) const
    {
        throw ParseError(message, at.line, at.column);
    }

    std::string describe(const Token& t) const
    {
        switch (t.kind) {
        case Tok::end: return "end of input";
        case Tok::string: return "string \"" + t.text + "\"";
        default: return "'" + t.text + "'";
        }
    }

    Token take()
    {
        Token t = cur_;
        cur_ = lexer_.next();
        return t;
    }

    bool at_punct(char c) const { return cur_.kind == Tok::punct && cur_.text[0] == c; }
    bool at_word(std::string_view w) const { return cur_.kind == Tok::ident && cur_.text == w; }

    void expect_punct(char c)
    {
        if (!at_punct(c)) fail(std::string("expected '") + c + "', found " + describe(cur_), cur_);
        take();
    }

    void expect_word(std::string_view w)
    {
        if (!at_word(w)) fail("expected '" + std::string(w) + "', found " + describe(cur_), cur_);
        take();
    }

    void expect_end()
    {
        if (cur_.kind != Tok::end) fail("unexpected " + describe(cur_), cur_);
    }

    long integer()
    {
        if (cur_.kind != Tok::integer) fail("expected an integer, found " + describe(cur_), cur_);
        const Token t = take();
        try {
            return std::stol(t.text);
        } catch (const std::out_of_range&) {
            fail("integer out of range", t);
        }
    }

    /// ^e, ^-e, ^(e), ^(-e) and, when allowed, ^(a/b).
    Rational exponent(bool allow_fraction)
    {
        const Token at = cur_;
        if (at_punct('(')) {
            take();
            const bool negative = at_punct('-') ? (take(), true) : false;
            Rational r(integer());
            if (at_punct('/')) {
                if (!allow_fraction) fail("fractional exponent not allowed here", cur_);
                take();
                const long d = integer();
                if (d == 0) fail("zero denominator", at);
                r = Rational(r.get_num(), mpz_class(d));
                r.canonicalize();
            }
            expect_punct(')');
            return negative ? Rational(-r) : r;
        }
        const bool negative = at_punct('-') ? (take(), true) : false;
        Rational r(integer());
        return negative ? Rational(-r) : r;
    }

    IdentityRecord record()
    {
        expect_word("identity");
        if (cur_.kind != Tok::ident) fail("expected an identity id, found " + describe(cur_), cur_);
        IdentityRecord rec;
        rec.id = take().text;
        expect_punct('{');
        expect_word("P");
        expect_punct('=');
        rec.P = eta_quotient();
        expect_punct(';');
        expect_word("Q");
        expect_punct('=');
        rec.Q = eta_quotient();
        expect_punct(';');
        expect_word("relation");
        expect_punct(':');
        const std::size_t begin = cur_.offset;
        rec.relation = relation_equation();
        rec.relation_text = normalize_space(text_.substr(begin, cur_.offset - begin));
        expect_punct(';');
        expect_word("source");
        expect_punct(':');
        if (cur_.kind != Tok::string) fail("expected a quoted source tag, found " + describe(cur_), cur_);
        rec.source = take().text;
        if (at_punct(';')) take();
        expect_punct('}');
        return rec;
    }

    static std::string normalize_space(std::string_view s)
    {
        std::string out;
        bool pending = false;
        for (const char c : s) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                pending = !out.empty();
            } else {
                if (pending) out += ' ';
                pending = false;
                out += c;
            }
        }
        return out;
    }

    // eta := factor (('*' | '/') factor)*
    EtaQuotient eta_quotient()
    {
        EtaQuotient acc = eta_factor();
        while (at_punct('*') || at_punct('/')) {
            const bool divide = take().text == "/";
            const EtaQuotient rhs = eta_factor();
            acc = acc * (divide ? rhs.inverse() : rhs);
        }
        return acc;
    }

    EtaQuotient eta_factor()
    {
        const Token at = cur_;
        try {
            if (cur_.kind == Tok::integer) {
                if (integer() != 1) fail("only the constant 1 may appear in an eta quotient", at);
                return {};
            }
            if (at_word("q")) {
                take();
                Rational e = 1;
                if (at_punct('^')) {
                    take();
                    e = exponent(true);
                }
                return EtaQuotient({}, e);
            }
            if (at_word("f") || at_word("fp")) {
                const bool plus = take().text == "fp";
                expect_punct('(');
                const Token k_at = cur_;
                const long k = integer();
                if (k <= 0) fail("eta argument must be a positive integer", k_at);
                expect_punct(')');
                long e = 1;
                if (at_punct('^')) {
                    take();
                    e = to_long(exponent(false));
                }
                return EtaQuotient({{static_cast<unsigned long>(k), plus, e}}, 0);
            }
            if (at_punct('(')) {
                take();
                EtaQuotient inner = eta_quotient();
                expect_punct(')');
                return inner;
            }
        } catch (const std::invalid_argument& e) {
            fail(e.what(), at);
        }
        fail("unknown symbol " + describe(cur_) + " in eta quotient", cur_);
    }

    // relation := expr '=' expr
    Relation relation_equation()
    {
        const Token start = cur_;
        Relation lhs = expr();
        if (!at_punct('=')) fail("relation must be an equation 'lhs = rhs'", at_punct(';') || cur_.kind == Tok::end ? start : cur_);
        take();
        Relation rhs = expr();
        const Relation diff = lhs - rhs;
        if (diff.is_zero()) fail("relation is trivially true", start);
        return normalize_relation(diff);
    }

    Relation expr()
    {
        Relation acc = term();
        while (at_punct('+') || at_punct('-')) {
            const bool minus = take().text == "-";
            const Relation rhs = term();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    Relation term()
    {
        Relation acc = unary();
        while (at_punct('*') || at_punct('/')) {
            const Token op = take();
            const Relation rhs = unary();
            if (op.text == "*") {
                acc = acc * rhs;
            } else {
                if (rhs.is_zero()) fail("division by zero", op);
                if (!rhs.is_monomial()) fail("relation is not polynomial after clearing denominators (division by a sum)", op);
                acc = acc * rhs.monomial_inverse();
            }
        }
        return acc;
    }

    Relation unary()
    {
        if (at_punct('-')) {
            take();
            return -unary();
        }
        if (at_punct('+')) {
            take();
            return unary();
        }
        return power();
    }

    Relation power()
    {
        Relation base = atom();
        if (at_punct('^')) {
            const Token at = take();
            const Rational e = exponent(false);
            if (e < 0 && !base.is_monomial()) fail("negative power of a sum is not polynomial", at);
            base = base.pow(to_long(e));
        }
        return base;
    }

    Relation atom()
    {
        if (cur_.kind == Tok::integer) return Relation::constant(Rational(integer()));
        if (at_word("P")) {
            take();
            return Relation::x();
        }
        if (at_word("Q")) {
            take();
            return Relation::y();
        }
        if (at_punct('(')) {
            take();
            Relation inner = expr();
            expect_punct(')');
            return inner;
        }
        fail("unknown symbol " + describe(cur_) + " in relation", cur_);
    }

    std::string_view text_;
    Lexer lexer_;
    Token cur_;
};

std::string q_power_term(long e)
{
    return e == 1 ? "" : "^" + std::to_string(e);
}

} // namespace

Relation normalize_relation(const Relation& r)
{
    const Relation cleared = r.cleared();
    if (cleared.is_zero()) return cleared;
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& [e, c] : cleared.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    // Leading term: highest total degree, then highest power of P.
    const auto lead = std::max_element(cleared.terms().begin(), cleared.terms().end(), [](const auto& a, const auto& b) {
        const long da = a.first.first + a.first.second;
        const long db = b.first.first + b.first.second;
        return da != db ? da < db : a.first.first < b.first.first;
    });
    if (lead->second < 0) scale = -scale;
    return Relation::constant(scale) * cleared;
}

std::vector<IdentityRecord> parse_catalogue(std::string_view text)
{
    return Parser(text).catalogue();
}

std::vector<IdentityRecord> load_catalogue(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalogue " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_catalogue(buffer.str());
}

const std::vector<IdentityRecord>& builtin_catalogue()
{
    static const std::vector<IdentityRecord> records = parse_catalogue(embedded::identities);
    return records;
}

Relation parse_relation(std::string_view text)
{
    return Parser(text).relation_only();
}

std::string render_relation(const Relation& r)
{
    std::string out;
    // Highest total degree first, matching the usual way of writing polynomials.
    std::vector<std::pair<Relation::Exponents, Rational>> terms(r.terms().begin(), r.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const long da = a.first.first + a.first.second;
        const long db = b.first.first + b.first.second;
        return da != db ? da > db : a.first.first > b.first.first;
    });
    for (const auto& [e, c] : terms) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::string mono;
        if (e.first != 0) mono += "P" + q_power_term(e.first);
        if (e.second != 0) mono += (mono.empty() ? "" : "*") + std::string("Q") + q_power_term(e.second);
        if (mono.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += (mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")") + "*";
            out += mono;
        }
    }
    return (out.empty() ? "0" : out) + " = 0";
}

std::string render(const IdentityRecord& record)
{
    std::string out = "identity " + record.id + " {\n";
    out += "  P = " + render(record.P) + ";\n";
    out += "  Q = " + render(record.Q) + ";\n";
    out += "  relation: " + record.relation_text + ";\n";
    out += "  source: \"" + record.source + "\"\n}\n";
    return out;
}

std::string render_catalogue(const std::vector<IdentityRecord>& records)
{
    std::string out;
    for (const auto& r : records) {
        if (!out.empty()) out += "\n";
        out += render(r);
    }
    return out;
}

const IdentityRecord& find_identity(const std::vector<IdentityRecord>& catalogue, std::string_view id)
{
    for (const auto& r : catalogue) {
        if (r.id == id) return r;
    }
    throw std::out_of_range("unknown identity '" + std::string(id) + "'");
}

IdentityRecord with_relation(const IdentityRecord& record, std::string_view relation_text)
{
    IdentityRecord out = record;
    out.relation = parse_relation(relation_text);
    std::istringstream words{std::string(relation_text)};
    out.relation_text.clear();
    for (std::string w; words >> w;) out.relation_text += (out.relation_text.empty() ? "" : " ") + w;
    return out;
}

IdentityRecord perturb_coefficient(const IdentityRecord& record, long a, long b, const Rational& delta)
{
    IdentityRecord out = record;
    out.relation = normalize_relation(record.relation + Relation::monomial(delta, a, b));
    out.relation_text = render_relation(out.relation);
    return out;
}

} // namespace thetakit
