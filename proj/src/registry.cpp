#include "thetakit/registry.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thetakit {

namespace embedded {
extern const std::string_view registry;
}

std::string_view to_string(TargetKind kind) noexcept
{
    switch (kind) {
    case TargetKind::a: return "a";
    case TargetKind::b: return "b";
    case TargetKind::ab: return "ab";
    case TargetKind::ratio: return "ratio";
    case TargetKind::sqrtratio: return "sqrtratio";
    case TargetKind::sqrtab: return "sqrtab";
    case TargetKind::equal: return "equal";
    }
    return "?";
}

std::string corollary_id(TargetKind kind, const Rational& m, const Rational& n)
{
    return std::string(to_string(kind)) + "_" + to_string(m) + "_" + to_string(n);
}

namespace {

std::optional<TargetKind> target_from_word(std::string_view w)
{
    for (const auto k : {TargetKind::a, TargetKind::b, TargetKind::ab, TargetKind::ratio, TargetKind::sqrtratio,
                         TargetKind::sqrtab, TargetKind::equal}) {
        if (to_string(k) == w) return k;
    }
    return std::nullopt;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// One registry line, with positions reported relative to the whole file.
class LineParser
{
public:
    LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

    [[noreturn]] void fail(const std::string& message, std::size_t column) const
    {
        throw ParseError(message, line_no_, column + 1);
    }

    std::string_view word()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])) && line_[pos_] != '=' &&
               line_[pos_] != ':') {
            ++pos_;
        }
        if (start == pos_) fail("expected a word", pos_);
        return line_.substr(start, pos_ - start);
    }

    Rational rational()
    {
        const std::size_t at = (skip_space(), pos_);
        const std::string_view w = word();
        try {
            const Rational r = parse_rational(w);
            if (r <= 0) fail("index must be positive", at);
            return r;
        } catch (const std::invalid_argument&) {
            fail("expected a positive rational, found '" + std::string(w) + "'", at);
        }
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    /// Radical text up to `stop` (or the end of the expression part).
    RadicalExpr expression(std::size_t end)
    {
        const std::size_t start = pos_;
        try {
            RadicalExpr e = parse_radical(line_.substr(start, end - start));
            pos_ = end;
            return e;
        } catch (const ParseError& err) {
            fail(err.message(), start + err.column() - 1);
        }
    }

    std::size_t position() const noexcept { return pos_; }
    std::string_view rest_from(std::size_t p) const { return line_.substr(p); }

private:
    void skip_space()
    {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    }

    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

} // namespace

Registry Registry::parse(std::string_view text)
{
    Registry reg;
    std::set<std::string> ids;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (trim(line).empty() || trim(line).front() == '#') continue;

        const std::size_t hash = line.find('#');
        const std::string source(hash == std::string_view::npos ? "" : trim(line.substr(hash + 1)));
        const std::size_t body_end = hash == std::string_view::npos ? line.size() : hash;

        LineParser p(line, line_no);
        const std::size_t kind_at = line.find_first_not_of(" \t");
        const std::string_view kind = p.word();

        if (kind == "g" || kind == "G") {
            InvariantValue v;
            v.kind = kind == "g" ? InvariantKind::g : InvariantKind::G;
            v.index = p.rational();
            p.expect('=');
            v.closed_form = p.expression(body_end);
            v.source = source;
            if (reg.lookup(v.kind, v.index)) p.fail("duplicate invariant entry", kind_at);
            reg.invariants_.push_back(std::move(v));
        } else if (kind == "gg") {
            InvariantProduct v;
            v.first = p.rational();
            v.second = p.rational();
            p.expect('=');
            v.closed_form = p.expression(body_end);
            v.source = source;
            if (reg.lookup_product(v.first, v.second)) p.fail("duplicate product entry", kind_at);
            reg.products_.push_back(std::move(v));
        } else if (kind == "equal") {
            CorollaryRecord r;
            r.target = TargetKind::equal;
            r.id = std::string(p.word());
            p.expect(':');
            const std::size_t eq = line.find('=', p.position());
            if (eq == std::string_view::npos || eq >= body_end) p.fail("expected '<expr> = <expr>'", p.position());
            r.expr = p.expression(eq);
            p.expect('=');
            r.other = p.expression(body_end);
            r.m = 1;
            r.n = 1;
            r.source = source;
            if (!ids.insert(r.id).second) p.fail("duplicate id '" + r.id + "'", kind_at);
            reg.corollaries_.push_back(std::move(r));
        } else if (const auto target = target_from_word(kind)) {
            CorollaryRecord r;
            r.target = *target;
            r.m = p.rational();
            r.n = p.rational();
            p.expect('=');
            r.expr = p.expression(body_end);
            r.source = source;
            r.id = corollary_id(r.target, r.m, r.n);
            if (!ids.insert(r.id).second) p.fail("duplicate id '" + r.id + "'", kind_at);
            reg.corollaries_.push_back(std::move(r));
        } else {
            p.fail("unknown record kind '" + std::string(kind) + "'", kind_at);
        }
    }
    return reg;
}

Registry Registry::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open registry " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const Registry& Registry::builtin()
{
    static const Registry reg = parse(embedded::registry);
    return reg;
}

const CorollaryRecord& Registry::corollary(std::string_view id) const
{
    for (const auto& r : corollaries_) {
        if (r.id == id) return r;
    }
    throw std::out_of_range("unknown corollary '" + std::string(id) + "'");
}

std::optional<InvariantValue> Registry::lookup(InvariantKind kind, const Rational& n) const
{
    for (const auto& v : invariants_) {
        if (v.kind == kind && v.index == n) return v;
    }
    return std::nullopt;
}

std::optional<InvariantProduct> Registry::lookup_product(const Rational& n1, const Rational& n2) const
{
    for (const auto& v : products_) {
        if ((v.first == n1 && v.second == n2) || (v.first == n2 && v.second == n1)) return v;
    }
    return std::nullopt;
}

std::string Registry::render() const
{
    std::string out;
    const auto tail = [](const std::string& source) { return source.empty() ? std::string() : " # " + source; };
    for (const auto& v : invariants_) {
        out += std::string(v.kind == InvariantKind::g ? "g " : "G ") + to_string(v.index) + " = " +
               thetakit::render(v.closed_form) + tail(v.source) + "\n";
    }
    for (const auto& v : products_) {
        out += "gg " + to_string(v.first) + " " + to_string(v.second) + " = " + thetakit::render(v.closed_form) +
               tail(v.source) + "\n";
    }
    for (const auto& r : corollaries_) {
        if (r.target == TargetKind::equal) {
            out += "equal " + r.id + ": " + thetakit::render(r.expr) + " = " + thetakit::render(*r.other);
        } else {
            out += std::string(to_string(r.target)) + " " + to_string(r.m) + " " + to_string(r.n) + " = " +
                   thetakit::render(r.expr);
        }
        out += tail(r.source) + "\n";
    }
    return out;
}

} // namespace thetakit
