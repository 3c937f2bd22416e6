#include "thetakit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace thetakit {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s)
{
    std::string text(s);
    if (!text.empty() && text[0] == '+') text.erase(0, 1);
    return mpz_class(text, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    const auto num = trim(s.substr(0, slash));
    if (!is_integer_literal(num)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        const auto d = trim(s.substr(slash + 1));
        if (!is_integer_literal(d)) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        den = parse_integer(d);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(parse_integer(num), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long to_long(const Rational& r)
{
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
        throw std::domain_error("expected a machine-size integer, got " + to_string(r));
    }
    return r.get_num().get_si();
}

Rational ratio(long num, long den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

} // namespace thetakit
