#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "thetakit/eta_quotient.hpp"
#include "thetakit/laurent.hpp"
#include "thetakit/parse_error.hpp"

namespace thetakit {

/// Relation in the symbols P (first variable) and Q (second variable).
using Relation = Laurent2<Rational>;

/// A named P-Q pair and the polynomial relation R(P, Q) = 0 it satisfies.
struct IdentityRecord
{
    std::string id;
    EtaQuotient P;
    EtaQuotient Q;
    /// The relation as written, whitespace-normalized ("lhs = rhs").
    std::string relation_text;
    /// lhs - rhs with denominators cleared: nonnegative exponents, coprime
    /// integer coefficients, positive leading coefficient.
    Relation relation;
    std::string source;

    friend bool operator==(const IdentityRecord&, const IdentityRecord&) = default;
};

/// Parses catalogue text. Throws ParseError on syntax errors, unknown
/// symbols, duplicate ids, relations without '=' and divisions by anything
/// other than a single monomial.
std::vector<IdentityRecord> parse_catalogue(std::string_view text);
std::vector<IdentityRecord> load_catalogue(const std::filesystem::path& path);
/// The catalogue compiled into the library.
const std::vector<IdentityRecord>& builtin_catalogue();

/// Parses "lhs = rhs" and returns the cleared, primitive polynomial.
Relation parse_relation(std::string_view text);
/// Scales to coprime integer coefficients with positive leading coefficient
/// after multiplying by the monomial that makes every exponent nonnegative.
Relation normalize_relation(const Relation& r);

/// Catalogue block for one record; parse_catalogue(render(r)) yields r.
std::string render(const IdentityRecord& record);
std::string render_catalogue(const std::vector<IdentityRecord>& records);
/// "3*P^2*Q - Q^4 + 9 = 0" style rendering of a polynomial relation.
std::string render_relation(const Relation& r);

/// Throws std::out_of_range naming the id when absent.
const IdentityRecord& find_identity(const std::vector<IdentityRecord>& catalogue, std::string_view id);

/// Copy whose relation text is replaced and re-parsed (negative controls).
IdentityRecord with_relation(const IdentityRecord& record, std::string_view relation_text);
/// Copy with the coefficient of P^a Q^b in the cleared relation shifted by delta.
IdentityRecord perturb_coefficient(const IdentityRecord& record, long a, long b, const Rational& delta);

} // namespace thetakit
