#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetakit/radicals.hpp"
#include "thetakit/rational.hpp"

namespace thetakit {

/// What a closed-form registry value claims to equal.
enum class TargetKind {
    a,          ///< a_{m,n}
    b,          ///< b_{m,n}
    ab,         ///< a_{m,n} * b_{4m,n}
    ratio,      ///< a_{m,n} / b_{4m,n}
    sqrtratio,  ///< sqrt(a_{m,n} / b_{4m,n})
    sqrtab,     ///< sqrt(a_{m,n} * b_{4m,n})
    equal,      ///< two radical expressions with the same value
};

std::string_view to_string(TargetKind kind) noexcept;

struct CorollaryRecord
{
    std::string id;
    TargetKind target = TargetKind::a;
    Rational m;
    Rational n;
    RadicalExpr expr;
    /// Right-hand side for TargetKind::equal.
    std::optional<RadicalExpr> other;
    std::string source;
};

enum class InvariantKind { g, G };

/// A class invariant with a closed form.
struct InvariantValue
{
    InvariantKind kind = InvariantKind::g;
    Rational index;
    RadicalExpr closed_form;
    std::string source;
};

/// Closed form of the product g_{first} * g_{second}.
struct InvariantProduct
{
    Rational first;
    Rational second;
    RadicalExpr closed_form;
    std::string source;
};

/// Parsed registry. Line formats, one per line, '#' starting the source tag
/// (or a comment when it begins the line):
///
///   a <m> <n> = <expr> # <source>           likewise b, ab, ratio, sqrtratio, sqrtab
///   g <n> = <expr> # <source>               likewise G
///   gg <n1> <n2> = <expr> # <source>        product g_{n1} g_{n2}
///   equal <id>: <expr> = <expr> # <source>
class Registry
{
public:
    /// Throws ParseError with the line and column of the first problem.
    static Registry parse(std::string_view text);
    static Registry load(const std::filesystem::path& path);
    /// The registry compiled into the library.
    static const Registry& builtin();

    const std::vector<CorollaryRecord>& corollaries() const noexcept { return corollaries_; }
    const std::vector<InvariantValue>& invariants() const noexcept { return invariants_; }
    const std::vector<InvariantProduct>& products() const noexcept { return products_; }

    /// Throws std::out_of_range naming the id when absent.
    const CorollaryRecord& corollary(std::string_view id) const;
    /// A miss is an empty optional, not an error.
    std::optional<InvariantValue> lookup(InvariantKind kind, const Rational& n) const;
    /// Matches either order of the two indices.
    std::optional<InvariantProduct> lookup_product(const Rational& n1, const Rational& n2) const;

    /// Registry text for all records; parse(render()) reproduces them.
    std::string render() const;

private:
    std::vector<CorollaryRecord> corollaries_;
    std::vector<InvariantValue> invariants_;
    std::vector<InvariantProduct> products_;
};

/// "a_2_3", "ratio_10_3" and so on; '/' in rational indices is kept.
std::string corollary_id(TargetKind kind, const Rational& m, const Rational& n);

} // namespace thetakit
