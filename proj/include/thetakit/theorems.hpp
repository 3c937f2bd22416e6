#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thetakit/bignum.hpp"
#include "thetakit/etaq.hpp"
#include "thetakit/registry.hpp"

namespace thetakit {

/// Evaluation families for a_{m,n} and b_{4m,n}, by degree n.
///   n3:  Lambda = (sqrt(2) g_{3m} g_{m/3})^3
///   n5:  Lambda = (g_{5m} / g_{m/5})^3
///   n7:  Lambda = (g_{7m} / g_{m/7})^2
///   n13: Lambda = g_{13m} / g_{m/13}
enum class Family { n3, n5, n7, n13 };

std::string_view to_string(Family f) noexcept;
long degree(Family f) noexcept;
std::optional<Family> family_for_degree(const Rational& n);

enum class LambdaSource {
    closed_form,   ///< every invariant came from registry closed forms
    companion,     ///< at least one invariant was solved from a companion relation
    numeric_only,  ///< at least one invariant was evaluated from its definition
};

std::string_view to_string(LambdaSource s) noexcept;

/// Raised when an invariant needed for Lambda has no closed form and
/// definitional fallback is disabled.
class InvariantUnavailable : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct LambdaValue
{
    Family family = Family::n3;
    Rational m;
    RealValue value;
    LambdaSource source = LambdaSource::closed_form;
    /// One line per ingredient, e.g. "g_30: registry", "g_10/3: triple3 from g_30".
    std::vector<std::string> construction;
};

/// Builds Lambda from, in order of preference: registry products, registry
/// invariants, companion relations seeded by registry values, and (when
/// allowed) definitional evaluation.
LambdaValue lambda_value(Family family, const Rational& m, const PrecisionSpec& prec,
                         const Registry& registry = Registry::builtin(), bool allow_numeric = true);

struct SolvedPair
{
    RealValue a_value;  ///< a_{m,n}
    RealValue b_value;  ///< b_{4m,n}
    /// Selected root of the ratio equation (a/b - b/a for n3 and n7,
    /// sqrt(a/b) - sqrt(b/a) for n5 and n13).
    RealValue ratio_root;
    /// Selected root of the product equation (1/(ab) - ab, or the
    /// square-root version).
    RealValue product_root;
    std::vector<RealValue> ratio_candidates;
    std::vector<RealValue> product_candidates;
    Residual ratio_residual;
    Residual product_residual;
};

/// Candidate roots do not match the 20-digit definitional bootstrap.
class PairSelectionError : public std::runtime_error
{
public:
    PairSelectionError(const std::string& what, std::vector<double> candidates, double bootstrap)
        : std::runtime_error(what), candidates_(std::move(candidates)), bootstrap_(bootstrap)
    {
    }
    const std::vector<double>& candidates() const noexcept { return candidates_; }
    double bootstrap() const noexcept { return bootstrap_; }

private:
    std::vector<double> candidates_;
    double bootstrap_;
};

/// Solves the family's two equations for a_{m,n} and b_{4m,n}. Each root is
/// chosen as the candidate nearest the value implied by a_numeric and
/// b_numeric at 20 digits.
SolvedPair solve_pair(const LambdaValue& lambda, const PrecisionSpec& prec);

struct ReproductionReport
{
    std::string id;
    std::optional<LambdaValue> lambda;
    std::optional<SolvedPair> pair;
    std::optional<RealValue> pipeline;
    std::optional<RealValue> closed_form;
    std::optional<RealValue> direct;
    int pipeline_vs_closed = -1;
    int pipeline_vs_direct = -1;
    int closed_vs_direct = -1;
    /// Legs that could not be computed, with reasons.
    std::vector<std::string> missing;

    /// All three legs present and pairwise agreeing to `digits`.
    bool three_way(int digits) const noexcept;
};

/// Lambda, then solve_pair, then comparison against the closed form and
/// the direct evaluation. Unavailable legs are listed, not thrown.
ReproductionReport reproduce_corollary(const CorollaryRecord& record, const PrecisionSpec& prec,
                                       const Registry& registry = Registry::builtin());

} // namespace thetakit
