#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "thetakit/bignum.hpp"
#include "thetakit/etaq.hpp"
#include "thetakit/registry.hpp"

namespace thetakit {

/// g_n = f(-q) / (2^(1/4) q^(1/24) f(-q^2)) at q = exp(-pi sqrt(n)).
RealValue g_numeric(const Rational& n, const PrecisionSpec& prec);
/// G_n = f(q) / (2^(1/4) q^(1/24) f(-q^2)) at q = exp(-pi sqrt(n)).
RealValue G_numeric(const Rational& n, const PrecisionSpec& prec);
RealValue invariant_numeric(InvariantKind kind, const Rational& n, const PrecisionSpec& prec);

/// Polynomial relations between class invariants.
enum class Companion {
    /// x = g_{3n}, y = g_{n/3}: 2 sqrt(2) ((xy)^3 + (xy)^-3) = (x/y)^6 - (y/x)^6. Unknown y.
    triple3,
    /// X = g_{4n} g_{36n}, Y = g_n g_{9n}: X^4 - 2 X^2 Y^4 - 2 Y^2 = 0. Unknown X.
    quad4_36,
    /// x = g_{13n}, y = g_{n/13}: 8 ((xy)^6 + (xy)^-6) = D^7 - 6 D^5 + D^3 + 20 D, D = x/y - y/x. Unknown y.
    deg13,
};

std::string_view to_string(Companion c) noexcept;

/// The known quantity is the reciprocal of the unknown one (for instance
/// g_3 g_{1/3} = 1 / (g_12 g_{4/3})).
struct ReciprocalOfUnknown
{
};

using CompanionKnown = std::variant<RealValue, ReciprocalOfUnknown>;

/// No real positive root of the relation agrees with the definitional
/// bootstrap value.
class RootSelectionError : public std::runtime_error
{
public:
    RootSelectionError(const std::string& what, std::vector<double> candidates, double bootstrap)
        : std::runtime_error(what), candidates_(std::move(candidates)), bootstrap_(bootstrap)
    {
    }
    const std::vector<double>& candidates() const noexcept { return candidates_; }
    double bootstrap() const noexcept { return bootstrap_; }

private:
    std::vector<double> candidates_;
    double bootstrap_;
};

struct CompanionSolution
{
    RealValue value;
    /// Real positive roots of the relation (double precision).
    std::vector<double> candidates;
    /// The unknown evaluated from its definition at 20 digits.
    double bootstrap = 0;
    /// Relation evaluated at the refined root, normalized by its largest term.
    Residual residual;
};

/// Solves the relation for its unknown (see Companion) given the other
/// quantity. The root closest to the 20-digit definitional value is refined
/// by Newton iteration to the requested precision.
CompanionSolution solve_companion(Companion relation, const CompanionKnown& known, const Rational& n,
                                  const PrecisionSpec& prec);

/// Registry closed form against the definition.
struct InvariantCheck
{
    RealValue closed_form;
    RealValue numeric;
    int digits = 0;
    bool pass = false;
};

InvariantCheck check_invariant(const InvariantValue& entry, const PrecisionSpec& prec);
InvariantCheck check_invariant_product(const InvariantProduct& entry, const PrecisionSpec& prec);

} // namespace thetakit
