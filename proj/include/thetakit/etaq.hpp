#pragma once

#include <string>
#include <vector>

#include "thetakit/bignum.hpp"
#include "thetakit/catalogue.hpp"
#include "thetakit/exactseries.hpp"

namespace thetakit {

/// A relation value together with its acceptance threshold. pass holds iff
/// |value| plus its error bound is at most the tolerance.
struct Residual
{
    RealValue value;
    BigFloat tolerance;
    bool pass = false;
};

Residual make_residual(const RealValue& value, const BigFloat& tolerance);

/// Probe points used by the identity suite: 0.01, 0.05, 0.1 and 0.2.
const std::vector<std::string>& standard_probes();

/// The odd part of the largest level occurring in P or Q; the record's
/// natural evaluation point is nome(1, degree).
unsigned long natural_degree(const IdentityRecord& record);

/// Exact series of an eta quotient, known through `relative_order` lattice
/// steps past its leading term.
PowerSeries eta_series(const EtaQuotient& expr, long relative_order);

/// Evaluates the cleared relation at P(q), Q(q). The residual is divided by
/// the largest monomial magnitude; tolerance is 10^-(target_digits - 15).
/// Requires target_digits >= 40.
Residual verify_numeric(const IdentityRecord& record, const RealValue& q, const PrecisionSpec& prec);

/// Expands the cleared relation in exact series arithmetic and checks that
/// every coefficient vanishes through `order` lattice steps past the lowest
/// monomial's leading exponent.
SeriesCheck verify_series(const IdentityRecord& record, long order);

/// The degree-13 multiplier equations for
///   alpha = 16 q psi^4(q^2) / phi^4(q),  1 - alpha = phi^4(-q) / phi^4(q),
///   beta likewise at q^13,               m = phi^2(q) / phi^2(q^13).
struct Multiplier13Check
{
    /// m = (b/a)^(1/4) + ((1-b)/(1-a))^(1/4) - (b(1-b)/(a(1-a)))^(1/4) - 4 (b(1-b)/(a(1-a)))^(1/6)
    Residual modulus_equation;
    /// The same with alpha and beta exchanged equals 13/m.
    Residual reciprocal_equation;
    /// Product of both right-hand sides minus 13.
    Residual product;
    RealValue multiplier;

    bool pass() const noexcept { return modulus_equation.pass && reciprocal_equation.pass && product.pass; }
};

Multiplier13Check verify_multiplier13(const RealValue& q, const PrecisionSpec& prec);

} // namespace thetakit
