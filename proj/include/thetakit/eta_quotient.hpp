#pragma once

#include <string>
#include <vector>

#include "thetakit/rational.hpp"

namespace thetakit {

/// f(-q^k)^exponent, or f(q^k)^exponent when `plus` is set.
struct EtaFactor
{
    unsigned long k = 1;
    bool plus = false;
    long exponent = 1;

    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// q^(q_power) times a product of EtaFactor powers. Factors are kept sorted
/// by (k, plus) with at most one entry per key and no zero exponents; the
/// q-power always lies on the 1/24 lattice.
class EtaQuotient
{
public:
    EtaQuotient() = default;
    /// Merges duplicate keys and drops zero exponents. Throws
    /// std::invalid_argument for k = 0 or a q-power off the 1/24 lattice.
    EtaQuotient(std::vector<EtaFactor> factors, Rational q_power);

    const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
    const Rational& q_power() const noexcept { return q_power_; }
    bool empty() const noexcept { return factors_.empty() && q_power_ == 0; }

    EtaQuotient operator*(const EtaQuotient& rhs) const;
    EtaQuotient inverse() const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::vector<EtaFactor> factors_;
    Rational q_power_ = 0;
};

/// Catalogue notation, e.g. "q^(-1/6) * f(1)^2 * f(3)^(-2)".
std::string render(const EtaQuotient& expr);

} // namespace thetakit
