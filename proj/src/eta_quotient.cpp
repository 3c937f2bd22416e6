#include "thetakit/eta_quotient.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace thetakit {

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors, Rational q_power) : q_power_(std::move(q_power))
{
    q_power_.canonicalize();
    if (24 % q_power_.get_den() != 0) {
        throw std::invalid_argument("q-power " + to_string(q_power_) + " is not a multiple of 1/24");
    }
    std::map<std::pair<unsigned long, bool>, long> merged;
    for (const auto& f : factors) {
        if (f.k == 0) throw std::invalid_argument("eta factor with k = 0");
        merged[{f.k, f.plus}] += f.exponent;
    }
    for (const auto& [key, e] : merged) {
        if (e != 0) factors_.push_back({key.first, key.second, e});
    }
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& rhs) const
{
    auto all = factors_;
    all.insert(all.end(), rhs.factors_.begin(), rhs.factors_.end());
    return EtaQuotient(std::move(all), q_power_ + rhs.q_power_);
}

EtaQuotient EtaQuotient::inverse() const
{
    auto inv = factors_;
    for (auto& f : inv) f.exponent = -f.exponent;
    return EtaQuotient(std::move(inv), -q_power_);
}

std::string render(const EtaQuotient& expr)
{
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += " * ";
        out += piece;
    };
    if (expr.q_power() != 0) {
        const auto& p = expr.q_power();
        if (p == 1) {
            append("q");
        } else if (p.get_den() == 1 && p > 0) {
            append("q^" + to_string(p));
        } else {
            append("q^(" + to_string(p) + ")");
        }
    }
    for (const auto& f : expr.factors()) {
        std::string piece = std::string(f.plus ? "fp(" : "f(") + std::to_string(f.k) + ")";
        if (f.exponent < 0) {
            piece += "^(" + std::to_string(f.exponent) + ")";
        } else if (f.exponent != 1) {
            piece += "^" + std::to_string(f.exponent);
        }
        append(piece);
    }
    return out.empty() ? "1" : out;
}

} // namespace thetakit
