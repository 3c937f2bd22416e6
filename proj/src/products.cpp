#include "thetakit/products.hpp"

#include <functional>

namespace thetakit {

namespace {

struct FormValue
{
    std::string name;
    RealValue value;
};

using FormSet = std::function<std::vector<FormValue>(const RealValue& q, const PrecisionSpec&)>;

/// x^k for rational k > 0 as a RealValue argument of the theta blocks.
RealValue power_arg(const RealValue& q, const Rational& k)
{
    return k == 1 ? q : pow(q, k);
}

ProductValue evaluate_product(ProductKind kind, const Rational& m, const Rational& n, const PrecisionSpec& prec,
                              const FormSet& forms)
{
    if (m <= 0 || n <= 0) throw std::invalid_argument("m and n must be positive");
    prec.validate();
    ProductValue out{m, n, kind, RealValue(), {}};
    out.value = evaluate_certified(prec, [&](const PrecisionSpec& working) {
        const RealValue q = nome(m, n, working).q;
        const auto values = forms(q, working);
        const RealValue& reference = values.front().value;
        const BigFloat slack = working.tolerance() * max(BigFloat(1L), abs(reference.value()));
        out.forms_checked.clear();
        for (const auto& f : values) {
            const BigFloat gap = abs(f.value.value() - reference.value());
            if (gap > f.value.error() + reference.error() + slack) {
                throw FormMismatch(std::string(kind == ProductKind::a ? "a" : "b") + "_{" + to_string(m) + "," +
                                   to_string(n) + "}: form " + f.name + " differs from " + values.front().name +
                                   " by " + gap.to_string(5));
            }
            out.forms_checked.push_back(f.name);
        }
        return reference;
    });
    return out;
}

} // namespace

ProductValue a_numeric(const Rational& m, const Rational& n, const PrecisionSpec& prec)
{
    return evaluate_product(ProductKind::a, m, n, prec, [&n](const RealValue& q, const PrecisionSpec& p) {
        const auto block = [&](Block b, const Rational& k) { return eval_block_at(b, power_arg(q, k), p); };
        const RealValue N = RealValue::from_rational(n);
        const RealValue lead = N * pow(q, Rational((n - 1) / 4));
        const auto square = [](const RealValue& x) { return x * x; };

        const RealValue def = lead * square(block(Block::psi_plus, n) * block(Block::phi_minus, 2 * n)) /
                              square(block(Block::psi_plus, 1) * block(Block::phi_minus, 2));
        const RealValue alt = lead * square(block(Block::psi_minus, n) * block(Block::phi_plus, n)) /
                              square(block(Block::psi_minus, 1) * block(Block::phi_plus, 1));
        const RealValue root = block(Block::f_plus, 1) * block(Block::f_minus, 2) /
                               (pow(q, Rational((n - 1) / 8)) * block(Block::f_plus, n) * block(Block::f_minus, 2 * n));
        const RealValue eta = N / square(root);
        return std::vector<FormValue>{{"theta_quotient", def}, {"alternative_theta_quotient", alt}, {"eta_quotient", eta}};
    });
}

ProductValue b_numeric(const Rational& m, const Rational& n, const PrecisionSpec& prec)
{
    return evaluate_product(ProductKind::b, m, n, prec, [&n](const RealValue& q, const PrecisionSpec& p) {
        const auto block = [&](Block b, const Rational& k) { return eval_block_at(b, power_arg(q, k), p); };
        const auto square = [](const RealValue& x) { return x * x; };
        const RealValue N = RealValue::from_rational(n);
        const RealValue def = N * pow(q, Rational((n - 1) / 4)) *
                              square(block(Block::psi_plus, n) * block(Block::phi_minus, n)) /
                              square(block(Block::psi_plus, 1) * block(Block::phi_minus, 1));
        const RealValue root = block(Block::f_minus, 1) * block(Block::f_minus, 2) /
                               (pow(q, Rational((n - 1) / 8)) * block(Block::f_minus, n) * block(Block::f_minus, 2 * n));
        return std::vector<FormValue>{{"theta_quotient", def}, {"eta_quotient", N / square(root)}};
    });
}

} // namespace thetakit
