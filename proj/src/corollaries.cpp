#include "thetakit/corollaries.hpp"

#include <stdexcept>
#include <vector>

#include "thetakit/products.hpp"

namespace thetakit {

RealValue combine_target(TargetKind kind, const RealValue& a, const RealValue& b4m)
{
    switch (kind) {
    case TargetKind::a: return a;
    case TargetKind::ab: return a * b4m;
    case TargetKind::ratio: return a / b4m;
    case TargetKind::sqrtratio: return sqrt(a / b4m);
    case TargetKind::sqrtab: return sqrt(a * b4m);
    default: throw std::invalid_argument("target is not built from a_{m,n} and b_{4m,n}");
    }
}

RealValue target_numeric(TargetKind kind, const Rational& m, const Rational& n, const PrecisionSpec& prec)
{
    switch (kind) {
    case TargetKind::a: return a_numeric(m, n, prec).value;
    case TargetKind::b: return b_numeric(m, n, prec).value;
    case TargetKind::equal: throw std::invalid_argument("an equality has no definitional value");
    default:
        return evaluate_certified(prec, [&](const PrecisionSpec& p) {
            return combine_target(kind, a_numeric(m, n, p).value, b_numeric(4 * m, n, p).value);
        });
    }
}

CorollaryCheck verify_corollary(const CorollaryRecord& record, const PrecisionSpec& prec)
{
    CorollaryCheck c;
    c.closed_form = eval_radical(record.expr, prec);
    c.reference = record.target == TargetKind::equal ? eval_radical(*record.other, prec)
                                                     : target_numeric(record.target, record.m, record.n, prec);
    c.digits = digits_agreement(c.closed_form.value(), c.reference.value(), prec.target_digits);
    c.pass = c.digits >= prec.target_digits;
    return c;
}

namespace {

void collect_factors(const RadicalExpr& e, std::vector<RadicalExpr>& out)
{
    if (e.kind() == RadicalExpr::Kind::mul) {
        collect_factors(e.lhs(), out);
        collect_factors(e.rhs(), out);
    } else {
        out.push_back(e);
    }
}

} // namespace

CorollaryRecord drop_factor(const CorollaryRecord& record, std::size_t index)
{
    std::vector<RadicalExpr> factors;
    collect_factors(record.expr, factors);
    if (factors.size() < 2) throw std::invalid_argument("expression of " + record.id + " is not a product");
    if (index >= factors.size()) throw std::out_of_range("factor index out of range");
    factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(index));
    CorollaryRecord out = record;
    out.expr = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out.expr = out.expr * factors[i];
    return out;
}

} // namespace thetakit
