#include "thetakit/etaq.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace thetakit {

Residual make_residual(const RealValue& value, const BigFloat& tolerance)
{
    Residual r{value, tolerance, false};
    r.pass = abs(value.value()) + value.error() <= tolerance;
    return r;
}

const std::vector<std::string>& standard_probes()
{
    static const std::vector<std::string> probes{"0.01", "0.05", "0.1", "0.2"};
    return probes;
}

unsigned long natural_degree(const IdentityRecord& record)
{
    unsigned long level = 1;
    for (const auto* expr : {&record.P, &record.Q}) {
        for (const auto& f : expr->factors()) level = std::max(level, f.k);
    }
    while (level % 2 == 0) level /= 2;
    return level;
}

PowerSeries eta_series(const EtaQuotient& expr, long relative_order)
{
    if (relative_order < 0) throw std::invalid_argument("series order must be nonnegative");
    PowerSeries acc = PowerSeries::constant(1, relative_order);
    for (const auto& f : expr.factors()) {
        acc = acc * pow_int(series_f(f.k, f.plus ? Sign::plus : Sign::minus, relative_order), f.exponent);
    }
    const Rational lattice_shift = expr.q_power() * PowerSeries::lattice;
    return shift(acc, to_long(lattice_shift));
}

namespace {

/// Powers 0..max of a value, computed once.
template <class T, class Mul>
std::vector<T> power_table(const T& base, const T& one, long max, Mul mul)
{
    std::vector<T> out{one};
    for (long i = 1; i <= max; ++i) out.push_back(mul(out.back(), base));
    return out;
}

std::pair<long, long> max_degrees(const Relation& r)
{
    long a = 0;
    long b = 0;
    for (const auto& [e, c] : r.terms()) {
        a = std::max(a, e.first);
        b = std::max(b, e.second);
    }
    return {a, b};
}

} // namespace

Residual verify_numeric(const IdentityRecord& record, const RealValue& q, const PrecisionSpec& prec)
{
    if (prec.target_digits < 40) throw std::invalid_argument("verify_numeric requires at least 40 target digits");
    prec.validate();
    WorkingPrecision wp(prec.working_digits());
    const RealValue P = eval_eta_quotient(record.P, q, prec);
    const RealValue Q = eval_eta_quotient(record.Q, q, prec);
    if (!P.certainly_nonzero() || !Q.certainly_nonzero()) {
        throw std::logic_error("P or Q vanishes numerically for identity " + record.id);
    }
    const auto [da, db] = max_degrees(record.relation);
    const auto mul = [](const RealValue& x, const RealValue& y) { return x * y; };
    const auto p_pow = power_table(P, RealValue(1L), da, mul);
    const auto q_pow = power_table(Q, RealValue(1L), db, mul);

    RealValue sum;
    BigFloat scale(0L);
    for (const auto& [e, c] : record.relation.terms()) {
        const RealValue mono = RealValue::from_rational(c) * p_pow[e.first] * q_pow[e.second];
        scale = max(scale, abs(mono.value()));
        sum = sum + mono;
    }
    return make_residual(sum / RealValue(scale, BigFloat(0L)), prec.tolerance(15));
}

SeriesCheck verify_series(const IdentityRecord& record, long order)
{
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    const PowerSeries P = eta_series(record.P, order);
    const PowerSeries Q = eta_series(record.Q, order);
    const auto [da, db] = max_degrees(record.relation);
    const auto mul = [](const PowerSeries& x, const PowerSeries& y) { return x * y; };
    const auto one = PowerSeries::constant(1, order);
    const auto p_pow = power_table(P, one, da, mul);
    const auto q_pow = power_table(Q, one, db, mul);

    std::optional<PowerSeries> sum;
    for (const auto& [e, c] : record.relation.terms()) {
        PowerSeries mono = c * (p_pow[e.first] * q_pow[e.second]);
        sum = sum ? *sum + mono : mono;
    }
    return check_vanishes(sum ? *sum : PowerSeries(order));
}

Multiplier13Check verify_multiplier13(const RealValue& q, const PrecisionSpec& prec)
{
    prec.validate();
    WorkingPrecision wp(prec.working_digits());
    const RealValue q13 = pow(q, 13L);

    // 1 - alpha comes straight from phi(-q), not from subtracting alpha.
    struct Moduli
    {
        RealValue alpha;
        RealValue complement;
        RealValue phi_sq;
    };
    const auto moduli = [&](const RealValue& x) {
        const RealValue phi = eval_block_at(Block::phi_plus, x, prec);
        const RealValue phi_m = eval_block_at(Block::phi_minus, x, prec);
        const RealValue psi2 = eval_block_at(Block::psi_plus, x * x, prec);
        const RealValue phi4 = pow(phi, 4L);
        return Moduli{RealValue(16L) * x * pow(psi2, 4L) / phi4, pow(phi_m, 4L) / phi4, phi * phi};
    };
    const Moduli a = moduli(q);
    const Moduli b = moduli(q13);
    const RealValue m = a.phi_sq / b.phi_sq;

    const auto rhs = [](const Moduli& x, const Moduli& y) {
        const RealValue mixed = (y.alpha * y.complement) / (x.alpha * x.complement);
        return pow(y.alpha / x.alpha, ratio(1, 4)) + pow(y.complement / x.complement, ratio(1, 4)) -
               pow(mixed, ratio(1, 4)) - RealValue(4L) * pow(mixed, ratio(1, 6));
    };
    const RealValue r1 = rhs(a, b);
    const RealValue r2 = rhs(b, a);
    const BigFloat tol = prec.tolerance(15);
    return Multiplier13Check{make_residual(r1 - m, tol), make_residual(r2 - RealValue(13L) / m, tol),
                             make_residual(r1 * r2 - RealValue(13L), tol), m};
}

} // namespace thetakit
