#include "thetakit/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include <unsupported/Eigen/Polynomials>

#include "thetakit/laurent.hpp"

namespace thetakit {

namespace {

RealValue weber(bool plus, const Rational& n, const PrecisionSpec& prec)
{
    if (n <= 0) throw std::invalid_argument("class invariant index must be positive");
    return evaluate_certified(prec, [&](const PrecisionSpec& working) {
        const RealValue q = nome(n, 1, working).q;
        const RealValue top = eval_block_at(plus ? Block::f_plus : Block::f_minus, q, working);
        const RealValue bottom = eval_block_at(Block::f_minus, q * q, working);
        return top / (pow(RealValue(2L), ratio(1, 4)) * pow(q, ratio(1, 24)) * bottom);
    });
}

} // namespace

RealValue g_numeric(const Rational& n, const PrecisionSpec& prec)
{
    return weber(false, n, prec);
}

RealValue G_numeric(const Rational& n, const PrecisionSpec& prec)
{
    return weber(true, n, prec);
}

RealValue invariant_numeric(InvariantKind kind, const Rational& n, const PrecisionSpec& prec)
{
    return kind == InvariantKind::g ? g_numeric(n, prec) : G_numeric(n, prec);
}

std::string_view to_string(Companion c) noexcept
{
    switch (c) {
    case Companion::triple3: return "triple3";
    case Companion::quad4_36: return "quad4_36";
    case Companion::deg13: return "deg13";
    }
    return "?";
}

namespace {

using Poly2 = Laurent2<BigFloat>;

/// The relation F(x, y) and which variable is unknown.
struct RelationShape
{
    Poly2 F;
    bool unknown_is_first;
};

RelationShape relation_shape(Companion c)
{
    const Poly2 x = Poly2::x();
    const Poly2 y = Poly2::y();
    const auto k = [](long v) { return Poly2::constant(BigFloat(v)); };
    switch (c) {
    case Companion::triple3: {
        const Poly2 xy = x * y;
        const Poly2 r = x * y.pow(-1);
        const Poly2 lhs = Poly2::constant(BigFloat(2L) * sqrt(BigFloat(2L))) * (xy.pow(3) + xy.pow(-3));
        return {lhs - (r.pow(6) - r.pow(-6)), false};
    }
    case Companion::quad4_36:
        return {x.pow(4) - k(2) * x.pow(2) * y.pow(4) - k(2) * y.pow(2), true};
    case Companion::deg13: {
        const Poly2 xy = x * y;
        const Poly2 D = x * y.pow(-1) - x.pow(-1) * y;
        const Poly2 lhs = k(8) * (xy.pow(6) + xy.pow(-6));
        return {lhs - (D.pow(7) - k(6) * D.pow(5) + D.pow(3) + k(20) * D), false};
    }
    }
    throw std::logic_error("unknown companion relation");
}

/// Univariate Laurent coefficients in the unknown t after substituting the
/// known quantity (or its reciprocal relation).
std::map<long, BigFloat> substitute(const RelationShape& shape, const CompanionKnown& known)
{
    std::map<long, BigFloat> out;
    for (const auto& [e, c] : shape.F.terms()) {
        const long te = shape.unknown_is_first ? e.first : e.second;
        const long ke = shape.unknown_is_first ? e.second : e.first;
        if (const auto* v = std::get_if<RealValue>(&known)) {
            auto [it, inserted] = out.try_emplace(te, BigFloat(0L));
            it->second += c * pow(v->value(), ke);
        } else {
            // known = 1/t
            auto [it, inserted] = out.try_emplace(te - ke, BigFloat(0L));
            it->second += c;
        }
    }
    return out;
}

struct PolyEval
{
    BigFloat value;
    BigFloat derivative;
    BigFloat largest_term;
};

PolyEval evaluate(const std::map<long, BigFloat>& p, const BigFloat& t)
{
    PolyEval r{BigFloat(0L), BigFloat(0L), BigFloat(0L)};
    for (const auto& [e, c] : p) {
        const BigFloat term = c * pow(t, e);
        r.value += term;
        r.largest_term = max(r.largest_term, abs(term));
        if (e != 0) r.derivative += BigFloat(e) * c * pow(t, e - 1);
    }
    return r;
}

std::vector<double> positive_real_roots(const std::map<long, BigFloat>& p)
{
    const long low = p.begin()->first;
    const long high = p.rbegin()->first;
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(high - low + 1);
    for (const auto& [e, c] : p) coeffs(e - low) = c.to_double();
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    std::vector<double> out;
    for (const std::complex<double>& z : solver.roots()) {
        if (std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z)) && z.real() > 0) out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

double bootstrap_value(Companion c, const Rational& n)
{
    const PrecisionSpec boot{20, 19};
    switch (c) {
    case Companion::triple3: return g_numeric(n / 3, boot).to_double();
    case Companion::deg13: return g_numeric(n / 13, boot).to_double();
    case Companion::quad4_36: return (g_numeric(4 * n, boot) * g_numeric(36 * n, boot)).to_double();
    }
    return 0;
}

} // namespace

CompanionSolution solve_companion(Companion relation, const CompanionKnown& known, const Rational& n,
                                  const PrecisionSpec& prec)
{
    if (n <= 0) throw std::invalid_argument("companion index must be positive");
    prec.validate();
    if (std::holds_alternative<ReciprocalOfUnknown>(known) && relation != Companion::quad4_36) {
        throw std::invalid_argument("a reciprocal known value only applies to quad4_36");
    }
    CompanionSolution out;
    out.bootstrap = bootstrap_value(relation, n);

    WorkingPrecision wp(prec.working_digits());
    const RelationShape shape = relation_shape(relation);
    const auto poly = substitute(shape, known);

    out.candidates = positive_real_roots(poly);
    const double boot = out.bootstrap;
    const auto nearest = std::min_element(out.candidates.begin(), out.candidates.end(),
                                          [boot](double a, double b) { return std::abs(a - boot) < std::abs(b - boot); });
    if (nearest == out.candidates.end() || std::abs(*nearest - boot) > 1e-6 * std::max(1.0, std::abs(boot))) {
        throw RootSelectionError(std::string(to_string(relation)) + ": no positive root agrees with the bootstrap value " +
                                     std::to_string(boot),
                                 out.candidates, boot);
    }

    BigFloat t(*nearest);
    PolyEval at = evaluate(poly, t);
    for (int iter = 0; iter < 200; ++iter) {
        if (at.derivative.is_zero()) throw RootSelectionError("selected root is not simple", out.candidates, boot);
        const BigFloat step = at.value / at.derivative;
        t -= step;
        at = evaluate(poly, t);
        if (abs(step) <= rounding_bound(t) * BigFloat(16L)) break;
    }

    // Error: Newton correction still pending, rounding, and the known value's error.
    BigFloat error = BigFloat(2L) * abs(at.value / at.derivative) + BigFloat(4L) * rounding_bound(t);
    if (const auto* v = std::get_if<RealValue>(&known)) {
        BigFloat dF_dk(0L);
        for (const auto& [e, c] : shape.F.terms()) {
            const long te = shape.unknown_is_first ? e.first : e.second;
            const long ke = shape.unknown_is_first ? e.second : e.first;
            if (ke != 0) dF_dk += BigFloat(ke) * c * pow(t, te) * pow(v->value(), ke - 1);
        }
        // First-order sensitivity with a factor 2 for the neglected curvature.
        error += BigFloat(2L) * abs(dF_dk / at.derivative) * v->error();
    }
    out.value = RealValue(t, error);
    out.residual = make_residual(RealValue(at.value / at.largest_term, rounding_bound(at.largest_term) * BigFloat(64L)),
                                 prec.tolerance(15));
    return out;
}

namespace {

InvariantCheck compare(const RealValue& closed, const RealValue& numeric, const PrecisionSpec& prec)
{
    InvariantCheck c{closed, numeric, 0, false};
    c.digits = digits_agreement(closed.value(), numeric.value(), prec.target_digits);
    c.pass = c.digits >= prec.target_digits;
    return c;
}

} // namespace

InvariantCheck check_invariant(const InvariantValue& entry, const PrecisionSpec& prec)
{
    return compare(eval_radical(entry.closed_form, prec), invariant_numeric(entry.kind, entry.index, prec), prec);
}

InvariantCheck check_invariant_product(const InvariantProduct& entry, const PrecisionSpec& prec)
{
    const RealValue product = evaluate_certified(
        prec, [&](const PrecisionSpec& p) { return g_numeric(entry.first, p) * g_numeric(entry.second, p); });
    return compare(eval_radical(entry.closed_form, prec), product, prec);
}

} // namespace thetakit
