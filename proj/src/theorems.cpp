#include "thetakit/theorems.hpp"

#include <algorithm>
#include <cmath>

#include "thetakit/corollaries.hpp"
#include "thetakit/invariants.hpp"
#include "thetakit/products.hpp"

namespace thetakit {

std::string_view to_string(Family f) noexcept
{
    switch (f) {
    case Family::n3: return "n3";
    case Family::n5: return "n5";
    case Family::n7: return "n7";
    case Family::n13: return "n13";
    }
    return "?";
}

long degree(Family f) noexcept
{
    switch (f) {
    case Family::n3: return 3;
    case Family::n5: return 5;
    case Family::n7: return 7;
    case Family::n13: return 13;
    }
    return 0;
}

std::optional<Family> family_for_degree(const Rational& n)
{
    for (const auto f : {Family::n3, Family::n5, Family::n7, Family::n13}) {
        if (n == degree(f)) return f;
    }
    return std::nullopt;
}

std::string_view to_string(LambdaSource s) noexcept
{
    switch (s) {
    case LambdaSource::closed_form: return "closed_form";
    case LambdaSource::companion: return "companion";
    case LambdaSource::numeric_only: return "numeric_only";
    }
    return "?";
}

namespace {

std::string g_name(const Rational& n)
{
    return "g_" + to_string(n);
}

/// Collects invariant values and records how each was obtained.
class InvariantSource
{
public:
    InvariantSource(const Registry& registry, const PrecisionSpec& prec, bool allow_numeric)
        : registry_(registry), prec_(prec), allow_numeric_(allow_numeric)
    {
    }

    std::optional<RealValue> closed(const Rational& n)
    {
        const auto entry = registry_.lookup(InvariantKind::g, n);
        if (!entry) return std::nullopt;
        note(g_name(n) + ": registry", LambdaSource::closed_form);
        return eval_radical(entry->closed_form, prec_);
    }

    std::optional<RealValue> closed_product(const Rational& n1, const Rational& n2)
    {
        const auto entry = registry_.lookup_product(n1, n2);
        if (!entry) return std::nullopt;
        note(g_name(n1) + "*" + g_name(n2) + ": registry", LambdaSource::closed_form);
        return eval_radical(entry->closed_form, prec_);
    }

    RealValue numeric(const Rational& n)
    {
        if (!allow_numeric_) throw InvariantUnavailable("no closed form for " + g_name(n));
        note(g_name(n) + ": definition", LambdaSource::numeric_only);
        return g_numeric(n, prec_);
    }

    RealValue any(const Rational& n)
    {
        if (auto v = closed(n)) return *v;
        return numeric(n);
    }

    void note(std::string line, LambdaSource s)
    {
        construction.push_back(std::move(line));
        source = std::max(source, s);
    }

    std::vector<std::string> construction;
    LambdaSource source = LambdaSource::closed_form;

private:
    const Registry& registry_;
    const PrecisionSpec& prec_;
    bool allow_numeric_;
};

/// g_{km} and g_{m/k} via registry, then the companion relation for k when
/// one exists (seeded by the registry value of g_{km}), then definitions.
std::pair<RealValue, RealValue> invariant_pair(InvariantSource& src, long k, const Rational& m,
                                               const PrecisionSpec& prec)
{
    const Rational hi = k * m;
    const Rational lo = m / k;
    const auto top = src.closed(hi);
    auto bottom = src.closed(lo);
    if (top && !bottom && (k == 3 || k == 13)) {
        const Companion rel = k == 3 ? Companion::triple3 : Companion::deg13;
        const auto sol = solve_companion(rel, *top, m, prec);
        src.note(g_name(lo) + ": " + std::string(to_string(rel)) + " from " + g_name(hi), LambdaSource::companion);
        bottom = sol.value;
    }
    return {top ? *top : src.numeric(hi), bottom ? *bottom : src.numeric(lo)};
}

} // namespace

LambdaValue lambda_value(Family family, const Rational& m, const PrecisionSpec& prec, const Registry& registry,
                         bool allow_numeric)
{
    if (m <= 0) throw std::invalid_argument("m must be positive");
    prec.validate();
    InvariantSource src(registry, prec, allow_numeric);
    LambdaValue out;
    out.family = family;
    out.m = m;

    WorkingPrecision wp(prec.working_digits());
    switch (family) {
    case Family::n3: {
        std::optional<RealValue> product = src.closed_product(3 * m, m / 3);
        if (!product) {
            const auto top = registry.lookup(InvariantKind::g, 3 * m);
            const auto bottom = registry.lookup(InvariantKind::g, m / 3);
            const Rational n = m / 12;
            const auto y = registry.lookup_product(n, 9 * n);
            if (!top && !bottom && y) {
                // X = g_{4n} g_{36n} from the quartic relation with Y = g_n g_{9n} known.
                const RealValue Y = src.closed_product(n, 9 * n).value();
                product = solve_companion(Companion::quad4_36, Y, n, prec).value;
                src.note(g_name(3 * m) + "*" + g_name(m / 3) + ": quad4_36 at n = " + to_string(n),
                         LambdaSource::companion);
            } else {
                const auto [hi, lo] = invariant_pair(src, 3, m, prec);
                product = hi * lo;
            }
        }
        out.value = pow(sqrt(RealValue(2L)) * *product, 3L);
        break;
    }
    case Family::n5: {
        const auto [hi, lo] = invariant_pair(src, 5, m, prec);
        out.value = pow(hi / lo, 3L);
        break;
    }
    case Family::n7: {
        const auto [hi, lo] = invariant_pair(src, 7, m, prec);
        out.value = pow(hi / lo, 2L);
        break;
    }
    case Family::n13: {
        const auto [hi, lo] = invariant_pair(src, 13, m, prec);
        out.value = hi / lo;
        break;
    }
    }
    out.source = src.source;
    out.construction = std::move(src.construction);
    return out;
}

namespace {

/// A z^2 + B z + C = 0 with A possibly identically zero.
struct Quadratic
{
    RealValue A;
    RealValue B;
    RealValue C;
    bool linear = false;
};

struct FamilyEquations
{
    bool square_root_unknowns;
    Quadratic ratio;
    Quadratic product;
};

FamilyEquations equations(Family f, const RealValue& L)
{
    const RealValue l = L - RealValue(1L) / L;
    const auto P = [&l](long k) { return pow(l, k); };
    const auto c = [](long v) { return RealValue(v); };
    switch (f) {
    case Family::n3:
        return {false,
                {c(0), c(1), -L, true},
                {c(0), c(9) * L, -(pow(L, 4L) + c(11) * pow(L, 2L) - c(8)), true}};
    case Family::n5:
        return {true,
                {c(1), -l, c(4)},
                {c(25), -(c(5) * (P(3) - c(6) * l)), -(P(4) - c(37) * P(2) - c(64))}};
    case Family::n7:
        return {false,
                {c(1), -(P(3) - c(5) * l), c(8) * P(2)},
                {c(2401),
                 -(c(49) * (P(9) - c(7) * P(7) - c(37) * P(5) + c(77) * P(3) + c(294) * l)),
                 -(P(12) - c(20) * P(10) + c(86) * P(8) - c(2065) * P(6) - c(16317) * P(4) - c(22981) * P(2))}};
    case Family::n13:
        return {true,
                {c(1), -(P(3) - l), c(4) * P(2) + c(4)},
                {c(169),
                 -(c(13) * (P(9) + P(7) - c(21) * P(5) - c(35) * P(3) + c(30) * l)),
                 -(P(12) - c(4) * P(10) - c(26) * P(8) - c(89) * P(6) - c(829) * P(4) - c(1821) * P(2) - c(576))}};
    }
    throw std::logic_error("unknown family");
}

std::vector<RealValue> roots(const Quadratic& q)
{
    if (q.linear) return {-q.C / q.B};
    const RealValue disc = q.B * q.B - RealValue(4L) * q.A * q.C;
    if (disc.upper().sign() < 0) return {};
    const RealValue s = disc.certainly_positive() ? sqrt(disc) : RealValue(0L);
    // Stable pair: t = -(B + sign(B) sqrt(disc)) / 2, roots t/A and C/t.
    const RealValue t = q.B.value().sign() >= 0 ? -(q.B + s) / RealValue(2L) : (s - q.B) / RealValue(2L);
    if (!t.certainly_nonzero()) return {-q.B / (RealValue(2L) * q.A)};
    return {t / q.A, q.C / t};
}

RealValue select(const std::vector<RealValue>& candidates, double bootstrap, const char* what)
{
    std::vector<double> approx;
    for (const auto& c : candidates) approx.push_back(c.to_double());
    const auto best = std::min_element(approx.begin(), approx.end(), [bootstrap](double a, double b) {
        return std::abs(a - bootstrap) < std::abs(b - bootstrap);
    });
    if (best == approx.end() || std::abs(*best - bootstrap) > 1e-10 * std::max(1.0, std::abs(bootstrap))) {
        throw PairSelectionError(std::string("no root of the ") + what + " equation matches the bootstrap value " +
                                     std::to_string(bootstrap),
                                 approx, bootstrap);
    }
    return candidates[static_cast<std::size_t>(best - approx.begin())];
}

Residual back_substitute(const Quadratic& q, const RealValue& z, const PrecisionSpec& prec)
{
    const RealValue t2 = q.A * z * z;
    const RealValue t1 = q.B * z;
    const BigFloat scale = max(max(abs(t2.value()), abs(t1.value())), abs(q.C.value()));
    return make_residual((t2 + t1 + q.C) / RealValue(scale, BigFloat(0L)), prec.tolerance(15));
}

} // namespace

SolvedPair solve_pair(const LambdaValue& lambda, const PrecisionSpec& prec)
{
    prec.validate();
    const Rational n(degree(lambda.family));
    const Rational& m = lambda.m;

    const PrecisionSpec boot{20, 19};
    const double a0 = a_numeric(m, n, boot).value.to_double();
    const double b0 = b_numeric(4 * m, n, boot).value.to_double();

    WorkingPrecision wp(prec.working_digits());
    const FamilyEquations eq = equations(lambda.family, lambda.value);
    const bool sq = eq.square_root_unknowns;
    const double r0 = sq ? std::sqrt(a0 / b0) : a0 / b0;
    const double p0 = sq ? std::sqrt(a0 * b0) : a0 * b0;

    SolvedPair out;
    out.ratio_candidates = roots(eq.ratio);
    out.product_candidates = roots(eq.product);
    out.ratio_root = select(out.ratio_candidates, r0 - 1 / r0, "ratio");
    out.product_root = select(out.product_candidates, 1 / p0 - p0, "product");

    // r - 1/r = z and 1/p - p = w, positive branches.
    const RealValue four(4L);
    const RealValue two(2L);
    const RealValue& z = out.ratio_root;
    const RealValue& w = out.product_root;
    const RealValue r = (z + sqrt(z * z + four)) / two;
    const RealValue p = (sqrt(w * w + four) - w) / two;
    if (sq) {
        out.a_value = r * p;
        out.b_value = p / r;
    } else {
        out.a_value = sqrt(r * p);
        out.b_value = sqrt(p / r);
    }

    // Recompute the unknowns from the recovered a and b.
    const RealValue rr = sq ? sqrt(out.a_value / out.b_value) : out.a_value / out.b_value;
    const RealValue pp = sq ? sqrt(out.a_value * out.b_value) : out.a_value * out.b_value;
    out.ratio_residual = back_substitute(eq.ratio, rr - RealValue(1L) / rr, prec);
    out.product_residual = back_substitute(eq.product, RealValue(1L) / pp - pp, prec);
    return out;
}

bool ReproductionReport::three_way(int digits) const noexcept
{
    return pipeline && closed_form && direct && pipeline_vs_closed >= digits && pipeline_vs_direct >= digits &&
           closed_vs_direct >= digits;
}

ReproductionReport reproduce_corollary(const CorollaryRecord& record, const PrecisionSpec& prec,
                                       const Registry& registry)
{
    ReproductionReport rep;
    rep.id = record.id;
    const int cap = prec.target_digits;

    try {
        rep.closed_form = eval_radical(record.expr, prec);
    } catch (const std::exception& e) {
        rep.missing.push_back(std::string("closed form: ") + e.what());
    }

    if (record.target == TargetKind::equal) {
        rep.missing.push_back("pipeline: equality records have no pipeline");
        rep.missing.push_back("direct: equality records have no definitional value");
        return rep;
    }

    try {
        rep.direct = target_numeric(record.target, record.m, record.n, prec);
    } catch (const std::exception& e) {
        rep.missing.push_back(std::string("direct: ") + e.what());
    }

    const auto family = family_for_degree(record.n);
    // b_{m,n} records come out of the pipeline as b_{4m',n} with m' = m/4.
    const Rational m = record.target == TargetKind::b ? Rational(record.m / 4) : record.m;
    if (!family) {
        rep.missing.push_back("pipeline: no evaluation family for degree " + to_string(record.n));
    } else {
        try {
            rep.lambda = lambda_value(*family, m, prec, registry);
            rep.pair = solve_pair(*rep.lambda, prec);
            WorkingPrecision wp(prec.working_digits());
            rep.pipeline = record.target == TargetKind::b ? rep.pair->b_value
                                                          : combine_target(record.target, rep.pair->a_value, rep.pair->b_value);
        } catch (const std::exception& e) {
            rep.missing.push_back(std::string("pipeline: ") + e.what());
        }
    }

    const auto agree = [cap](const std::optional<RealValue>& x, const std::optional<RealValue>& y) {
        return x && y ? digits_agreement(x->value(), y->value(), cap) : -1;
    };
    rep.pipeline_vs_closed = agree(rep.pipeline, rep.closed_form);
    rep.pipeline_vs_direct = agree(rep.pipeline, rep.direct);
    rep.closed_vs_direct = agree(rep.closed_form, rep.direct);
    return rep;
}

} // namespace thetakit
