#include "thetakit/suite.hpp"

#include <functional>
#include <stdexcept>

#include "thetakit/corollaries.hpp"
#include "thetakit/etaq.hpp"
#include "thetakit/invariants.hpp"
#include "thetakit/theorems.hpp"

namespace thetakit {

namespace {

using CheckFn = std::function<CheckRecord()>;

std::string residual_text(const Residual& r)
{
    return (abs(r.value.value()) + r.value.error()).to_string(3);
}

RunReport make_report(const SuiteOptions& o, std::string suite, const std::vector<CheckFn>& checks)
{
    RunReport report;
    report.suite = std::move(suite);
    report.version = std::string(toolkit_version());
    report.target_digits = o.digits;
    report.series_order = o.series_order;
    report.checks = run_checks(checks, o.threads);
    return report;
}

CheckFn numeric_identity_check(const IdentityRecord& rec, const std::string& probe, int digits)
{
    return [rec, probe, digits] {
        CheckRecord c;
        c.group = "identity";
        c.id = rec.id;
        c.source = rec.source;
        const PrecisionSpec prec = PrecisionSpec::for_digits(digits);
        WorkingPrecision wp(prec.working_digits());
        RealValue q;
        if (probe == "natural") {
            const unsigned long d = natural_degree(rec);
            q = nome(1, Rational(d), prec).q;
            c.inputs["mode"] = "numeric";
            c.inputs["q"] = "exp(-pi/sqrt(" + std::to_string(d) + "))";
        } else {
            q = RealValue::from_string(probe);
            c.inputs["mode"] = "numeric";
            c.inputs["q"] = probe;
        }
        const Residual r = verify_numeric(rec, q, prec);
        c.residual = residual_text(r);
        c.verdict = r.pass ? Verdict::pass : Verdict::fail;
        if (!r.pass) c.detail = "residual exceeds " + r.tolerance.to_string(3);
        return c;
    };
}

CheckFn series_identity_check(const IdentityRecord& rec, long order)
{
    return [rec, order] {
        CheckRecord c;
        c.group = "identity";
        c.id = rec.id;
        c.source = rec.source;
        c.inputs["mode"] = "series";
        c.inputs["order"] = order;
        const SeriesCheck s = verify_series(rec, order);
        c.verdict = s.pass ? Verdict::pass : Verdict::fail;
        c.residual = s.pass ? "0" : "nonzero";
        if (!s.pass && s.first_failure) {
            c.detail = "first nonzero coefficient at lattice exponent " + std::to_string(*s.first_failure);
        } else if (s.pass) {
            c.detail = "checked through lattice exponent " + std::to_string(s.checked_through);
        }
        return c;
    };
}

nlohmann::ordered_json corollary_inputs(const CorollaryRecord& rec)
{
    nlohmann::ordered_json j;
    j["target"] = to_string(rec.target);
    if (rec.target != TargetKind::equal) {
        j["m"] = to_string(rec.m);
        j["n"] = to_string(rec.n);
    }
    j["closed_form"] = render(rec.expr);
    if (rec.other) j["other"] = render(*rec.other);
    return j;
}

template <class Record>
std::vector<const Record*> select(const std::vector<Record>& all, const std::string& id)
{
    std::vector<const Record*> out;
    for (const auto& r : all) {
        if (id == "all" || r.id == id) out.push_back(&r);
    }
    if (out.empty()) throw std::out_of_range("unknown id '" + id + "'");
    return out;
}

CheckRecord comparison(std::string group, std::string id, nlohmann::ordered_json inputs, std::string source,
                       const RealValue& computed, const RealValue& reference, int digits)
{
    CheckRecord c;
    c.group = std::move(group);
    c.id = std::move(id);
    c.inputs = std::move(inputs);
    c.source = std::move(source);
    c.digits = digits_agreement(computed.value(), reference.value(), digits);
    c.verdict = *c.digits >= digits ? Verdict::pass : Verdict::fail;
    c.detail = "value " + computed.to_string(30);
    if (c.verdict == Verdict::fail) c.detail += ", expected " + reference.to_string(30);
    return c;
}

} // namespace

RunReport verify_identities(const SuiteOptions& o, const std::string& id)
{
    std::vector<CheckFn> checks;
    for (const IdentityRecord* rec : select(o.catalogue, id)) {
        if (o.mode != IdentityMode::series) {
            for (const auto& probe : o.probes) checks.push_back(numeric_identity_check(*rec, probe, o.digits));
        }
        if (o.mode != IdentityMode::numeric) checks.push_back(series_identity_check(*rec, o.series_order));
    }
    return make_report(o, "verify-identity", checks);
}

RunReport verify_corollaries(const SuiteOptions& o, const std::string& id)
{
    std::vector<CheckFn> checks;
    for (const CorollaryRecord* rec : select(o.registry.corollaries(), id)) {
        checks.push_back([rec = *rec, digits = o.digits] {
            const CorollaryCheck r = verify_corollary(rec, PrecisionSpec::for_digits(digits));
            return comparison("corollary", rec.id, corollary_inputs(rec), rec.source, r.closed_form, r.reference,
                              digits);
        });
    }
    return make_report(o, "verify-corollary", checks);
}

RunReport reproduce(const SuiteOptions& o, const std::string& id)
{
    std::vector<CheckFn> checks;
    for (const CorollaryRecord* rec : select(o.registry.corollaries(), id)) {
        checks.push_back([rec = *rec, digits = o.digits, registry = &o.registry] {
            CheckRecord c;
            c.group = "reproduce";
            c.id = rec.id;
            c.inputs = corollary_inputs(rec);
            c.source = rec.source;
            const ReproductionReport r = reproduce_corollary(rec, PrecisionSpec::for_digits(digits), *registry);
            std::string detail;
            if (r.lambda) {
                c.inputs["family"] = to_string(r.lambda->family);
                detail += "lambda " + std::string(to_string(r.lambda->source)) + " (";
                for (std::size_t i = 0; i < r.lambda->construction.size(); ++i) {
                    detail += (i ? "; " : "") + r.lambda->construction[i];
                }
                detail += ")";
            }
            detail += "; digits pipeline/closed " + std::to_string(r.pipeline_vs_closed) + ", pipeline/direct " +
                      std::to_string(r.pipeline_vs_direct) + ", closed/direct " + std::to_string(r.closed_vs_direct);
            for (const auto& m : r.missing) detail += "; missing " + m;
            if (r.pipeline) detail += "; pipeline " + r.pipeline->to_string(30);
            c.detail = detail;
            if (r.pipeline && r.closed_form && r.direct) {
                c.digits = std::min({r.pipeline_vs_closed, r.pipeline_vs_direct, r.closed_vs_direct});
            }
            if (r.three_way(digits)) {
                c.verdict = Verdict::pass;
            } else if (rec.target == TargetKind::equal) {
                c.verdict = Verdict::skip;
            } else {
                c.verdict = Verdict::fail;
            }
            return c;
        });
    }
    return make_report(o, "reproduce", checks);
}

namespace {

struct CompanionCase
{
    std::string id;
    Companion relation;
    Rational n;
    /// Index of the registry value seeding the solve; empty for a reciprocal.
    std::optional<Rational> known_index;
    /// Known product g_{a} g_{b} from the registry, used instead of known_index.
    std::optional<std::pair<Rational, Rational>> known_product;
};

RealValue unknown_reference(Companion c, const Rational& n, const Registry& reg, const PrecisionSpec& prec,
                            std::string& source)
{
    if (c == Companion::quad4_36) {
        if (auto p = reg.lookup_product(4 * n, 36 * n)) {
            source = "registry gg " + to_string(4 * n) + " " + to_string(36 * n);
            return eval_radical(p->closed_form, prec);
        }
        source = "definition";
        return evaluate_certified(prec, [&](const PrecisionSpec& p) { return g_numeric(4 * n, p) * g_numeric(36 * n, p); });
    }
    const Rational index = c == Companion::triple3 ? n / 3 : n / 13;
    if (auto v = reg.lookup(InvariantKind::g, index)) {
        source = "registry g " + to_string(index);
        return eval_radical(v->closed_form, prec);
    }
    source = "definition";
    return g_numeric(index, prec);
}

} // namespace

RunReport invariant_checks(const SuiteOptions& o)
{
    std::vector<CheckFn> checks;
    const Registry* reg = &o.registry;
    const int digits = o.digits;

    for (const auto& v : reg->invariants()) {
        checks.push_back([v, digits] {
            const InvariantCheck r = check_invariant(v, PrecisionSpec::for_digits(digits));
            nlohmann::ordered_json in;
            in["kind"] = v.kind == InvariantKind::g ? "g" : "G";
            in["n"] = to_string(v.index);
            in["closed_form"] = render(v.closed_form);
            return comparison("invariant", std::string(v.kind == InvariantKind::g ? "g_" : "G_") + to_string(v.index), in,
                              v.source, r.closed_form, r.numeric, digits);
        });
    }
    for (const auto& p : reg->products()) {
        checks.push_back([p, digits] {
            const InvariantCheck r = check_invariant_product(p, PrecisionSpec::for_digits(digits));
            nlohmann::ordered_json in;
            in["n1"] = to_string(p.first);
            in["n2"] = to_string(p.second);
            in["closed_form"] = render(p.closed_form);
            return comparison("invariant", "gg_" + to_string(p.first) + "_" + to_string(p.second), in, p.source,
                              r.closed_form, r.numeric, digits);
        });
    }

    const std::vector<CompanionCase> cases = {
        {"triple3_10", Companion::triple3, 10, Rational(30), std::nullopt},
        {"deg13_6", Companion::deg13, 6, Rational(78), std::nullopt},
        {"quad4_36_1/3", Companion::quad4_36, ratio(1, 3), std::nullopt, std::nullopt},
        {"quad4_36_2/3", Companion::quad4_36, ratio(2, 3), std::nullopt, std::pair{Rational(6), ratio(2, 3)}},
    };
    for (const auto& cc : cases) {
        checks.push_back([cc, reg, digits] {
            const PrecisionSpec prec = PrecisionSpec::for_digits(digits);
            CheckRecord c;
            c.group = "companion";
            c.id = cc.id;
            c.inputs["relation"] = to_string(cc.relation);
            c.inputs["n"] = to_string(cc.n);
            CompanionKnown known = ReciprocalOfUnknown{};
            if (cc.known_index) {
                const auto v = reg->lookup(InvariantKind::g, *cc.known_index);
                if (!v) {
                    c.verdict = Verdict::skip;
                    c.detail = "registry has no g " + to_string(*cc.known_index);
                    return c;
                }
                known = eval_radical(v->closed_form, prec);
                c.inputs["known"] = "g " + to_string(*cc.known_index);
            } else if (cc.known_product) {
                const auto p = reg->lookup_product(cc.known_product->first, cc.known_product->second);
                if (!p) {
                    c.verdict = Verdict::skip;
                    c.detail = "registry has no gg " + to_string(cc.known_product->first) + " " +
                               to_string(cc.known_product->second);
                    return c;
                }
                known = eval_radical(p->closed_form, prec);
                c.inputs["known"] = "gg " + to_string(cc.known_product->first) + " " + to_string(cc.known_product->second);
            } else {
                c.inputs["known"] = "reciprocal of unknown";
            }
            const CompanionSolution s = solve_companion(cc.relation, known, cc.n, prec);
            std::string ref_source;
            const RealValue ref = unknown_reference(cc.relation, cc.n, *reg, prec, ref_source);
            CheckRecord out = comparison("companion", cc.id, c.inputs, "reference: " + ref_source, s.value, ref, digits);
            out.residual = residual_text(s.residual);
            if (!s.residual.pass) {
                out.verdict = Verdict::fail;
                out.detail += "; relation residual too large";
            }
            return out;
        });
    }

    for (const std::string probe : {"0.05", "natural"}) {
        checks.push_back([probe, digits] {
            const PrecisionSpec prec = PrecisionSpec::for_digits(digits);
            WorkingPrecision wp(prec.working_digits());
            CheckRecord c;
            c.group = "multiplier";
            c.id = "multiplier13";
            const RealValue q =
                probe == "natural" ? nome(1, 13, prec).q : RealValue::from_string(probe);
            c.inputs["q"] = probe == "natural" ? "exp(-pi/sqrt(13))" : probe;
            const Multiplier13Check m = verify_multiplier13(q, prec);
            BigFloat worst(0L);
            for (const Residual* r : {&m.modulus_equation, &m.reciprocal_equation, &m.product}) {
                worst = max(worst, abs(r->value.value()) + r->value.error());
            }
            c.residual = worst.to_string(3);
            c.verdict = m.pass() ? Verdict::pass : Verdict::fail;
            c.detail = "m = " + m.multiplier.to_string(30);
            return c;
        });
    }
    return make_report(o, "invariants", checks);
}

RunReport run_suite(const SuiteOptions& o)
{
    RunReport all;
    all.suite = "run-suite";
    all.version = std::string(toolkit_version());
    all.target_digits = o.digits;
    all.series_order = o.series_order;
    for (RunReport part : {verify_identities(o), verify_corollaries(o), reproduce(o), invariant_checks(o)}) {
        for (auto& c : part.checks) all.checks.push_back(std::move(c));
    }
    return all;
}

} // namespace thetakit
