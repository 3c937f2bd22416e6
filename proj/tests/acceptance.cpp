// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "thetakit/corollaries.hpp"
#include "thetakit/etaq.hpp"
#include "thetakit/exactseries.hpp"
#include "thetakit/invariants.hpp"
#include "thetakit/products.hpp"
#include "thetakit/suite.hpp"
#include "thetakit/theorems.hpp"

using namespace thetakit;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& what)
    {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + what;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v, int decimals = 1)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

Outcome identity_suite(IdentityMode mode, double budget_seconds)
{
    Outcome out;
    SuiteOptions o;
    o.digits = 100;
    o.series_order = 720;
    o.mode = mode;
    o.probes = standard_probes();
    const auto start = std::chrono::steady_clock::now();
    const RunReport r = verify_identities(o);
    const double elapsed = seconds_since(start);
    for (const auto& c : r.checks) {
        if (c.verdict != Verdict::pass) out.fail(c.id + " " + c.inputs.dump() + " " + std::string(to_string(c.verdict)));
    }
    if (elapsed > budget_seconds) out.fail("took " + fixed(elapsed) + " s");
    if (out.pass) out.detail = std::to_string(r.checks.size()) + " checks in " + fixed(elapsed, 2) + " s";
    return out;
}

Outcome multiplier13()
{
    Outcome out;
    const PrecisionSpec prec = PrecisionSpec::for_digits(80);
    WorkingPrecision wp(prec.working_digits());
    const std::vector<std::pair<std::string, RealValue>> points = {{"0.05", RealValue::from_string("0.05")},
                                                                     {"nome(1,13)", nome(1, 13, prec).q}};
    const BigFloat limit = pow(BigFloat(10L), -65L);
    for (const auto& [label, q] : points) {
        const Multiplier13Check m = verify_multiplier13(q, prec);
        for (const Residual* r : {&m.modulus_equation, &m.reciprocal_equation, &m.product}) {
            if (!r->pass || abs(r->value.value()) + r->value.error() > limit) out.fail("residual too large at q = " + label);
        }
    }
    if (out.pass) out.detail = "q = 0.05 and nome(1,13) at 80 digits";
    return out;
}

Outcome closed_form_corollaries()
{
    Outcome out;
    const PrecisionSpec prec = PrecisionSpec::for_digits(60);
    int checked = 0;
    for (const auto& rec : Registry::builtin().corollaries()) {
        if (rec.target != TargetKind::a) continue;
        ++checked;
        const CorollaryCheck c = verify_corollary(rec, prec);
        if (!c.pass) out.fail(rec.id + " matches to " + std::to_string(c.digits) + " digits");
    }
    out.detail = std::to_string(checked) + " values" + (out.pass ? "" : "; " + out.detail);
    return out;
}

Outcome invariant_registry()
{
    Outcome out;
    const PrecisionSpec prec = PrecisionSpec::for_digits(60);
    const Registry& reg = Registry::builtin();
    for (const Rational n : {Rational(30), Rational(78)}) {
        const auto v = reg.lookup(InvariantKind::g, n);
        if (!v) {
            out.fail("registry lacks g_" + to_string(n));
            continue;
        }
        if (!check_invariant(*v, prec).pass) out.fail("g_" + to_string(n));
    }
    for (const auto& [a, b] : {std::pair{Rational(6), ratio(2, 3)}, std::pair{Rational(12), ratio(4, 3)}}) {
        const auto p = reg.lookup_product(a, b);
        if (!p) {
            out.fail("registry lacks g_" + to_string(a) + " g_" + to_string(b));
            continue;
        }
        if (!check_invariant_product(*p, prec).pass) out.fail("g_" + to_string(a) + " g_" + to_string(b));
    }
    struct Solve
    {
        Companion relation;
        Rational n, seed, target;
    };
    for (const Solve& s : {Solve{Companion::triple3, 10, 30, ratio(10, 3)}, Solve{Companion::deg13, 6, 78, ratio(6, 13)}}) {
        const auto seed = reg.lookup(InvariantKind::g, s.seed);
        const auto target = reg.lookup(InvariantKind::g, s.target);
        if (!seed || !target) {
            out.fail("registry lacks the companion data for g_" + to_string(s.target));
            continue;
        }
        const CompanionSolution sol = solve_companion(s.relation, eval_radical(seed->closed_form, prec), s.n, prec);
        const int d = digits_agreement(sol.value.value(), eval_radical(target->closed_form, prec).value(), 60);
        if (d < 60) out.fail("companion g_" + to_string(s.target) + " matches to " + std::to_string(d) + " digits");
    }
    if (out.pass) out.detail = "g_30, g_78, two products, two companion solves";
    return out;
}

Outcome pipeline()
{
    Outcome out;
    const PrecisionSpec prec = PrecisionSpec::for_digits(100);
    const BigFloat limit = pow(BigFloat(10L), -85L);
    for (const char* id : {"a_2_3", "a_4_3", "a_10_3", "a_6_13"}) {
        const ReproductionReport r = reproduce_corollary(Registry::builtin().corollary(id), prec);
        if (!r.three_way(60)) {
            out.fail(std::string(id) + " three-way agreement " + std::to_string(r.pipeline_vs_closed) + "/" +
                     std::to_string(r.pipeline_vs_direct) + "/" + std::to_string(r.closed_vs_direct));
            continue;
        }
        for (const Residual* res : {&r.pair->ratio_residual, &r.pair->product_residual}) {
            if (abs(res->value.value()) + res->value.error() > limit) out.fail(std::string(id) + " back-substitution residual");
        }
    }
    if (out.pass) out.detail = "a_2_3, a_4_3, a_10_3, a_6_13";
    return out;
}

Outcome nested_radical()
{
    Outcome out;
    const CorollaryCheck c = verify_corollary(Registry::builtin().corollary("nested_sqrt_39"), PrecisionSpec::for_digits(60));
    if (!c.pass) out.fail("agreement " + std::to_string(c.digits) + " digits");
    else out.detail = "sqrt(39 + 12 sqrt(10)) = sqrt(15) + 2 sqrt(6)";
    return out;
}

PowerSeries random_series(std::mt19937_64& rng, long order)
{
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<long> start(-48, 48);
    std::map<long, Rational> terms;
    const long v = start(rng);
    terms[v] = ratio(coeff(rng) | 1, den(rng));
    for (long e = v + 1; e <= order; e += 1 + static_cast<long>(rng() % 12)) terms[e] = ratio(coeff(rng), den(rng));
    return PowerSeries(std::move(terms), order);
}

bool agree(const PowerSeries& a, const PowerSeries& b)
{
    return compare_series(a, b).pass;
}

Outcome properties()
{
    Outcome out;
    std::mt19937_64 rng(20240611);

    for (int trial = 0; trial < 20; ++trial) {
        const PowerSeries a = random_series(rng, 240), b = random_series(rng, 240), c = random_series(rng, 240);
        if (!agree(a * b, b * a)) out.fail("commutativity");
        if (!agree((a * b) * c, a * (b * c))) out.fail("associativity");
        if (!agree(a * (b + c), a * b + a * c)) out.fail("distributivity");
        const PowerSeries one = PowerSeries::constant(1, 240);
        if (!agree(a * invert(a), one)) out.fail("inverse");
    }
    if (!agree(series_f(1, Sign::minus, 24 * 50), euler_product(24 * 50))) out.fail("pentagonal sum against Euler product");

    std::uniform_int_distribution<long> num(1, 40), den(1, 4), deg(1, 15);
    int grid = 0;
    while (grid < 50) {
        const Rational m = ratio(num(rng), den(rng));
        const Rational n(deg(rng));
        if (m / n < ratio(1, 16)) continue;
        ++grid;
        try {
            const ProductValue a = a_numeric(m, n, PrecisionSpec::for_digits(50));
            const ProductValue b = b_numeric(m, n, PrecisionSpec::for_digits(50));
            if (a.forms_checked.size() != 3 || b.forms_checked.size() != 2) out.fail("missing forms at " + to_string(m));
        } catch (const FormMismatch& e) {
            out.fail(std::string("form mismatch: ") + e.what());
        }
    }

    // Error bounds shrink and agreement with a 200-digit reference grows with the target.
    for (const char* probe : {"0.05", "0.2"}) {
        const IdentityRecord& rec = find_identity(builtin_catalogue(), "pq_deg5");
        BigFloat previous(1L);
        for (int d : {40, 60, 80, 100, 140}) {
            const PrecisionSpec prec = PrecisionSpec::for_digits(d);
            WorkingPrecision wp(prec.working_digits());
            const Residual r = verify_numeric(rec, RealValue::from_string(probe), prec);
            const BigFloat bound = abs(r.value.value()) + r.value.error();
            if (!(bound < previous)) out.fail(std::string("residual bound not decreasing at q = ") + probe);
            previous = bound;
        }
    }
    const RealValue reference = g_numeric(ratio(10, 3), PrecisionSpec::for_digits(200));
    int last = 0;
    for (int d : {30, 60, 90, 120}) {
        const RealValue v = g_numeric(ratio(10, 3), PrecisionSpec::for_digits(d));
        const int got = digits_agreement(v.value(), reference.value(), 200);
        if (got < d || got < last) out.fail("precision scaling at " + std::to_string(d) + " digits");
        last = got;
    }
    if (out.pass) out.detail = "ring laws, pentagonal order 1200, 50-pair form grid, precision scaling";
    return out;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"identity suite, numeric", [] { return identity_suite(IdentityMode::numeric, 120); }},
        {"identity suite, exact series", [] { return identity_suite(IdentityMode::series, 300); }},
        {"degree-13 multiplier", multiplier13},
        {"closed-form corollaries", closed_form_corollaries},
        {"invariant registry", invariant_registry},
        {"pipeline reproduction", pipeline},
        {"nested radical", nested_radical},
        {"property suites", properties},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("error: ") + e.what());
        }
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        std::cout << "\n" << std::flush;
    }
    return all ? 0 : 1;
}
