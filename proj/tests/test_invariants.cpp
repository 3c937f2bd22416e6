#include <catch2/catch_amalgamated.hpp>

#include "thetakit/invariants.hpp"

using namespace thetakit;

namespace {

BigFloat ref(const char* s)
{
    WorkingPrecision wp(60);
    return BigFloat::from_string(s);
}

} // namespace

TEST_CASE("class invariants at small indices")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(40);
    CHECK(digits_agreement(G_numeric(1, prec).value(), BigFloat(1L), 40) == 40);
    CHECK(digits_agreement(g_numeric(2, prec).value(), BigFloat(1L), 40) == 40);
    CHECK(digits_agreement(G_numeric(5, prec).value(), ref("1.127838485561682260264835483177042458436"), 40) >= 38);
    CHECK(digits_agreement(g_numeric(ratio(10, 3), prec).value(), ref("1.064460925041406055147933260833148100414"), 40) >= 38);
}

TEST_CASE("reciprocity g_{1/n} = 1/g_{4n}")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(50);
    for (const Rational n : {Rational(3), ratio(2, 3), Rational(5)}) {
        const RealValue product = evaluate_certified(prec, [&](const PrecisionSpec& p) {
            return g_numeric(1 / n, p) * g_numeric(4 * n, p);
        });
        CHECK(digits_agreement(product.value(), BigFloat(1L), 50) >= 49);
    }
}

TEST_CASE("registry invariants match their definitions")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(60);
    for (const auto& v : Registry::builtin().invariants()) {
        INFO(to_string(v.index));
        CHECK(check_invariant(v, prec).pass);
    }
    for (const auto& p : Registry::builtin().products()) CHECK(check_invariant_product(p, prec).pass);
}

TEST_CASE("companion relations recover the unknown invariant")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(60);
    const Registry& reg = Registry::builtin();
    const auto closed = [&](const Rational& n) { return eval_radical(reg.lookup(InvariantKind::g, n)->closed_form, prec); };

    const CompanionSolution t = solve_companion(Companion::triple3, closed(30), 10, prec);
    CHECK(digits_agreement(t.value.value(), closed(ratio(10, 3)).value(), 60) == 60);
    CHECK(t.residual.pass);

    const CompanionSolution d = solve_companion(Companion::deg13, closed(78), 6, prec);
    CHECK(digits_agreement(d.value.value(), closed(ratio(6, 13)).value(), 60) == 60);
    CHECK(d.candidates.size() >= 1);

    const CompanionSolution q = solve_companion(Companion::quad4_36, ReciprocalOfUnknown{}, ratio(1, 3), prec);
    WorkingPrecision wp(prec.working_digits());
    CHECK(digits_agreement(q.value.value(), pow(RealValue(2L), ratio(1, 3)).value(), 60) == 60);

    const CompanionSolution u = solve_companion(Companion::quad4_36, RealValue(1L), ratio(2, 3), prec);
    const RealValue direct = g_numeric(ratio(8, 3), prec) * g_numeric(24, prec);
    CHECK(digits_agreement(u.value.value(), direct.value(), 60) >= 59);
}

TEST_CASE("root selection rejects a wrong seed")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(40);
    CHECK_THROWS_AS(solve_companion(Companion::triple3, RealValue(5L), 10, prec), RootSelectionError);
    CHECK_THROWS_AS(solve_companion(Companion::triple3, ReciprocalOfUnknown{}, 10, prec), std::invalid_argument);
}
