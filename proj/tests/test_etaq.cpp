#include <catch2/catch_amalgamated.hpp>

#include "thetakit/etaq.hpp"

using namespace thetakit;

namespace {

Residual numeric_at(const IdentityRecord& rec, const char* q, int digits)
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(digits);
    WorkingPrecision wp(prec.working_digits());
    return verify_numeric(rec, RealValue::from_string(q), prec);
}

} // namespace

TEST_CASE("every catalogued identity holds numerically and as a series")
{
    for (const auto& rec : builtin_catalogue()) {
        INFO(rec.id);
        for (const auto& q : standard_probes()) CHECK(numeric_at(rec, q.c_str(), 60).pass);
        CHECK(verify_series(rec, 24 * 12).pass);
    }
}

TEST_CASE("natural nome of each identity")
{
    CHECK(natural_degree(find_identity(builtin_catalogue(), "pq_deg13")) == 13);
    CHECK(natural_degree(find_identity(builtin_catalogue(), "theta_product")) == 1);
    for (const auto& rec : builtin_catalogue()) {
        const PrecisionSpec prec = PrecisionSpec::for_digits(50);
        WorkingPrecision wp(prec.working_digits());
        INFO(rec.id);
        CHECK(verify_numeric(rec, nome(1, Rational(natural_degree(rec)), prec).q, prec).pass);
    }
}

TEST_CASE("negative control: degree 3 coefficient 9 replaced by 8")
{
    const IdentityRecord bad =
        with_relation(find_identity(builtin_catalogue(), "pq_deg3"), "P*Q + 8/(P*Q) = (P/Q)^3 + (Q/P)^3");
    CHECK_FALSE(numeric_at(bad, "0.1", 60).pass);
    const SeriesCheck s = verify_series(bad, 240);
    CHECK_FALSE(s.pass);
    CHECK(s.first_failure.has_value());
}

TEST_CASE("negative control: perturbed coefficient of a degree-13 relation")
{
    const IdentityRecord& base = find_identity(builtin_catalogue(), "split_deg13");
    const auto& [exps, c] = *base.relation.terms().begin();
    const IdentityRecord bad = perturb_coefficient(base, exps.first, exps.second, 1);
    CHECK_FALSE(numeric_at(bad, "0.05", 60).pass);
    CHECK_FALSE(verify_series(bad, 720).pass);
}

TEST_CASE("series and numeric verdicts agree")
{
    const IdentityRecord& rec = find_identity(builtin_catalogue(), "mixed_deg5");
    const Residual r = numeric_at(rec, "0.1", 80);
    CHECK(r.pass);
    CHECK(verify_series(rec, 480).pass);
    CHECK_THROWS_AS(numeric_at(rec, "0.1", 30), std::invalid_argument);
}

TEST_CASE("eta series of a quotient")
{
    const IdentityRecord& rec = find_identity(builtin_catalogue(), "pq_deg3");
    const PowerSeries s = eta_series(rec.P, 240);
    CHECK(s.valuation() == -4);
    CHECK(s.coefficient(-4) == 1);
    CHECK(s.relative_precision() >= 240);
}

TEST_CASE("degree-13 multiplier equations")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(80);
    WorkingPrecision wp(prec.working_digits());
    const Multiplier13Check at005 = verify_multiplier13(RealValue::from_string("0.05"), prec);
    CHECK(at005.pass());
    CHECK(digits_agreement(at005.multiplier.value(), BigFloat::from_string("1.2100275001648437885796"), 80) >= 22);
    const Multiplier13Check natural = verify_multiplier13(nome(1, 13, prec).q, prec);
    CHECK(natural.pass());
    CHECK(digits_agreement(natural.multiplier.value(), sqrt(RealValue(13L)).value(), 80) >= 75);
}
