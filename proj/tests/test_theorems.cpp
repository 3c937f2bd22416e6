#include <catch2/catch_amalgamated.hpp>

#include "thetakit/theorems.hpp"

using namespace thetakit;

TEST_CASE("family selection")
{
    CHECK(family_for_degree(3) == Family::n3);
    CHECK(family_for_degree(13) == Family::n13);
    CHECK_FALSE(family_for_degree(11).has_value());
    CHECK(degree(Family::n7) == 7);
}

TEST_CASE("lambda from registry products and companions")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(60);
    const LambdaValue l2 = lambda_value(Family::n3, 2, prec);
    CHECK(l2.source == LambdaSource::closed_form);
    const LambdaValue l26 = lambda_value(Family::n3, 26, prec);
    CHECK(l26.source == LambdaSource::companion);
    const LambdaValue l14 = lambda_value(Family::n3, 14, prec);
    CHECK(l14.source == LambdaSource::numeric_only);
    CHECK_THROWS_AS(lambda_value(Family::n3, 14, prec, Registry::builtin(), false), InvariantUnavailable);
}

TEST_CASE("pipeline agrees three ways")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(80);
    for (const char* id : {"a_2_3", "a_4_3", "a_10_3", "a_6_13", "a_2_5", "a_2_7", "ratio_10_3", "sqrtab_6_13"}) {
        INFO(id);
        const ReproductionReport r = reproduce_corollary(Registry::builtin().corollary(id), prec);
        CHECK(r.missing.empty());
        CHECK(r.three_way(80));
        REQUIRE(r.pair);
        CHECK(r.pair->ratio_residual.pass);
        CHECK(r.pair->product_residual.pass);
    }
}

TEST_CASE("pipeline exposes the misprinted values")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(60);
    for (const char* id : {"a_26_5", "a_38_5"}) {
        INFO(id);
        const ReproductionReport r = reproduce_corollary(Registry::builtin().corollary(id), prec);
        CHECK(r.pipeline_vs_direct == 60);
        CHECK(r.pipeline_vs_closed < 3);
        CHECK_FALSE(r.three_way(60));
    }
}

TEST_CASE("equality records have no pipeline leg")
{
    const ReproductionReport r =
        reproduce_corollary(Registry::builtin().corollary("nested_sqrt_39"), PrecisionSpec::for_digits(40));
    CHECK(r.closed_form.has_value());
    CHECK_FALSE(r.pipeline.has_value());
    CHECK(r.missing.size() == 2);
}
