#include <catch2/catch_amalgamated.hpp>

#include "thetakit/corollaries.hpp"
#include "thetakit/parse_error.hpp"
#include "thetakit/registry.hpp"

using namespace thetakit;

TEST_CASE("built-in registry contents")
{
    const Registry& reg = Registry::builtin();
    int a_values = 0;
    for (const auto& c : reg.corollaries()) a_values += c.target == TargetKind::a;
    CHECK(a_values == 21);
    CHECK(reg.lookup(InvariantKind::g, 30).has_value());
    CHECK(reg.lookup(InvariantKind::g, ratio(10, 3)).has_value());
    CHECK_FALSE(reg.lookup(InvariantKind::g, 31).has_value());
    CHECK_FALSE(reg.lookup(InvariantKind::G, 30).has_value());
    CHECK(reg.lookup_product(ratio(2, 3), 6).has_value());
    CHECK(reg.corollary("a_2_3").m == 2);
    CHECK_THROWS_AS(reg.corollary("a_99_3"), std::out_of_range);
    CHECK(corollary_id(TargetKind::ratio, 10, 3) == "ratio_10_3");
    CHECK(corollary_id(TargetKind::a, ratio(1, 2), 3) == "a_1/2_3");
}

TEST_CASE("registry render round trip")
{
    const Registry& reg = Registry::builtin();
    const Registry again = Registry::parse(reg.render());
    REQUIRE(again.corollaries().size() == reg.corollaries().size());
    for (std::size_t i = 0; i < reg.corollaries().size(); ++i) {
        CHECK(again.corollaries()[i].id == reg.corollaries()[i].id);
        CHECK(again.corollaries()[i].expr == reg.corollaries()[i].expr);
    }
    CHECK(again.invariants().size() == reg.invariants().size());
    CHECK(again.products().size() == reg.products().size());
}

TEST_CASE("registry parse errors")
{
    CHECK_THROWS_AS(Registry::parse("a 2 3 = sqrt(2\n"), ParseError);
    CHECK_THROWS_AS(Registry::parse("q 2 3 = 1\n"), ParseError);
    CHECK_THROWS_AS(Registry::parse("a 2 = 1\n"), ParseError);
    CHECK_THROWS_AS(Registry::parse("g 2 = 1\ng 2 = 1\n"), ParseError);
    try {
        Registry::parse("# comment\ng 2 = 1\nG 5 = sqrt(-1)\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("closed forms against definitions")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(60);
    const Registry& reg = Registry::builtin();
    for (const char* id : {"a_2_3", "a_6_13", "a_2_7", "ab_10_3", "sqrtab_6_13", "nested_sqrt_39"}) {
        INFO(id);
        CHECK(verify_corollary(reg.corollary(id), prec).pass);
    }
}

TEST_CASE("the two misprinted degree-5 values disagree with the definition")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(40);
    const Registry& reg = Registry::builtin();
    for (const char* id : {"a_26_5", "a_38_5"}) {
        INFO(id);
        const CorollaryCheck c = verify_corollary(reg.corollary(id), prec);
        CHECK_FALSE(c.pass);
        CHECK(c.digits < 3);
    }
    // The repaired forms do agree.
    const auto fixed = Registry::parse(
        "a 26 5 = (sqrt(2) + 1)^2*(sqrt(10) + 3)*(sqrt(65) - 8)^2*((sqrt(13) - 3)/2)^3 # repaired\n"
        "a 38 5 = (sqrt(2) - 1)^8*(2*sqrt(5) + sqrt(19))*(sqrt(19) + 3*sqrt(2))*((sqrt(5) - 1)/2)^9 # repaired\n");
    for (const auto& rec : fixed.corollaries()) CHECK(verify_corollary(rec, prec).pass);
}

TEST_CASE("negative control: dropped factor")
{
    const CorollaryRecord broken = drop_factor(Registry::builtin().corollary("a_2_3"), 0);
    const CorollaryCheck c = verify_corollary(broken, PrecisionSpec::for_digits(40));
    CHECK_FALSE(c.pass);
    CHECK_THROWS_AS(drop_factor(Registry::builtin().corollary("ratio_10_3"), 0), std::invalid_argument);
}
