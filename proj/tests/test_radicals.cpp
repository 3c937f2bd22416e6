#include <catch2/catch_amalgamated.hpp>

#include "thetakit/parse_error.hpp"
#include "thetakit/radicals.hpp"

using namespace thetakit;

namespace {

BigFloat value_of(std::string_view text, int digits = 60)
{
    return eval_radical(parse_radical(text), PrecisionSpec::for_digits(digits)).value();
}

} // namespace

TEST_CASE("radical parsing and rendering round trip")
{
    for (const char* text : {"(sqrt(2) - 1)*(sqrt(3) + sqrt(2))^(1/2)", "1/3*(sqrt(3) - sqrt(2))", "2^(1/3)",
                             "sqrt(39 + 12*sqrt(10))", "-(sqrt(5) - 1)/2", "(sqrt(2) + 1)^(-3/2)", "3 - (2 - 1)"}) {
        INFO(text);
        const RadicalExpr e = parse_radical(text);
        CHECK(parse_radical(render(e)) == e);
    }
    CHECK(render(parse_radical("((2))")) == "2");
    CHECK(render(parse_radical("2 - (3 - 4)")) == "2 - (3 - 4)");
}

TEST_CASE("radical depth")
{
    CHECK(parse_radical("7").depth() == 0);
    CHECK(parse_radical("sqrt(7)").depth() == 0);
    CHECK(parse_radical("sqrt(2 + sqrt(3))").depth() >= 1);
}

TEST_CASE("radical evaluation")
{
    WorkingPrecision wp(80);
    CHECK(digits_agreement(value_of("sqrt(39 + 12*sqrt(10))"), value_of("sqrt(15) + 2*sqrt(6)"), 60) == 60);
    CHECK(digits_agreement(value_of("(2^(1/3))^3"), BigFloat(2L), 60) >= 59);
    CHECK(digits_agreement(value_of("((sqrt(5) - 1)/2)^(-1)"), value_of("(sqrt(5) + 1)/2"), 60) == 60);
}

TEST_CASE("radical errors")
{
    CHECK_THROWS_AS(parse_radical("sqrt(2"), ParseError);
    CHECK_THROWS_AS(parse_radical("2 +"), ParseError);
    CHECK_THROWS_AS(parse_radical("sqrt(2 - 3)"), ParseError);
    CHECK_THROWS_AS(parse_radical("(1 - 2)^(1/2)"), ParseError);
    CHECK_THROWS_AS(parse_radical("x + 1"), ParseError);
    CHECK_THROWS(eval_radical(parse_radical("1/(2 - 2)"), PrecisionSpec::for_digits(30)));
}
