#include <catch2/catch_amalgamated.hpp>

#include "thetakit/bignum.hpp"
#include "thetakit/exactseries.hpp"

using namespace thetakit;

namespace {

BigFloat ref(const char* text)
{
    return BigFloat::from_string(text);
}

int agreement(const RealValue& v, const char* reference, int cap)
{
    return digits_agreement(v.value(), ref(reference), cap);
}

} // namespace

TEST_CASE("precision settings guard policy and validation")
{
    const PrecisionSpec p = PrecisionSpec::for_digits(100);
    CHECK(p.target_digits == 100);
    CHECK(p.guard_digits == 35);
    CHECK(p.working_digits() == 135);
    CHECK_THROWS_AS((PrecisionSpec{0, 20}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((PrecisionSpec{50, 3}.validate()), std::invalid_argument);
}

TEST_CASE("digits_agreement counts leading digits")
{
    WorkingPrecision wp(60);
    CHECK(digits_agreement(ref("1.2345678"), ref("1.2345679"), 50) >= 6);
    CHECK(digits_agreement(ref("1.2345678"), ref("1.2345679"), 50) <= 8);
    CHECK(digits_agreement(ref("2"), ref("2"), 40) == 40);
    CHECK(digits_agreement(ref("3"), ref("2"), 40) == 0);
}

TEST_CASE("interval arithmetic carries error bounds")
{
    WorkingPrecision wp(50);
    const RealValue third = RealValue::from_rational(ratio(1, 3));
    const RealValue sum = third + third + third;
    CHECK(sum.lower() <= BigFloat(1L));
    CHECK(sum.upper() >= BigFloat(1L));
    CHECK_THROWS_AS(RealValue(1L) / RealValue(BigFloat(0L), BigFloat(1e-10)), std::domain_error);
    CHECK_THROWS(pow(RealValue(-2L), ratio(1, 2)));
    const RealValue root2 = sqrt(RealValue(2L));
    CHECK(agreement(root2, "1.41421356237309504880168872420969807856967187537694807317667973799", 45) >= 45);
}

TEST_CASE("nome values")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(40);
    WorkingPrecision wp(prec.working_digits());
    const RealValue q1 = nome(1, 1, prec).q;
    const RealValue q4 = nome(4, 1, prec).q;
    CHECK(digits_agreement((q1 * q1).value(), q4.value(), 40) >= 39);
    CHECK(agreement(nome(2, 3, prec).q, "0.07691151603328598797057437532781656167451", 40) >= 38);
    CHECK_THROWS_AS(nome(0, 1, prec), std::invalid_argument);
}

TEST_CASE("theta blocks at q = 0.1 match the independent oracle")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(36);
    WorkingPrecision wp(prec.working_digits());
    const RealValue q = RealValue::from_string("0.1");
    CHECK(agreement(eval_block(Block::phi_plus, 1, q, prec), "1.200200002000000200000000200000000002", 36) >= 35);
    CHECK(agreement(eval_block(Block::phi_minus, 1, q, prec), "0.800199998000000199999999800000000002", 36) >= 35);
    CHECK(agreement(eval_block(Block::psi_plus, 1, q, prec), "1.101001000100001000001000000100000001", 36) >= 35);
    CHECK(agreement(eval_block(Block::psi_minus, 1, q, prec), "0.899001000099998999999000000100000001", 36) >= 35);
    CHECK(agreement(eval_block(Block::f_minus, 1, q, prec), "0.8900100999989990000001000099999999899999", 36) >= 35);
    CHECK(agreement(eval_block(Block::f_plus, 1, q, prec), "1.08998989999900100000010001000000001", 36) >= 35);
}

TEST_CASE("truncation bounds are sound across precisions")
{
    const RealValue hi = [] {
        const PrecisionSpec p = PrecisionSpec::for_digits(120);
        WorkingPrecision wp(p.working_digits());
        return eval_block(Block::f_minus, 1, RealValue::from_string("0.3"), p);
    }();
    for (int d : {20, 40, 60, 80}) {
        const PrecisionSpec p = PrecisionSpec::for_digits(d);
        WorkingPrecision wp(p.working_digits());
        const RealValue lo = eval_block(Block::f_minus, 1, RealValue::from_string("0.3"), p);
        INFO("digits " << d);
        CHECK(abs(lo.value() - hi.value()) <= lo.error() + hi.error());
        CHECK(lo.meets(p));
    }
}

TEST_CASE("evaluate_truncated agrees with the block evaluation")
{
    const PrecisionSpec prec = PrecisionSpec::for_digits(40);
    WorkingPrecision wp(prec.working_digits());
    const RealValue q = RealValue::from_string("0.05");
    const RealValue from_series = evaluate_truncated(series_phi(Sign::plus, 24 * 80), q);
    const RealValue direct = eval_block(Block::phi_plus, 1, q, prec);
    CHECK(digits_agreement(from_series.value(), direct.value(), 40) >= 39);
}
