#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "thetakit/products.hpp"

using namespace thetakit;

namespace {

struct Frozen
{
    long m, n;
    const char* value;
};

// Independent evaluation of the defining theta quotient.
const Frozen frozen_a[] = {
    {2, 3, "0.73472009926199843318"},   {4, 3, "0.46541593741999229802"},  {8, 3, "0.22806073461168487857"},
    {10, 3, "0.16937141992523595971"},  {6, 3, "0.31801320195672632079"},  {14, 3, "0.10056542171806581747"},
    {26, 3, "0.029425920778903406769"}, {34, 3, "0.015153448314907842015"}, {2, 5, "0.5699185129219789308"},
    {4, 5, "0.27163999649577942519"},   {6, 5, "0.15092139353003610975"},  {8, 5, "0.090695344246969312721"},
    {14, 5, "0.025790743700631438973"}, {26, 5, "0.0038640455282124214187"}, {38, 5, "0.00086595146385015677363"},
    {2, 7, "0.45760561886200465639"},   {4, 7, "0.1719103735339211307"},   {6, 7, "0.081144875184425306829"},
    {10, 7, "0.023979152647488619296"}, {6, 13, "0.018174118043373303803"}, {10, 13, "0.0030014328980165285245"},
};

} // namespace

TEST_CASE("a values match frozen references")
{
    for (const auto& f : frozen_a) {
        INFO("a_" << f.m << "," << f.n);
        const ProductValue v = a_numeric(f.m, f.n, PrecisionSpec::for_digits(30));
        WorkingPrecision wp(40);
        CHECK(digits_agreement(v.value.value(), BigFloat::from_string(f.value), 30) >= 18);
        CHECK(v.forms_checked.size() == 3);
    }
}

TEST_CASE("b values match frozen references")
{
    WorkingPrecision wp(40);
    CHECK(digits_agreement(b_numeric(8, 3, PrecisionSpec::for_digits(30)).value.value(),
                           BigFloat::from_string("0.233521412339405265474132984956"), 30) >= 28);
    CHECK(digits_agreement(b_numeric(3, 5, PrecisionSpec::for_digits(30)).value.value(),
                           BigFloat::from_string("0.544498874680576110349643089403"), 30) >= 28);
}

TEST_CASE("n = 1 collapses to 1")
{
    for (long m : {1L, 2L, 5L}) {
        CHECK(digits_agreement(a_numeric(m, 1, PrecisionSpec::for_digits(30)).value.value(), BigFloat(1L), 30) == 30);
        CHECK(digits_agreement(b_numeric(m, 1, PrecisionSpec::for_digits(30)).value.value(), BigFloat(1L), 30) == 30);
    }
}

TEST_CASE("forms agree on a randomized grid")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(1, 30), den(1, 3), deg(2, 13);
    for (int i = 0; i < 12;) {
        const Rational m = ratio(num(rng), den(rng));
        const Rational n(deg(rng));
        if (m / n < ratio(1, 16)) continue;
        ++i;
        INFO(to_string(m) << " " << to_string(n));
        CHECK_NOTHROW(a_numeric(m, n, PrecisionSpec::for_digits(50)));
        CHECK_NOTHROW(b_numeric(m, n, PrecisionSpec::for_digits(50)));
    }
}

TEST_CASE("product argument validation")
{
    CHECK_THROWS_AS(a_numeric(0, 3, PrecisionSpec::for_digits(30)), std::invalid_argument);
    CHECK_THROWS_AS(b_numeric(2, -1, PrecisionSpec::for_digits(30)), std::invalid_argument);
}
