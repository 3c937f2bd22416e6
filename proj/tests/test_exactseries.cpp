#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "thetakit/exactseries.hpp"

using namespace thetakit;

namespace {

PowerSeries random_series(std::mt19937_64& rng, long order)
{
    std::uniform_int_distribution<long> coeff(-7, 7), den(1, 6), start(-30, 30), gap(1, 10);
    std::map<long, Rational> terms;
    const long v = start(rng);
    terms[v] = ratio(coeff(rng) | 1, den(rng));
    for (long e = v + gap(rng); e <= order; e += gap(rng)) terms[e] = ratio(coeff(rng), den(rng));
    return PowerSeries(std::move(terms), order);
}

bool same(const PowerSeries& a, const PowerSeries& b)
{
    return compare_series(a, b).pass;
}

} // namespace

TEST_CASE("ring laws on random series")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_series(rng, 200), b = random_series(rng, 150), c = random_series(rng, 220);
        CHECK(same(a + b, b + a));
        CHECK(same(a * b, b * a));
        CHECK(same((a + b) + c, a + (b + c)));
        CHECK(same((a * b) * c, a * (b * c)));
        CHECK(same(a * (b + c), a * b + a * c));
        CHECK((a - a).is_zero());
        CHECK(same(a * invert(a), PowerSeries::constant(1, 200)));
        CHECK(same(pow_int(a, 3), a * a * a));
        CHECK(same(pow_int(a, -2), invert(a * a)));
    }
}

TEST_CASE("product order is the sound minimum")
{
    const PowerSeries a = PowerSeries::monomial(1, 24, 100);
    const PowerSeries b = PowerSeries::monomial(1, 48, 200);
    const PowerSeries p = a * b;
    CHECK(p.order() == std::min(100 + 48, 200 + 24));
    CHECK(p.coefficient(72) == 1);
    CHECK_THROWS_AS(p.coefficient(p.order() + 1), std::out_of_range);
}

TEST_CASE("pentagonal sum equals the Euler product to order 24*50")
{
    CHECK(same(series_f(1, Sign::minus, 24 * 50), euler_product(24 * 50)));
}

TEST_CASE("f(q) carries the alternating sign")
{
    // f(q) = (-q;-q)_inf = 1 + q - q^2 + 2q^3 - ...
    const PowerSeries f = series_f(1, Sign::plus, 24 * 6);
    CHECK(f.coefficient(0) == 1);
    CHECK(f.coefficient(24) == 1);
    CHECK(f.coefficient(48) == -1);
    CHECK(f.coefficient(72) == 0);
    CHECK(f.coefficient(96) == 0);
    CHECK(f.coefficient(120) == -1);
}

TEST_CASE("classical product and quotient forms")
{
    const Entry24Check c = check_entry24(24 * 40);
    CHECK(c.product_form.pass);
    CHECK(c.quotient_form.pass);
}

TEST_CASE("series argument scaling and shifting")
{
    const PowerSeries phi = series_phi(Sign::plus, 24 * 20);
    const PowerSeries phi4 = scale_argument(phi, 4);
    CHECK(phi4.coefficient(96) == 2);
    CHECK(phi4.coefficient(24) == 0);
    const PowerSeries shifted = shift(phi, 5);
    CHECK(shifted.coefficient(5) == 1);
    CHECK(shifted.order() == phi.order() + 5);
    CHECK_THROWS_AS(series_f(0, Sign::minus, 10), std::invalid_argument);
    CHECK_THROWS_AS(invert(PowerSeries(50)), std::domain_error);
}
