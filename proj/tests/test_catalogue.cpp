#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "thetakit/catalogue.hpp"

using namespace thetakit;

TEST_CASE("built-in catalogue has twenty distinct identities")
{
    const auto& cat = builtin_catalogue();
    REQUIRE(cat.size() == 20);
    std::set<std::string> ids;
    for (const auto& r : cat) ids.insert(r.id);
    CHECK(ids.size() == 20);
    CHECK(find_identity(cat, "pq_deg13").id == "pq_deg13");
    CHECK_THROWS_AS(find_identity(cat, "missing"), std::out_of_range);
}

TEST_CASE("catalogue render and parse round trip")
{
    const auto& cat = builtin_catalogue();
    const auto again = parse_catalogue(render_catalogue(cat));
    REQUIRE(again.size() == cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) CHECK(again[i] == cat[i]);
}

TEST_CASE("relations are cleared and normalized")
{
    const Relation r = parse_relation("P*Q + 9/(P*Q) = (P/Q)^3 + (Q/P)^3");
    for (const auto& [e, c] : r.terms()) {
        CHECK(e.first >= 0);
        CHECK(e.second >= 0);
        CHECK(c.get_den() == 1);
    }
    CHECK(normalize_relation(Relation::constant(Rational(-2)) * r) == r);
    CHECK(parse_relation("P = Q") == normalize_relation(Relation::x() - Relation::y()));
}

TEST_CASE("catalogue errors carry positions")
{
    const auto line_of = [](std::string_view text) -> long {
        try {
            parse_catalogue(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.line());
        }
        return -1L;
    };
    CHECK(line_of("identity a {\n  P = f(1);\n  Q = g(2);\n  relation: P = Q;\n  source: \"x\"\n}") == 3);
    CHECK(line_of("identity a {\n  P = f(1);\n  Q = f(2);\n  relation: P + Q;\n  source: \"x\"\n}") == 4);
    CHECK(line_of("identity a {\n  P = f(1);\n  Q = f(2);\n  relation: 1/(P+Q) = 1;\n  source: \"x\"\n}") == 4);
    const std::string one = "identity a {\n  P = f(1);\n  Q = f(2);\n  relation: P = Q;\n  source: \"x\"\n}\n";
    CHECK(line_of(one + one) == 7);
    CHECK(line_of("identity a {\n  P = f(1) *;\n}") == 2);
}

TEST_CASE("record editing helpers")
{
    const IdentityRecord& base = find_identity(builtin_catalogue(), "pq_deg3");
    const IdentityRecord edited = with_relation(base, "P*Q + 8/(P*Q) = (P/Q)^3 + (Q/P)^3");
    CHECK(edited.P == base.P);
    CHECK_FALSE(edited.relation == base.relation);
    const IdentityRecord bumped = perturb_coefficient(base, 0, 0, 1);
    CHECK_FALSE(bumped.relation == base.relation);
}
