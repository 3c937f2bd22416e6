#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <sstream>
#include <thread>

#include "thetakit/suite.hpp"

using namespace thetakit;

TEST_CASE("run_checks keeps submission order")
{
    std::vector<std::function<CheckRecord()>> checks;
    for (int i = 0; i < 16; ++i) {
        checks.push_back([i] {
            std::this_thread::sleep_for(std::chrono::milliseconds((16 - i) % 5));
            CheckRecord c;
            c.id = std::to_string(i);
            c.verdict = Verdict::pass;
            return c;
        });
    }
    checks.push_back([]() -> CheckRecord { throw std::runtime_error("boom"); });
    const auto results = run_checks(checks, 4);
    REQUIRE(results.size() == 17);
    for (int i = 0; i < 16; ++i) CHECK(results[i].id == std::to_string(i));
    CHECK(results[16].verdict == Verdict::error);
    CHECK(results[16].detail == "boom");
}

TEST_CASE("success ignores skips and informational records")
{
    RunReport r;
    r.checks.resize(3);
    r.checks[0].verdict = Verdict::pass;
    r.checks[1].verdict = Verdict::skip;
    r.checks[2].verdict = Verdict::info;
    CHECK(r.success());
    r.checks[1].verdict = Verdict::fail;
    CHECK_FALSE(r.success());
}

TEST_CASE("JSON output is deterministic apart from timing")
{
    SuiteOptions o;
    o.digits = 50;
    o.series_order = 120;
    o.probes = {"0.1", "natural"};
    const std::string a = to_json_lines(verify_identities(o, "pq_deg5"), false);
    const std::string b = to_json_lines(verify_identities(o, "pq_deg5"), false);
    CHECK(a == b);
    std::istringstream lines(a);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        if (j.contains("summary")) {
            CHECK(j["summary"]["success"] == true);
        } else {
            ++count;
            for (const char* key : {"suite", "version", "precision", "id", "inputs", "verdict", "residual", "source"}) {
                CHECK(j.contains(key));
            }
        }
    }
    CHECK(count == 3);
}

TEST_CASE("unknown ids are rejected")
{
    SuiteOptions o;
    CHECK_THROWS_AS(verify_identities(o, "nope"), std::out_of_range);
    CHECK_THROWS_AS(reproduce(o, "nope"), std::out_of_range);
}
