#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetakit/catalogue.hpp"
#include "thetakit/registry.hpp"
#include "thetakit/report.hpp"

namespace thetakit {

enum class IdentityMode { series, numeric, both };

struct SuiteOptions
{
    int digits = 100;
    long series_order = 720;
    /// Decimal nomes; the token "natural" stands for the record's own nome.
    std::vector<std::string> probes = {"0.01", "0.05", "0.1", "0.2", "natural"};
    IdentityMode mode = IdentityMode::both;
    std::vector<IdentityRecord> catalogue = builtin_catalogue();
    Registry registry = Registry::builtin();
    /// Worker threads, 0 for the hardware default.
    unsigned threads = 0;
};

/// Throws std::out_of_range for an unknown id. "all" selects everything.
RunReport verify_identities(const SuiteOptions& options, const std::string& id = "all");
RunReport verify_corollaries(const SuiteOptions& options, const std::string& id = "all");
RunReport reproduce(const SuiteOptions& options, const std::string& id = "all");
/// Registry invariants and products against their definitions, the
/// companion solves, and the degree-13 multiplier equations.
RunReport invariant_checks(const SuiteOptions& options);
/// Everything above in one report.
RunReport run_suite(const SuiteOptions& options);

} // namespace thetakit
