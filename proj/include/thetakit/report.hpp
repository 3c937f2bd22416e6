#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace thetakit {

enum class Verdict { pass, fail, skip, error, info };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of one check.
struct CheckRecord
{
    /// Group the check belongs to: "identity", "corollary", "reproduce", "invariant", "multiplier".
    std::string group;
    std::string id;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    Verdict verdict = Verdict::info;
    /// Normalized residual in scientific notation, for residual-based checks.
    std::optional<std::string> residual;
    /// Decimal digits of agreement, for comparison-based checks.
    std::optional<int> digits;
    double wall_ms = 0;
    std::string source;
    std::string detail;
};

struct RunReport
{
    std::string suite;
    std::string version;
    int target_digits = 100;
    long series_order = 720;
    std::vector<CheckRecord> checks;

    /// True iff no check failed or raised an error. Skips and informational
    /// records do not count against success.
    bool success() const noexcept;
    std::size_t count(Verdict v) const noexcept;
};

std::string_view toolkit_version() noexcept;

/// Runs the checks on up to `threads` worker threads (0 picks the hardware
/// concurrency). Results keep the order of `checks`; a check that throws is
/// recorded with Verdict::error and the exception message.
std::vector<CheckRecord> run_checks(const std::vector<std::function<CheckRecord()>>& checks, unsigned threads = 0);

/// One JSON object per check carrying the report-level fields as well.
nlohmann::ordered_json to_json(const CheckRecord& check, const RunReport& report, bool include_timing = true);
/// JSON Lines: each check, then a closing summary object.
std::string to_json_lines(const RunReport& report, bool include_timing = true);
/// Human-readable table.
std::string to_text(const RunReport& report);

} // namespace thetakit
