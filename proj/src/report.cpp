#include "thetakit/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <thread>

namespace thetakit {

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: return "skip";
    case Verdict::error: return "error";
    case Verdict::info: return "info";
    }
    return "?";
}

std::string_view toolkit_version() noexcept
{
    return THETAKIT_VERSION;
}

bool RunReport::success() const noexcept
{
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckRecord& c) { return c.verdict == Verdict::fail || c.verdict == Verdict::error; });
}

std::size_t RunReport::count(Verdict v) const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [v](const CheckRecord& c) { return c.verdict == v; }));
}

std::vector<CheckRecord> run_checks(const std::vector<std::function<CheckRecord()>>& checks, unsigned threads)
{
    std::vector<CheckRecord> results(checks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) {
            const auto start = std::chrono::steady_clock::now();
            try {
                results[i] = checks[i]();
            } catch (const std::exception& e) {
                results[i].verdict = Verdict::error;
                results[i].detail = e.what();
            }
            results[i].wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, checks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

nlohmann::ordered_json to_json(const CheckRecord& check, const RunReport& report, bool include_timing)
{
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["version"] = report.version;
    j["precision"] = {{"target_digits", report.target_digits}, {"series_order", report.series_order}};
    j["group"] = check.group;
    j["id"] = check.id;
    j["inputs"] = check.inputs;
    j["verdict"] = to_string(check.verdict);
    j["residual"] = check.residual ? nlohmann::ordered_json(*check.residual) : nlohmann::ordered_json(nullptr);
    j["digits"] = check.digits ? nlohmann::ordered_json(*check.digits) : nlohmann::ordered_json(nullptr);
    if (include_timing) j["wall_ms"] = std::round(check.wall_ms * 1000) / 1000;
    j["source"] = check.source;
    j["detail"] = check.detail;
    return j;
}

std::string to_json_lines(const RunReport& report, bool include_timing)
{
    std::string out;
    for (const auto& c : report.checks) out += to_json(c, report, include_timing).dump() + "\n";
    nlohmann::ordered_json summary;
    summary["suite"] = report.suite;
    summary["version"] = report.version;
    summary["precision"] = {{"target_digits", report.target_digits}, {"series_order", report.series_order}};
    summary["summary"] = {{"checks", report.checks.size()},
                          {"pass", report.count(Verdict::pass)},
                          {"fail", report.count(Verdict::fail)},
                          {"skip", report.count(Verdict::skip)},
                          {"error", report.count(Verdict::error)},
                          {"info", report.count(Verdict::info)},
                          {"success", report.success()}};
    out += summary.dump() + "\n";
    return out;
}

std::string to_text(const RunReport& report)
{
    std::string out;
    char buf[64];
    for (const auto& c : report.checks) {
        std::string verdict(to_string(c.verdict));
        std::transform(verdict.begin(), verdict.end(), verdict.begin(), [](unsigned char ch) { return std::toupper(ch); });
        out += verdict + std::string(7 - std::min<std::size_t>(verdict.size(), 6), ' ') + c.group + "  " + c.id;
        std::string args;
        for (const auto& [k, v] : c.inputs.items()) {
            args += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        out += args;
        if (c.residual) out += "  residual=" + *c.residual;
        if (c.digits) out += "  digits=" + std::to_string(*c.digits);
        std::snprintf(buf, sizeof buf, "  (%.0f ms)", c.wall_ms);
        out += buf;
        if (!c.detail.empty()) out += "\n        " + c.detail;
        out += "\n";
    }
    out += std::to_string(report.checks.size()) + " checks: " + std::to_string(report.count(Verdict::pass)) +
           " passed, " + std::to_string(report.count(Verdict::fail)) + " failed, " +
           std::to_string(report.count(Verdict::error)) + " errors, " + std::to_string(report.count(Verdict::skip)) +
           " skipped\n";
    return out;
}

} // namespace thetakit
