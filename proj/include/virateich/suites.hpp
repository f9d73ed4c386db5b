#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace virateich {

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    int trials = 0;
    bool pass = false;
    double wall_ms = 0.0;
    std::string note; // first error message, if a trial threw
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    std::uint64_t seed = 0;
    double tol_scale = 1.0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

struct SuiteOptions {
    int n = 256;
    /// 0 means per-check defaults (the counts the gates were specified at).
    int trials = 0;
    std::uint64_t seed = 7;
    double tol_scale = 1.0;
};

inline constexpr const char* kSuiteNames[] = {"diffeo", "hill",    "coframe",
                                              "trumpet", "wolpert", "groupoid"};

/// Runs one named suite ("diffeo", "hill", "coframe", "trumpet", "wolpert",
/// "groupoid").  Trials parallelize across threads; residual aggregation is a
/// max-reduction, so reports are independent of the thread count.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

/// All suites, in the canonical order.
std::vector<SuiteReport> run_all(const SuiteOptions& opts);

/// Machine-readable report.  Wall times are console-only: the JSON must be
/// byte-identical across runs with the same seed.
nlohmann::json report_json(const std::vector<SuiteReport>& reports);

void print_report(const SuiteReport& report, std::ostream& os);

} // namespace virateich
