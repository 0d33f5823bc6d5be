#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adl::acceptance {

struct RunConfig {
    std::string cache_dir;                    // empty = no cache
    uint64_t sieve_ceiling = 1'000'000'000;   // criteria needing more get SKIP
    double y0 = 1.0, power = 1.0, epsilon = 0.1;  // Theorem-window parameters
    uint64_t seed = 0;                        // reserved for fixture selection
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::string status;     // PASS | FAIL | SKIP
    std::string reference;  // provenance of the reference values
    std::string detail;
};

struct Report {
    std::vector<CriterionResult> rows;
    int failed = 0;
    int skipped = 0;
    std::string text;  // deterministic rendering (no timings)
    bool all_passed() const { return failed == 0; }
};

// Criteria 1..9.
Report run(const RunConfig& cfg);

// Criteria 1..10: runs the suite twice and checks byte-identical reports.
Report run_full(const RunConfig& cfg);

std::string render_json(const Report& r, const RunConfig& cfg);

}  // namespace adl::acceptance
