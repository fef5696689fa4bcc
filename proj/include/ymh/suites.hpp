#pragma once

#include "ymh/checks.hpp"
#include "ymh/lie.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ymh {

struct RunConfig {
    int n = 3;
    int max_degree = 8;
    int order = 20;
    std::vector<std::string> suites{"all"};
    int workers = 1;
    std::string cache_dir;  // empty: no cache
    bool timings = false;
};

struct SuiteRecord {
    std::string suite;
    bool skipped = false;
    std::string skip_reason;
    std::vector<CheckReport> checks;
    double seconds = 0;
    bool pass() const;
};

struct VerificationReport {
    RunConfig config;
    std::vector<SuiteRecord> records;
    bool pass() const;
};

const std::vector<std::string>& suite_names();
// expands "all" and validates names and config; throws std::invalid_argument on usage errors
std::vector<std::string> resolve_suites(const RunConfig& cfg);
VerificationReport run_verification(const RunConfig& cfg);

nlohmann::ordered_json verification_to_json(const VerificationReport& r);
std::string verification_to_tsv(const VerificationReport& r);

// YMH_CACHE_DIR, falling back to ./.ymh-cache
std::string default_cache_dir();
std::string cache_file(const std::string& dir, int n, int max_degree);
// loads from the cache when a file for (n, D) exists, otherwise builds it (and stores it when dir is set)
YMPresentation obtain_presentation(int n, int max_degree, const std::string& cache_dir);

}  // namespace ymh
