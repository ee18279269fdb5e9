#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wco {

/// One verification outcome.  pass is exactly metric <= tolerance; checks
/// asserting a lower bound store the clipped shortfall as the metric with
/// tolerance 0 and keep the raw residual in params.
struct CheckRecord {
    std::string test_id;
    std::vector<std::pair<std::string, std::string>> params;
    double metric;
    double tolerance;
    bool pass;
    std::string anchor;
};

struct VerifyOptions {
    std::uint64_t seed = 0xC0FFEE;
    std::string filter;  // keep test_ids containing this substring; empty keeps all
};

/// Runs the registered checks (filtered), sorted by test_id.  Deterministic
/// given the seed: the seed steers random sweeps, never the verdicts.
std::vector<CheckRecord> run_verification(const VerifyOptions& opts = {});

/// test_id values are stable across releases; the registry lives in
/// verify.cpp next to the check definitions.
std::vector<std::string> registered_check_ids();

}  // namespace wco
