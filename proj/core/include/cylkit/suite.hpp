// The acceptance battery: fourteen independent checks over the whole engine,
// runnable as a block or filtered by tag.  Checks are deterministic given
// (config, seed); each uses its own seed stream derived from the config seed
// and its index, so a filtered run reproduces the full run's draws.
#pragma once

#include <string>
#include <vector>

#include "cylkit/verdict.hpp"

namespace cylkit {

struct CriterionResult {
    int index = 0;        // 1-based position in the battery
    std::string tag;      // stable short name, usable with --only
    bool pass = false;
    std::string detail;   // deterministic one-line account
};

struct SuiteReport {
    RunConfig config;
    std::vector<CriterionResult> results;
    bool all_pass = false;
};

// Runs the battery (or the single criterion named by only_tag) under the
// given config.  Unknown tags yield an empty result list.
SuiteReport run_acceptance_suite(const RunConfig& config,
                                 const std::string& only_tag = "");

// The battery's tags in order, for usage messages.
std::vector<std::string> acceptance_tags();

}  // namespace cylkit
