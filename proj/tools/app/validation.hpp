#pragma once

#include <functional>
#include <string>
#include <vector>

#include "config.hpp"
#include "ramsey/averaging.hpp"

namespace ramsey::app {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst deviation (or worst deviation / allowance for MC checks)
    double tolerance = 0.0;
    int trials = 0;
};

using DoubleAverageFn = std::function<AveragedProbability(
    const RegimeQuantities&, const RegimeQuantities&, const AveragingParams&)>;

// Seams for negative controls: a corrupted closed form must make its MC check fail.
struct ValidationHooks {
    DoubleAverageFn double_closed = pe_avg_double;
    DoubleAverageFn triple_closed = pe_avg_triple_closed;
};

std::vector<CheckResult> run_validation(const RunConfig& cfg, const ValidationHooks& hooks = {},
                                        unsigned threads = 1);

// Deterministic key-value report; contains no timings.
std::string format_validation_report(const RunConfig& cfg, const std::vector<CheckResult>& checks);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace ramsey::app
