/// Suite orchestration: runs every identity check of the selected suites
/// over sampled parameters and streams NDJSON reports.
#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "qracah/faults.hpp"
#include "qracah/report.hpp"

namespace qracah {

struct SuiteConfig {
    std::vector<std::string> suites = {"qnum", "racah1", "tratnik", "griffiths", "aw3", "aw4"};
    int n_max = -1;      // -1: per-suite defaults (racah1/aw3 8, tratnik 6, griffiths 5, aw4 4)
    int trials = 3;
    std::uint64_t seed = 1;
    int bound = 9;       // numerator/denominator bound for sampled square roots
    bool mutation_test = false;
    bool with_timing = true;
};

/// Default N cap for a suite; exact-arithmetic cost grows steeply with N.
int default_n_max(const std::string& suite);

/// Runs the configured suites; one report line per identity check is
/// written to `out` in deterministic (suite, N, trial, identity) order.
/// Returns 0 iff every check passed.
int run_suites(const SuiteConfig& config, std::ostream& out);

/// Faults exercised by the mutation mode.
inline constexpr Fault kMutationFaults[3] = {Fault::FlipPhiPlus, Fault::FlipFMinus,
                                             Fault::FlipAPlusPlus};

}  // namespace qracah
