#pragma once

// Named verification suites driven by the CLI `verify` command and by the
// acceptance harness.

#include <cstdint>
#include <string>
#include <vector>

#include "gridtau/invariants.hpp"

namespace gridtau {

struct SuiteOptions {
    std::uint64_t seed = 7;
    int max_grid = 10;
    int threads = 0;
    int trials = 25;          // crossing / quasipositive / bennequin trials
    int move_sequences = 50;  // move-invariance sequences
    int oracle_grids = 100;   // reduce-vs-oracle grids
    int move_cap = 8;         // largest grid reached by moves
    int random_cap = 7;       // largest to_grid size accepted for random words
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

const std::vector<std::string>& suite_names();  // excludes "all"
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts);

}  // namespace gridtau
