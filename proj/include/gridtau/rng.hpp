#pragma once

// Seeded pseudo-random input generators for the verification suites.  The
// engine is fully specified by the standard; bounded sampling is done by
// hand so runs are reproducible across platforms.

#include <cstdint>
#include <random>
#include <vector>

#include "gridtau/braid.hpp"

namespace gridtau {

class SuiteRng {
public:
    explicit SuiteRng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 engine_;
};

// Random braid word with b in [2, max_strands], c in [min_letters, max_letters].
BraidWord random_braid(SuiteRng& rng, int max_strands, int max_letters, int min_letters = 1);

// Random quasipositive word with small conjugators.
QuasipositiveWord random_quasipositive(SuiteRng& rng, int max_strands, int max_bands);

}  // namespace gridtau
