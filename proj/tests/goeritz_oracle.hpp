#pragma once

// Test-only signature oracle: Goeritz matrix of the checkerboard-colored
// closed braid diagram with the Gordon-Litherland correction.  Independent
// of the Seifert-matrix route in the library; only the exact symmetric
// signature primitive is shared.
//
// Conventions, fixed once against the (2,k) torus closures and the figure
// eight: regions between strands i and i+1 form "gap i"; gaps of even index
// (including the inside region, gap 0, and the outside, gap b) are white.
// A crossing on an odd gap has its white regions east/west, counts eta = sign
// and is of type II (enters the correction term); a crossing on an even gap
// has them north/south, counts eta = -sign and is of type I.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "gridtau/braid.hpp"

namespace gridtau_test {

inline int gl_signature_connected(const gridtau::BraidWord& w) {
    const int b = w.strands;
    const int c = static_cast<int>(w.letters.size());
    if (c == 0) return 0;

    // region ids: gap 0 and gap b get one region each; gap i gets one region
    // per crossing on it, labeled by the crossing position opening it
    std::vector<std::vector<int>> crossings_on(b + 1);  // positions per gap
    for (int t = 0; t < c; ++t) crossings_on[std::abs(w.letters[t])].push_back(t);

    std::vector<std::vector<int>> region_id(b + 1);
    int next_id = 0;
    const int inside = next_id++;
    region_id[0] = {inside};
    for (int i = 1; i < b; ++i)
        for (size_t j = 0; j < crossings_on[i].size(); ++j) region_id[i].push_back(next_id++);
    const int outside = next_id++;
    region_id[b] = {outside};

    // region of gap g at height h (h is never a crossing position of gap g)
    auto region_at = [&](int g, int h) {
        if (g == 0) return inside;
        if (g == b) return outside;
        const auto& pos = crossings_on[g];
        int j = static_cast<int>(pos.size()) - 1;  // wrap region by default
        for (size_t k = 0; k + 1 < pos.size(); ++k)
            if (pos[k] < h && h < pos[k + 1]) j = static_cast<int>(k);
        return region_id[g][j];
    };

    const int white_count = next_id;  // ids are dense; whiteness filtered below
    std::vector<std::vector<std::int64_t>> goeritz(white_count,
                                                   std::vector<std::int64_t>(white_count, 0));
    std::vector<bool> is_white(white_count, false);
    is_white[inside] = true;
    if (b % 2 == 0) is_white[outside] = true;
    for (int i = 2; i < b; i += 2)
        for (int id : region_id[i]) is_white[id] = true;

    int mu = 0;
    for (int t = 0; t < c; ++t) {
        const int i = std::abs(w.letters[t]);
        const int eps = w.letters[t] > 0 ? 1 : -1;
        int u, v, eta;
        if (i % 2 == 1) {
            // white pair east/west of the crossing; type II
            u = region_at(i - 1, t);
            v = region_at(i + 1, t);
            eta = eps;
            mu += eta;
        } else {
            // white pair: the two gap-i regions meeting at the crossing
            const auto& pos = crossings_on[i];
            const auto& ids = region_id[i];
            const int j = static_cast<int>(std::lower_bound(pos.begin(), pos.end(), t) -
                                           pos.begin());
            u = ids[j];                                         // region opened at t
            v = ids[(j + pos.size() - 1) % pos.size()];         // region closed at t
            eta = -eps;
        }
        if (u == v) continue;
        goeritz[u][v] -= eta;
        goeritz[v][u] -= eta;
    }

    std::vector<int> white_ids;
    for (int id = 0; id < white_count; ++id)
        if (is_white[id]) white_ids.push_back(id);
    for (int u : white_ids) {
        std::int64_t diag = 0;
        for (int v : white_ids)
            if (v != u) diag -= goeritz[u][v];
        goeritz[u][u] = diag;
    }

    // reduced matrix: drop the inside region
    std::vector<std::vector<std::int64_t>> reduced;
    for (int u : white_ids) {
        if (u == inside) continue;
        std::vector<std::int64_t> row;
        for (int v : white_ids)
            if (v != inside) row.push_back(goeritz[u][v]);
        reduced.push_back(std::move(row));
    }
    return gridtau::symmetric_signature(std::move(reduced)) - mu;
}

// Splits at unused generator indices and sums the factor signatures.
inline int gl_signature(const gridtau::BraidWord& w) {
    std::vector<bool> used(w.strands + 1, false);
    for (int g : w.letters) used[std::abs(g)] = true;
    int total = 0;
    int lo = 1;
    for (int hi = 1; hi <= w.strands; ++hi) {
        if (hi < w.strands && used[hi]) continue;
        gridtau::BraidWord f;
        f.strands = hi - lo + 1;
        for (int g : w.letters) {
            const int idx = std::abs(g);
            if (idx >= lo && idx < hi) f.letters.push_back(g > 0 ? idx - lo + 1 : -(idx - lo + 1));
        }
        total += gl_signature_connected(f);
        lo = hi + 1;
    }
    return total;
}

}  // namespace gridtau_test
