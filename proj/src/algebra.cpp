#include "gridtau/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace gridtau {

std::size_t BitMatrix::eliminate() {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !get(pivot, c)) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank) swap_rows(pivot, rank);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != rank && get(r, c)) xor_rows(r, rank);
        ++rank;
    }
    return rank;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = data_[r * words_ + w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                t.set(w * 64 + b, r);
            }
        }
    return t;
}

namespace {

// Mutable in/out adjacency for the cancellation algorithm.  Lists stay
// sorted; all references point at live generators.
struct Mutable {
    std::vector<std::vector<std::uint32_t>> out, in;
    std::vector<bool> alive;

    static void toggle(std::vector<std::uint32_t>& v, std::uint32_t x) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        if (it != v.end() && *it == x)
            v.erase(it);
        else
            v.insert(it, x);
    }
    static void erase(std::vector<std::uint32_t>& v, std::uint32_t x) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        assert(it != v.end() && *it == x);
        v.erase(it);
    }
};

}  // namespace

ReducedComplex filtered_reduce(const FilteredComplex& c) {
    if (!d_squared_is_zero(c)) throw std::runtime_error("filtered_reduce: boundary^2 != 0");

    const std::uint64_t n = c.num_states;
    Mutable g;
    g.out = c.out;
    g.in.resize(n);
    g.alive.assign(n, true);
    int max_drop = 0;
    for (std::uint64_t s = 0; s < n; ++s)
        for (std::uint32_t y : g.out[s]) {
            g.in[y].push_back(static_cast<std::uint32_t>(s));
            max_drop = std::max(max_drop, c.drop_of(s, y));
        }
    for (auto& v : g.in) std::sort(v.begin(), v.end());

    // sweep order: ascending (A, M, rank)
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (c.alexander2_of[a] != c.alexander2_of[b])
            return c.alexander2_of[a] < c.alexander2_of[b];
        if (c.maslov_of[a] != c.maslov_of[b]) return c.maslov_of[a] < c.maslov_of[b];
        return a < b;
    });

    std::vector<std::uint32_t> in_y, out_x;
    for (int drop = 0; drop <= max_drop; ++drop) {
        bool cancelled = true;
        while (cancelled) {
            cancelled = false;
            for (std::uint32_t x : order) {
                if (!g.alive[x]) continue;
                std::uint32_t y = UINT32_MAX;
                for (std::uint32_t t : g.out[x])
                    if (c.drop_of(x, t) == drop) { y = t; break; }
                if (y == UINT32_MAX) continue;

                in_y = g.in[y];
                out_x = g.out[x];
                g.alive[x] = g.alive[y] = false;

                // zig-zag update: every a hitting y picks up boundary of x
                for (std::uint32_t a : in_y) {
                    if (!g.alive[a]) continue;
                    for (std::uint32_t b : out_x) {
                        if (b == y) continue;
                        Mutable::toggle(g.out[a], b);
                        Mutable::toggle(g.in[b], a);
                    }
                    Mutable::erase(g.out[a], y);
                }
                for (std::uint32_t b : out_x)
                    if (b != y) Mutable::erase(g.in[b], x);
                for (std::uint32_t a : g.in[x])
                    if (g.alive[a]) Mutable::erase(g.out[a], x);
                for (std::uint32_t t : g.out[y])
                    if (g.alive[t]) Mutable::erase(g.in[t], y);
                g.out[x].clear();
                g.out[y].clear();
                g.in[x].clear();
                g.in[y].clear();
                cancelled = true;
            }
        }
    }

    ReducedComplex reduced;
    for (std::uint64_t s = 0; s < n; ++s) {
        if (!g.alive[s]) continue;
        if (!g.out[s].empty())
            throw std::runtime_error("filtered_reduce: nonzero differential after all drops");
        ++reduced.multiset[{c.maslov_of[s], c.alexander2_of[s]}];
    }
    return reduced;
}

std::map<int, std::vector<int>> jump_levels(const ReducedComplex& r) {
    std::map<int, std::vector<int>> by_maslov;
    for (const auto& [key, cnt] : r.multiset)
        for (std::uint64_t k = 0; k < cnt; ++k) by_maslov[key.first].push_back(key.second);
    for (auto& [m, levels] : by_maslov) std::sort(levels.begin(), levels.end());
    return by_maslov;
}

std::map<int, std::vector<int>> tau_jump_oracle(const FilteredComplex& c) {
    // group states by Maslov grading, each sorted by (a2, rank)
    std::map<int, std::vector<std::uint32_t>> by_m;
    for (std::uint64_t s = 0; s < c.num_states; ++s)
        by_m[c.maslov_of[s]].push_back(static_cast<std::uint32_t>(s));
    for (auto& [m, states] : by_m)
        std::sort(states.begin(), states.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (c.alexander2_of[a] != c.alexander2_of[b])
                return c.alexander2_of[a] < c.alexander2_of[b];
            return a < b;
        });

    std::map<int, std::vector<int>> jumps;
    for (const auto& [m, states] : by_m) {
        const auto below_it = by_m.find(m - 1);
        const auto above_it = by_m.find(m + 1);
        const std::size_t dim = states.size();

        std::map<std::uint32_t, std::size_t> col_of;
        for (std::size_t i = 0; i < dim; ++i) col_of[states[i]] = i;
        std::map<std::uint32_t, std::size_t> col_below;
        if (below_it != by_m.end())
            for (std::size_t i = 0; i < below_it->second.size(); ++i)
                col_below[below_it->second[i]] = i;

        // boundaries from grading m+1 span B_m
        std::size_t dim_b = 0;
        BitMatrix b_rows(above_it == by_m.end() ? 0 : above_it->second.size(), dim);
        if (above_it != by_m.end()) {
            std::size_t r = 0;
            for (std::uint32_t s : above_it->second) {
                for (std::uint32_t y : c.out[s]) b_rows.set(r, col_of.at(y));
                ++r;
            }
            dim_b = b_rows.rank();
        }

        const std::size_t below_dim = below_it == by_m.end() ? 0 : below_it->second.size();

        // dim H_m for the final consistency check
        std::size_t rank_full = 0;
        {
            BitMatrix full(dim, below_dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::uint32_t y : c.out[states[i]]) full.set(i, col_below.at(y));
            rank_full = full.eliminate();
        }
        const std::size_t dim_h = dim - rank_full - dim_b;

        std::vector<int> levels;  // ascending distinct a2 values in this grading
        for (std::size_t i = 0; i < dim; ++i) {
            const int a2 = c.alexander2_of[states[i]];
            if (levels.empty() || levels.back() != a2) levels.push_back(a2);
        }

        std::vector<int>& out_levels = jumps[m];
        std::size_t prev_im = 0;
        for (int r : levels) {
            std::size_t prefix = 0;  // states with a2 <= r form a prefix
            while (prefix < dim && c.alexander2_of[states[prefix]] <= r) ++prefix;

            // kernel basis of the differential restricted to Filt_r, via
            // augmented elimination of rows [boundary(s) | e_s]
            BitMatrix aug(prefix, below_dim + prefix);
            for (std::size_t i = 0; i < prefix; ++i) {
                for (std::uint32_t y : c.out[states[i]]) aug.set(i, col_below.at(y));
                aug.set(i, below_dim + i);
            }
            std::size_t rank_d = 0;
            for (std::size_t col = 0; col < below_dim && rank_d < prefix; ++col) {
                std::size_t pivot = rank_d;
                while (pivot < prefix && !aug.get(pivot, col)) ++pivot;
                if (pivot == prefix) continue;
                if (pivot != rank_d) aug.swap_rows(pivot, rank_d);
                for (std::size_t row = 0; row < prefix; ++row)
                    if (row != rank_d && aug.get(row, col)) aug.xor_rows(row, rank_d);
                ++rank_d;
            }

            // dim Im(I_r) = dim(Z_m(Filt_r) + B_m) - dim B_m
            const std::size_t kernel_dim = prefix - rank_d;
            BitMatrix stack(kernel_dim + (above_it == by_m.end() ? 0 : above_it->second.size()),
                            dim);
            for (std::size_t k = 0; k < kernel_dim; ++k)
                for (std::size_t col = 0; col < prefix; ++col)
                    if (aug.get(rank_d + k, below_dim + col)) stack.set(k, col);
            if (above_it != by_m.end()) {
                std::size_t row = kernel_dim;
                for (std::uint32_t s : above_it->second) {
                    for (std::uint32_t y : c.out[s]) stack.set(row, col_of.at(y));
                    ++row;
                }
            }
            const std::size_t im = stack.eliminate() - dim_b;
            if (im < prev_im) throw std::runtime_error("tau_jump_oracle: image dim decreased");
            for (std::size_t k = prev_im; k < im; ++k) out_levels.push_back(r);
            prev_im = im;
        }
        if (prev_im != dim_h)
            throw std::runtime_error("tau_jump_oracle: jump total != homology rank");
        if (out_levels.empty()) jumps.erase(m);
    }
    return jumps;
}

std::map<std::pair<int, int>, std::uint64_t> bigraded_homology(const FilteredComplex& c) {
    if (c.mode != ComplexMode::Graded)
        throw std::invalid_argument("bigraded_homology: complex must be graded");
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> blocks;
    for (std::uint64_t s = 0; s < c.num_states; ++s)
        blocks[{c.maslov_of[s], c.alexander2_of[s]}].push_back(static_cast<std::uint32_t>(s));

    // rank of the differential out of each block
    std::map<std::pair<int, int>, std::size_t> out_rank;
    for (const auto& [key, states] : blocks) {
        const auto below = blocks.find({key.first - 1, key.second});
        if (below == blocks.end()) {
            for (std::uint32_t s : states) assert(c.out[s].empty());
            out_rank[key] = 0;
            continue;
        }
        std::map<std::uint32_t, std::size_t> col_of;
        for (std::size_t i = 0; i < below->second.size(); ++i) col_of[below->second[i]] = i;
        BitMatrix mat(states.size(), below->second.size());
        for (std::size_t r = 0; r < states.size(); ++r)
            for (std::uint32_t y : c.out[states[r]]) mat.set(r, col_of.at(y));
        out_rank[key] = mat.eliminate();
    }

    std::map<std::pair<int, int>, std::uint64_t> ranks;
    for (const auto& [key, states] : blocks) {
        const auto above = out_rank.find({key.first + 1, key.second});
        const std::size_t rank_in = above == out_rank.end() ? 0 : above->second;
        const std::uint64_t h = states.size() - out_rank[key] - rank_in;
        if (h > 0) ranks[key] = h;
    }
    return ranks;
}

}  // namespace gridtau
