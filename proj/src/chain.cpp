#include "gridtau/chain.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace gridtau {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

StateRank state_rank(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    StateRank rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_later = perm[i];
        for (int j = 0; j < i; ++j)
            if (perm[j] < perm[i]) --smaller_later;
        rank += static_cast<StateRank>(smaller_later) * factorial(n - 1 - i);
    }
    return rank;
}

void state_unrank(StateRank rank, int n, std::span<int> out) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(n - 1 - i);
        const int k = static_cast<int>(rank / f);
        rank %= f;
        out[i] = pool[k];
        pool.erase(pool.begin() + k);
    }
}

Half j_pairing(std::span<const Point2> p, std::span<const Point2> q) {
    std::int64_t crossings = 0;
    for (const Point2& a : p)
        for (const Point2& b : q) {
            if (a.x2 < b.x2 && a.y2 < b.y2) ++crossings;  // a southwest of b
            if (b.x2 < a.x2 && b.y2 < a.y2) ++crossings;  // b southwest of a
        }
    return Half::from_twice(crossings);
}

namespace {

std::vector<Point2> state_points(std::span<const int> state) {
    std::vector<Point2> pts(state.size());
    for (size_t i = 0; i < state.size(); ++i)
        pts[i] = {2 * static_cast<int>(i), 2 * state[i]};
    return pts;
}

std::vector<Point2> marker_points(const std::vector<int>& rows) {
    std::vector<Point2> pts(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        pts[i] = {2 * static_cast<int>(i) + 1, 2 * rows[i] + 1};
    return pts;
}

}  // namespace

int maslov(const GridDiagram& g, std::span<const int> state, MarkerSet markers) {
    const auto xs = state_points(state);
    const auto ps = marker_points(markers == MarkerSet::O ? g.O : g.X);
    Half m = j_pairing(xs, xs) - j_pairing(xs, ps) - j_pairing(xs, ps) + j_pairing(ps, ps);
    assert(m.is_integer());
    return static_cast<int>(m.as_integer()) + 1;
}

Half alexander(const GridDiagram& g, std::span<const int> state) {
    const int mo = maslov(g, state, MarkerSet::O);
    const int mx = maslov(g, state, MarkerSet::X);
    return Half::from_twice(mo - mx - (g.size - components(g)));
}

namespace {

// Per-grid tables for O(1) marker counts and O(n) gradings per state.
struct GridTables {
    int n;
    int ell;
    // prefix[c][r] = #markers in columns < c with row < r
    std::vector<std::vector<int>> po, px;
    // ne/sw[i][r] = #markers strictly northeast / southwest of point (i, r)
    std::vector<std::vector<int>> ne_o, sw_o, ne_x, sw_x;
    Half j_oo, j_xx;

    explicit GridTables(const GridDiagram& g) : n(g.size), ell(components(g)) {
        auto prefix = [this](const std::vector<int>& rows) {
            std::vector<std::vector<int>> p(n + 1, std::vector<int>(n + 1, 0));
            for (int c = 1; c <= n; ++c)
                for (int r = 1; r <= n; ++r)
                    p[c][r] = p[c - 1][r] + (rows[c - 1] < r ? 1 : 0);
            return p;
        };
        po = prefix(g.O);
        px = prefix(g.X);
        auto corner_counts = [this](const std::vector<int>& rows,
                                    std::vector<std::vector<int>>* ne,
                                    std::vector<std::vector<int>>* sw) {
            ne->assign(n, std::vector<int>(n, 0));
            sw->assign(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) {
                        // marker center (c+1/2, rows[c]+1/2) vs point (i, r)
                        if (c >= i && rows[c] >= r) ++(*ne)[i][r];
                        if (c < i && rows[c] < r) ++(*sw)[i][r];
                    }
        };
        corner_counts(g.O, &ne_o, &sw_o);
        corner_counts(g.X, &ne_x, &sw_x);
        const auto mo = marker_points(g.O);
        const auto mx = marker_points(g.X);
        j_oo = j_pairing(mo, mo);
        j_xx = j_pairing(mx, mx);
    }

    int count_o(int c1, int c2, int r1, int r2) const {  // [c1,c2) x [r1,r2)
        return po[c2][r2] - po[c2][r1] - po[c1][r2] + po[c1][r1];
    }
    int count_x(int c1, int c2, int r1, int r2) const {
        return px[c2][r2] - px[c2][r1] - px[c1][r2] + px[c1][r1];
    }

    // gradings of a state in O(n) + O(n^2) for the state self-pairing
    void gradings(std::span<const int> state, int* m_out, int* a2_out) const {
        std::int64_t jxx2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (state[i] < state[j]) jxx2 += 2;
        std::int64_t ixo_o = 0, ixo_x = 0;
        for (int i = 0; i < n; ++i) {
            ixo_o += ne_o[i][state[i]] + sw_o[i][state[i]];
            ixo_x += ne_x[i][state[i]] + sw_x[i][state[i]];
        }
        const std::int64_t mo2 = jxx2 - 2 * ixo_o + j_oo.twice + 2;
        const std::int64_t mx2 = jxx2 - 2 * ixo_x + j_xx.twice + 2;
        assert(mo2 % 2 == 0 && mx2 % 2 == 0);
        *m_out = static_cast<int>(mo2 / 2);
        *a2_out = static_cast<int>((mo2 - mx2) / 2) - (n - ell);
    }
};

}  // namespace

std::vector<RectangleHit> empty_rectangles(const GridDiagram& g, std::span<const int> state) {
    const GridTables tables(g);
    const int n = g.size;
    std::vector<RectangleHit> hits;
    std::vector<int> swapped(state.begin(), state.end());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = state[i], b = state[j];
            const int lo = std::min(a, b), hi = std::max(a, b);
            bool inner_in = true, inner_out = true, outer_in = true, outer_out = true;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const bool cols = i < k && k < j;
                const bool rows = lo < state[k] && state[k] < hi;
                if (cols && rows) inner_in = false;
                else if (cols) inner_out = false;
                else if (rows) outer_in = false;
                else outer_out = false;
            }
            const int in_o = tables.count_o(i, j, lo, hi);
            const int in_x = tables.count_x(i, j, lo, hi);

            std::copy(state.begin(), state.end(), swapped.begin());
            std::swap(swapped[i], swapped[j]);
            const StateRank to = state_rank(swapped);
            if (a < b) {
                if (inner_in) hits.push_back({to, in_o, in_x});
                if (outer_out)
                    hits.push_back({to, n - (j - i) - (hi - lo) + in_o,
                                    n - (j - i) - (hi - lo) + in_x});
            } else {
                if (inner_out) hits.push_back({to, (j - i) - in_o, (j - i) - in_x});
                if (outer_in) hits.push_back({to, (hi - lo) - in_o, (hi - lo) - in_x});
            }
        }
    }
    return hits;
}

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("GRIDTAU_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

}  // namespace

FilteredComplex build_complex(const GridDiagram& g, ComplexMode mode, int max_size,
                              int threads) {
    if (!g.valid()) throw std::invalid_argument("build_complex: invalid grid");
    if (g.size > max_size || g.size > 12)
        throw std::length_error("build_complex: grid size " + std::to_string(g.size) +
                                " exceeds limit " + std::to_string(std::min(max_size, 12)));
    const int n = g.size;
    const std::uint64_t total = factorial(n);
    const GridTables tables(g);

    FilteredComplex c;
    c.mode = mode;
    c.grid_size = n;
    c.link_components = tables.ell;
    c.num_states = total;
    c.maslov_of.resize(total);
    c.alexander2_of.resize(total);
    c.out.resize(total);

    const bool graded = mode == ComplexMode::Graded;
    auto work = [&](StateRank begin, StateRank end) {
        std::vector<int> perm(n), swapped(n);
        state_unrank(begin, n, perm);
        for (StateRank s = begin; s < end; ++s) {
            int m, a2;
            tables.gradings(perm, &m, &a2);
            // |2M| <= 2 J(x,x) + 4 J(x,P) + 2 J(P,P) + 2 < 8 n^2: int16 holds n <= 12
            c.maslov_of[s] = static_cast<std::int16_t>(m);
            c.alexander2_of[s] = static_cast<std::int16_t>(a2);

            auto& arrows = c.out[s];
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const int a = perm[i], b = perm[j];
                    const int lo = std::min(a, b), hi = std::max(a, b);
                    // interior state points, split by column/row band membership
                    bool inner_in = true, inner_out = true, outer_in = true, outer_out = true;
                    for (int k = 0; k < n; ++k) {
                        if (k == i || k == j) continue;
                        const bool cols = i < k && k < j;
                        const bool rows = lo < perm[k] && perm[k] < hi;
                        if (cols && rows) inner_in = false;
                        else if (cols) inner_out = false;
                        else if (rows) outer_in = false;
                        else outer_out = false;
                    }
                    const int in_o = tables.count_o(i, j, lo, hi);
                    const int in_x = tables.count_x(i, j, lo, hi);
                    int admitted = 0;
                    auto admit = [&](int o_cnt, int x_cnt, bool empty) {
                        if (!empty || o_cnt != 0) return;
                        if (graded && x_cnt != 0) return;
                        ++admitted;
                    };
                    if (a < b) {
                        admit(in_o, in_x, inner_in);
                        admit(n - (j - i) - (hi - lo) + in_o, n - (j - i) - (hi - lo) + in_x,
                              outer_out);
                    } else {
                        admit((j - i) - in_o, (j - i) - in_x, inner_out);
                        admit((hi - lo) - in_o, (hi - lo) - in_x, outer_in);
                    }
                    if (admitted == 1) {
                        std::copy(perm.begin(), perm.end(), swapped.begin());
                        std::swap(swapped[i], swapped[j]);
                        arrows.push_back(static_cast<std::uint32_t>(state_rank(swapped)));
                    }
                    // two admitted rectangles cancel mod 2
                }
            }
            std::sort(arrows.begin(), arrows.end());
            std::next_permutation(perm.begin(), perm.end());
        }
    };

    const int nthreads = std::min<std::uint64_t>(resolve_threads(threads), total);
    if (nthreads <= 1) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const StateRank begin = t * chunk;
            const StateRank end = std::min<std::uint64_t>(begin + chunk, total);
            if (begin >= end) break;
            pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return c;
}

bool d_squared_is_zero(const FilteredComplex& c) {
    std::vector<std::uint32_t> scratch;
    for (StateRank s = 0; s < c.num_states; ++s) {
        scratch.clear();
        for (std::uint32_t y : c.out[s])
            scratch.insert(scratch.end(), c.out[y].begin(), c.out[y].end());
        std::sort(scratch.begin(), scratch.end());
        for (size_t i = 0; i < scratch.size();) {
            size_t j = i;
            while (j < scratch.size() && scratch[j] == scratch[i]) ++j;
            if ((j - i) % 2 != 0) return false;
            i = j;
        }
    }
    return true;
}

}  // namespace gridtau
