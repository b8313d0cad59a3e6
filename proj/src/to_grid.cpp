#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "gridtau/braid.hpp"
#include "gridtau/grid.hpp"

namespace gridtau {

// Sweep construction of a grid for the braid closure.  Strands flow downward
// through the braid body; at each letter the under strand jogs horizontally
// into a fresh column inserted next to the over strand, which keeps the over
// strand vertical through the crossing (verticals cross over horizontals).
// Closure arcs return along nested hooks on the right.  The raw grid has
// 2b + c columns; trivial stabilizations are then peeled off.
GridDiagram to_grid(const BraidWord& w) {
    if (!w.valid()) throw std::invalid_argument("to_grid: invalid braid word");
    const int b = w.strands;
    const int c = static_cast<int>(w.letters.size());
    const int n = 2 * b + c;

    // row ids, top to bottom: hooks' top rows H_1..H_b, letter rows 0..c-1,
    // hooks' bottom rows R_b..R_1 (arc p=1 is the outermost hook)
    auto top_row = [&](int p) { return p - 1; };
    auto letter_row = [&](int t) { return b + t; };  // t is 0-based
    auto bottom_row = [&](int p) { return b + c + (b - p); };

    // column ids: seeds 0..b-1, letter columns b..b+c-1, hooks b+c..2b+c-1
    auto seed_col = [&](int p) { return p - 1; };
    auto hook_col = [&](int p) { return b + c + (p - 1); };

    std::vector<int> x_row(n, -1), o_row(n, -1);
    std::vector<int> order;  // column ids, left to right
    for (int p = 1; p <= b; ++p) order.push_back(seed_col(p));
    for (int p = b; p >= 1; --p) order.push_back(hook_col(p));

    std::vector<int> col_of(b + 1);  // braid position -> current column id
    for (int p = 1; p <= b; ++p) {
        col_of[p] = seed_col(p);
        x_row[seed_col(p)] = top_row(p);   // seed run starts at the hook's top row
        o_row[hook_col(p)] = top_row(p);   // hook run ends there
        x_row[hook_col(p)] = bottom_row(p);
    }

    for (int t = 0; t < c; ++t) {
        const int g = w.letters[t];
        const int i = std::abs(g);
        const int fresh = b + t;
        const int over = g > 0 ? col_of[i] : col_of[i + 1];
        const int under = g > 0 ? col_of[i + 1] : col_of[i];
        auto at = std::find(order.begin(), order.end(), over);
        assert(at != order.end());
        order.insert(g > 0 ? at : at + 1, fresh);
        o_row[under] = letter_row(t);  // under strand's run ends here
        x_row[fresh] = letter_row(t);  // and restarts in the fresh column
        col_of[i] = g > 0 ? fresh : over;
        col_of[i + 1] = g > 0 ? over : fresh;
    }
    for (int p = 1; p <= b; ++p) o_row[col_of[p]] = bottom_row(p);

    // Read sweep rows directly as bottom-up grid rows.  Keeping this flip-free
    // is what makes positive letters close up to positive crossings under the
    // vertical-over-horizontal grid convention (pinned by tau(sigma_1^3) = 1).
    GridDiagram raw;
    raw.size = n;
    raw.X.resize(n);
    raw.O.resize(n);
    for (int pos = 0; pos < n; ++pos) {
        const int id = order[pos];
        raw.X[pos] = x_row[id];
        raw.O[pos] = o_row[id];
    }
    if (!raw.valid() || components(raw) != closure_components(w))
        throw std::logic_error("to_grid: sweep produced an inconsistent grid");

    GridDiagram out = destabilize_fully(raw);
    if (!out.valid() || components(out) != closure_components(w))
        throw std::logic_error("to_grid: destabilization broke the grid");
    return out;
}

}  // namespace gridtau
