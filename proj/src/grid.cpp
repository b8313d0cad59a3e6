#include "gridtau/grid.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace gridtau {

namespace {

bool is_permutation(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace

bool GridDiagram::valid() const {
    if (size < 2) return false;
    if (!is_permutation(X, size) || !is_permutation(O, size)) return false;
    for (int i = 0; i < size; ++i)
        if (X[i] == O[i]) return false;
    return true;
}

std::string GridDiagram::str() const {
    std::ostringstream os;
    os << "n = " << size << "\nX =";
    for (int v : X) os << ' ' << v;
    os << "\nO =";
    for (int v : O) os << ' ' << v;
    os << "\n";
    return os.str();
}

int components(const GridDiagram& g) {
    assert(g.valid());
    const int n = g.size;
    std::vector<int> o_inv(n);
    for (int i = 0; i < n; ++i) o_inv[g.O[i]] = i;
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = o_inv[g.X[t]]) seen[t] = true;
    }
    return cycles;
}

GridDiagram mirror(const GridDiagram& g) {
    const int n = g.size;
    GridDiagram m;
    m.size = n;
    m.X.resize(n);
    m.O.resize(n);
    for (int i = 0; i < n; ++i) {
        m.X[i] = g.X[n - 1 - i];
        m.O[i] = g.O[n - 1 - i];
    }
    return m;
}

GridDiagram translate(const GridDiagram& g, int dc, int dr) {
    const int n = g.size;
    auto wrap = [n](int v) { return ((v % n) + n) % n; };
    GridDiagram t;
    t.size = n;
    t.X.resize(n);
    t.O.resize(n);
    for (int i = 0; i < n; ++i) {
        t.X[i] = wrap(g.X[wrap(i + dc)] + dr);
        t.O[i] = wrap(g.O[wrap(i + dc)] + dr);
    }
    return t;
}

GridDiagram connected_sum(const GridDiagram& g1, const GridDiagram& g2) {
    if (components(g1) != 1 || components(g2) != 1)
        throw std::invalid_argument("connected_sum: both inputs must be knots");
    const int n1 = g1.size, n2 = g2.size;

    // Rotate so g1's last column carries its X in the top row and g2's first
    // column carries its O in the bottom row; then the two grids share one
    // column and one row at the splice corner.
    int c1 = static_cast<int>(std::find(g1.X.begin(), g1.X.end(), n1 - 1) - g1.X.begin());
    GridDiagram a = translate(g1, c1 + 1, 0);  // X at row n1-1 now in the last column
    int c2 = static_cast<int>(std::find(g2.O.begin(), g2.O.end(), 0) - g2.O.begin());
    GridDiagram b = translate(g2, c2, 0);      // O at row 0 now in the first column

    const int n = n1 + n2 - 1;
    GridDiagram s;
    s.size = n;
    s.X.assign(n, -1);
    s.O.assign(n, -1);
    // a occupies columns/rows [0, n1-1]; b occupies [n1-1, n-1].  The deleted
    // markers are a's top-row X and b's bottom-row O; the shared column keeps
    // a's O and b's X, and the shared row keeps a's O and b's X.
    for (int i = 0; i < n1; ++i) {
        if (i < n1 - 1) s.X[i] = a.X[i];
        s.O[i] = a.O[i];
    }
    for (int i = 0; i < n2; ++i) {
        int col = i + n1 - 1;
        if (i > 0) s.O[col] = b.O[i] + n1 - 1;
        s.X[col] = b.X[i] + n1 - 1;
    }
    if (!s.valid() || components(s) != 1)
        throw std::logic_error("connected_sum: splice produced an inconsistent grid");
    return s;
}

GridDiagram stabilize(const GridDiagram& g, int column, StabKind kind) {
    if (column < 0 || column >= g.size)
        throw std::out_of_range("stabilize: column out of range");
    const int n = g.size;
    const int i = column, r = g.X[i];

    // Split the X's cell into a 2x2 block carrying X's on the antidiagonal
    // and the new O at the SW or NE corner.  The survivors of the split
    // column and row land on the far side of the new O.
    const bool sw = kind == StabKind::XSW;
    GridDiagram s;
    s.size = n + 1;
    s.X.assign(n + 1, -1);
    s.O.assign(n + 1, -1);
    auto newcol = [&](int c) { return (sw ? c < i : c <= i) ? c : c + 1; };
    auto newrow = [&](int v) { return (sw ? v < r : v <= r) ? v : v + 1; };
    for (int c = 0; c < n; ++c) {
        if (c != i) s.X[newcol(c)] = newrow(g.X[c]);
        s.O[newcol(c)] = newrow(g.O[c]);
    }
    s.X[i] = r + 1;
    s.X[i + 1] = r;
    if (sw)
        s.O[i] = r;
    else
        s.O[i + 1] = r + 1;
    if (!s.valid()) throw std::logic_error("stabilize: produced an invalid grid");
    return s;
}

std::optional<GridDiagram> commutation_move(const GridDiagram& g, int column,
                                            std::string* reason) {
    auto fail = [&](const std::string& m) -> std::optional<GridDiagram> {
        if (reason) *reason = m;
        return std::nullopt;
    };
    if (column < 0 || column + 1 >= g.size) return fail("column out of range");
    const int i = column;
    const int lo1 = std::min(g.X[i], g.O[i]), hi1 = std::max(g.X[i], g.O[i]);
    const int lo2 = std::min(g.X[i + 1], g.O[i + 1]), hi2 = std::max(g.X[i + 1], g.O[i + 1]);
    const bool disjoint = hi1 < lo2 || hi2 < lo1;
    const bool nested = (lo1 < lo2 && hi2 < hi1) || (lo2 < lo1 && hi1 < hi2);
    if (!disjoint && !nested)
        return fail("interleaved marker spans: columns " + std::to_string(i) + "," +
                    std::to_string(i + 1) + " do not commute");
    GridDiagram s = g;
    std::swap(s.X[i], s.X[i + 1]);
    std::swap(s.O[i], s.O[i + 1]);
    return s;
}

GridDiagram destabilize_fully(const GridDiagram& g) {
    GridDiagram cur = g;
    bool changed = true;
    while (changed && cur.size > 2) {
        changed = false;
        const int n = cur.size;
        for (int i = 0; i < n && !changed; ++i) {
            const int i2 = (i + 1) % n;
            for (int r = 0; r < n && !changed; ++r) {
                const int r2 = (r + 1) % n;
                // look for a 2x2 cell block (columns i,i2; rows r,r2, cyclic)
                // holding exactly three markers
                auto in_block = [&](int c, int rr) { return (c == i || c == i2) && (rr == r || rr == r2); };
                int count = 0;
                for (int c : {i, i2}) {
                    count += in_block(c, cur.X[c]);
                    count += in_block(c, cur.O[c]);
                }
                if (count != 3) continue;
                int col2 = -1;  // block column holding two markers
                for (int c : {i, i2})
                    if (in_block(c, cur.X[c]) && in_block(c, cur.O[c])) col2 = c;
                if (col2 < 0) continue;
                const int other_col = col2 == i ? i2 : i;
                const int row2 = in_block(other_col, cur.X[other_col]) ? cur.X[other_col]
                                                                       : cur.O[other_col];
                const int other_row = row2 == r ? r2 : r;

                // inverse stabilization: drop the doubled column and row; the
                // free column's block marker moves to the block's free corner
                GridDiagram next;
                next.size = n - 1;
                auto shrink = [&](int v) { return v > row2 ? v - 1 : v; };
                for (int c = 0; c < n; ++c) {
                    if (c == col2) continue;
                    int xv = (c == other_col && cur.X[c] == row2) ? other_row : cur.X[c];
                    int ov = (c == other_col && cur.O[c] == row2) ? other_row : cur.O[c];
                    next.X.push_back(shrink(xv));
                    next.O.push_back(shrink(ov));
                }
                if (!next.valid())
                    throw std::logic_error("destabilize_fully: produced an invalid grid");
                cur = std::move(next);
                changed = true;
            }
        }
    }
    return cur;
}

std::optional<GridDiagram> parse_grid(const std::string& text, std::string* err) {
    auto fail = [&](const std::string& m) -> std::optional<GridDiagram> {
        if (err) *err = m;
        return std::nullopt;
    };
    std::istringstream is(text);
    std::string line;
    GridDiagram g;
    auto read_line = [&](const std::string& key, std::vector<int>* out) -> bool {
        if (!std::getline(is, line)) return false;
        std::istringstream ls(line);
        std::string name, eq;
        if (!(ls >> name >> eq) || name != key || eq != "=") return false;
        if (out) {
            int v;
            while (ls >> v) out->push_back(v);
            return ls.eof();
        }
        return static_cast<bool>(ls >> g.size);
    };
    if (!read_line("n", nullptr) || g.size < 2) return fail("grid: expected \"n = <int>\" with n >= 2");
    if (!read_line("X", &g.X)) return fail("grid: expected \"X = i0 i1 ...\"");
    if (!read_line("O", &g.O)) return fail("grid: expected \"O = i0 i1 ...\"");
    if (!is_permutation(g.X, g.size)) return fail("grid: X is not a permutation of 0.." + std::to_string(g.size - 1));
    if (!is_permutation(g.O, g.size)) return fail("grid: O is not a permutation of 0.." + std::to_string(g.size - 1));
    for (int i = 0; i < g.size; ++i)
        if (g.X[i] == g.O[i])
            return fail("grid: X and O share the cell in column " + std::to_string(i));
    return g;
}

}  // namespace gridtau
