#pragma once

// Grid states, Maslov/Alexander gradings, empty rectangles, and the filtered
// and associated-graded chain complexes over F_2.
//
// States are permutations (column -> row), identified with their rank in
// lexicographic order.  A state places points at the integer lattice (i,
// x(i)); markers sit at cell centers (i+1/2, r+1/2).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gridtau/grid.hpp"
#include "gridtau/halfint.hpp"

namespace gridtau {

using StateRank = std::uint64_t;

std::uint64_t factorial(int n);

// Lexicographic rank of a permutation and its inverse.
StateRank state_rank(std::span<const int> perm);
void state_unrank(StateRank rank, int n, std::span<int> out);

// Planar point with doubled coordinates (markers live at half-integers).
struct Point2 {
    int x2;
    int y2;
};

// J(P,Q) = (I(P,Q) + I(Q,P)) / 2 where I counts pairs of P x Q with the
// first point strictly southwest of the second.
Half j_pairing(std::span<const Point2> p, std::span<const Point2> q);

enum class MarkerSet { O, X };

// M_P(x) = J(x,x) - 2 J(x,P) + J(P,P) + 1 for P the chosen marker set.
int maslov(const GridDiagram& g, std::span<const int> state, MarkerSet markers);

// A(x) = (M_O(x) - M_X(x))/2 - (n - l)/2, returned as a Half.
Half alexander(const GridDiagram& g, std::span<const int> state);

struct RectangleHit {
    StateRank to;
    int o_count;
    int x_count;
};

// All empty rectangles out of `state`: rectangles connecting it to states
// differing in two columns, with interior free of state points, reported
// with their O and X marker counts.  Two of the four torus rectangles on
// each column pair point out of the state.
std::vector<RectangleHit> empty_rectangles(const GridDiagram& g, std::span<const int> state);

enum class ComplexMode { Filtered, Graded };

// Boundary arrow target plus the Alexander drop it carries.
struct FilteredComplex {
    ComplexMode mode = ComplexMode::Filtered;
    int grid_size = 0;
    int link_components = 0;
    std::uint64_t num_states = 0;
    std::vector<std::int16_t> maslov_of;      // per state rank
    std::vector<std::int16_t> alexander2_of;  // doubled Alexander grading
    std::vector<std::vector<std::uint32_t>> out;  // sorted arrow targets, mod 2

    Half alexander_of(StateRank s) const { return Half::from_twice(alexander2_of[s]); }
    int drop_of(StateRank from, StateRank to) const {
        return (alexander2_of[from] - alexander2_of[to]) / 2;
    }
};

// Builds the complex over all n! states.  Filtered mode counts rectangles
// avoiding O (drop = x_count); graded mode avoids both O and X.  Enumeration
// is data-parallel over `threads` workers with a deterministic merge.
// Throws std::length_error above `max_size`.
FilteredComplex build_complex(const GridDiagram& g, ComplexMode mode,
                              int max_size = 10, int threads = 0);

inline FilteredComplex build_filtered_complex(const GridDiagram& g, int max_size = 10,
                                              int threads = 0) {
    return build_complex(g, ComplexMode::Filtered, max_size, threads);
}
inline FilteredComplex build_graded_complex(const GridDiagram& g, int max_size = 10,
                                            int threads = 0) {
    return build_complex(g, ComplexMode::Graded, max_size, threads);
}

// Verifies boundary^2 = 0 over F_2.
bool d_squared_is_zero(const FilteredComplex& c);

}  // namespace gridtau
