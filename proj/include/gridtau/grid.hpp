#pragma once

// Toroidal grid diagrams and the grid moves used for invariance testing.
//
// Conventions: columns run left to right, rows bottom to top.  X[i] and O[i]
// are the marker rows of column i.  Within a column the link runs from X to
// O, within a row from O to X, and vertical segments cross over horizontal
// ones.

#include <optional>
#include <string>
#include <vector>

namespace gridtau {

struct GridDiagram {
    int size = 0;
    std::vector<int> X;  // column -> row of X marker
    std::vector<int> O;  // column -> row of O marker

    bool valid() const;
    std::string str() const;  // grid file format
};

enum class StabKind { XSW, XNE };  // new O at the SW / NE corner of the split cell

// Cycle count of O^{-1} X: the number of link components.
int components(const GridDiagram& g);

// Horizontal reflection; represents the mirror link.
GridDiagram mirror(const GridDiagram& g);

// Corner splice of two knot grids: size n1+n2-1 grid of the connected sum.
// Throws std::invalid_argument if either input is a link.
GridDiagram connected_sum(const GridDiagram& g1, const GridDiagram& g2);

// Grid stabilization splitting the X marker of the given column.
GridDiagram stabilize(const GridDiagram& g, int column, StabKind kind = StabKind::XSW);

// Swap columns `column` and `column`+1.  Legal when the two marker spans are
// nested or disjoint; otherwise returns nullopt and fills `reason`.
std::optional<GridDiagram> commutation_move(const GridDiagram& g, int column,
                                            std::string* reason = nullptr);

// Torus translation by dc columns and dr rows.
GridDiagram translate(const GridDiagram& g, int dc, int dr);

// Undo trivial stabilizations (2x2 cell blocks holding three markers) until
// none remain.  Deterministic; preserves the link type.
GridDiagram destabilize_fully(const GridDiagram& g);

// Grid file format:
//   n = 5
//   X = 2 3 4 0 1
//   O = 0 1 2 3 4
// Rejects non-permutations and shared cells with distinct messages.
std::optional<GridDiagram> parse_grid(const std::string& text, std::string* err = nullptr);

}  // namespace gridtau
