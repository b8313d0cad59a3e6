#include <stdexcept>

#include "doctest.h"
#include "gridtau/fixtures.hpp"
#include "gridtau/grid.hpp"
#include "gridtau/rng.hpp"

using namespace gridtau;

namespace {
const GridDiagram kUnknot{2, {1, 0}, {0, 1}};
}

TEST_CASE("validity") {
    CHECK(kUnknot.valid());
    CHECK_FALSE(GridDiagram{2, {0, 1}, {0, 1}}.valid());  // shared cells
    CHECK_FALSE(GridDiagram{2, {1, 1}, {0, 1}}.valid());  // not a permutation
    CHECK_FALSE(GridDiagram{1, {0}, {0}}.valid());
}

TEST_CASE("component counts") {
    CHECK(components(kUnknot) == 1);
    GridDiagram split{4, {1, 0, 3, 2}, {0, 1, 2, 3}};  // two stacked unknots
    CHECK(components(split) == 2);
    for (const Fixture& f : fixture_corpus()) CHECK(components(f.grid) == f.components);
}

TEST_CASE("mirror is an involution preserving validity") {
    for (const Fixture& f : fixture_corpus()) {
        GridDiagram m = mirror(f.grid);
        CHECK(m.valid());
        CHECK(components(m) == f.components);
        GridDiagram mm = mirror(m);
        CHECK(mm.X == f.grid.X);
        CHECK(mm.O == f.grid.O);
    }
}

TEST_CASE("connected sum splices knots") {
    GridDiagram s = connected_sum(kUnknot, kUnknot);
    CHECK(s.size == 3);
    CHECK(components(s) == 1);

    const GridDiagram& trefoil = find_fixture("trefoil")->grid;
    GridDiagram tt = connected_sum(trefoil, trefoil);
    CHECK(tt.size == 9);
    CHECK(components(tt) == 1);

    const GridDiagram& hopf = find_fixture("hopf")->grid;
    CHECK_THROWS_AS(connected_sum(trefoil, hopf), std::invalid_argument);

    // structural splice on larger knots, no complex needed
    GridDiagram big = connected_sum(find_fixture("figure8")->grid, find_fixture("t2_5")->grid);
    CHECK(big.size == 12);
    CHECK(components(big) == 1);
}

TEST_CASE("stabilization") {
    GridDiagram s = stabilize(kUnknot, 0, StabKind::XSW);
    CHECK(s.size == 3);
    CHECK(components(s) == 1);
    CHECK_THROWS_AS(stabilize(kUnknot, 5), std::out_of_range);

    SuiteRng rng(21);
    for (const Fixture& f : fixture_corpus()) {
        for (int t = 0; t < 10; ++t) {
            const int col = rng.range(0, f.grid.size - 1);
            const StabKind kind = rng.coin() ? StabKind::XSW : StabKind::XNE;
            GridDiagram g = stabilize(f.grid, col, kind);
            CHECK(g.valid());
            CHECK(g.size == f.grid.size + 1);
            CHECK(components(g) == f.components);
        }
    }
}

TEST_CASE("commutation legality") {
    // interleaved spans refuse to commute
    const GridDiagram& trefoil = find_fixture("trefoil")->grid;
    int legal = 0, illegal = 0;
    for (int i = 0; i + 1 < trefoil.size; ++i) {
        std::string reason;
        if (auto moved = commutation_move(trefoil, i, &reason)) {
            ++legal;
            CHECK(moved->valid());
            CHECK(components(*moved) == 1);
        } else {
            ++illegal;
            CHECK(reason.find("interleaved") != std::string::npos);
        }
    }
    CHECK(legal + illegal == trefoil.size - 1);

    GridDiagram split{4, {1, 0, 3, 2}, {0, 1, 2, 3}};
    auto moved = commutation_move(split, 1);
    REQUIRE(moved);
    CHECK(components(*moved) == 2);

    CHECK_FALSE(commutation_move(split, 3));  // out of range
}

TEST_CASE("translation wraps the torus") {
    for (const Fixture& f : fixture_corpus()) {
        GridDiagram t = translate(f.grid, 1, 1);
        CHECK(t.valid());
        CHECK(components(t) == f.components);
        GridDiagram back = translate(t, -1, -1);
        CHECK(back.X == f.grid.X);
        CHECK(back.O == f.grid.O);
    }
}

TEST_CASE("destabilization undoes stabilization") {
    SuiteRng rng(22);
    for (const Fixture& f : fixture_corpus()) {
        GridDiagram g = f.grid;
        for (int t = 0; t < 3; ++t)
            g = stabilize(g, rng.range(0, g.size - 1), rng.coin() ? StabKind::XSW : StabKind::XNE);
        GridDiagram d = destabilize_fully(g);
        CHECK(components(d) == f.components);
        CHECK(d.size <= f.grid.size);
    }
}

TEST_CASE("grid file format") {
    const std::string text = "n = 2\nX = 1 0\nO = 0 1\n";
    auto g = parse_grid(text);
    REQUIRE(g);
    CHECK(g->X == std::vector<int>{1, 0});
    CHECK(g->str() == text);

    std::string err;
    CHECK_FALSE(parse_grid("n = 2\nX = 1 1\nO = 0 1\n", &err));
    CHECK(err.find("permutation") != std::string::npos);
    CHECK_FALSE(parse_grid("n = 2\nX = 0 1\nO = 0 1\n", &err));
    CHECK(err.find("share") != std::string::npos);
    CHECK_FALSE(parse_grid("garbage", &err));
}
