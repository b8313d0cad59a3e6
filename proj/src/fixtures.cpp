#include "gridtau/fixtures.hpp"

namespace gridtau {

namespace {

// The X = O + 2 staircase closes up to the left-handed (2, n-2) torus link
// under this project's conventions; its mirror is the right-handed one.
GridDiagram torus2_grid_lh(int n) {
    GridDiagram g;
    g.size = n;
    for (int i = 0; i < n; ++i) {
        g.O.push_back(i);
        g.X.push_back((i + 2) % n);
    }
    return g;
}

GridDiagram torus2_grid_rh(int n) { return mirror(torus2_grid_lh(n)); }

std::vector<Fixture> make_corpus() {
    std::vector<Fixture> all;

    {
        Fixture f;
        f.name = "unknot";
        f.grid = {2, {1, 0}, {0, 1}};
        f.braid = {1, {}};
        f.components = 1;
        f.tau_top2 = 0;
        f.tau_bot2 = 0;
        f.sigma = 0;
        f.alternating = true;
        f.delta2 = 0;
        all.push_back(f);
    }
    {
        Fixture f;
        f.name = "trefoil";
        f.grid = torus2_grid_rh(5);
        f.braid = {2, {1, 1, 1}};
        f.components = 1;
        f.tau_top2 = 2;  // tau = 1
        f.tau_bot2 = 2;
        f.sigma = -2;
        f.alternating = true;
        f.delta2 = 2;
        all.push_back(f);
    }
    {
        Fixture f;
        f.name = "mirror-trefoil";
        f.grid = torus2_grid_lh(5);
        f.braid = {2, {-1, -1, -1}};
        f.components = 1;
        f.tau_top2 = -2;  // tau = -1
        f.tau_bot2 = -2;
        f.sigma = 2;
        f.alternating = true;
        f.delta2 = -2;
        all.push_back(f);
    }
    {
        Fixture f;
        f.name = "figure8";
        // 6x6 presentation verified by its homology: rank pattern (1,3,1) on
        // the delta=0 diagonal and tau=0, which pins the figure-8 among
        // genus-one fibered knots
        f.grid = {6, {1, 0, 2, 3, 5, 4}, {5, 3, 4, 1, 2, 0}};
        f.braid = {3, {1, -2, 1, -2}};
        f.components = 1;
        f.tau_top2 = 0;
        f.tau_bot2 = 0;
        f.sigma = 0;
        f.alternating = true;
        f.delta2 = 0;
        all.push_back(f);
    }
    {
        Fixture f;
        f.name = "hopf";
        f.grid = torus2_grid_rh(4);
        f.braid = {2, {1, 1}};
        f.components = 2;
        f.tau_top2 = 2;  // tau_top = 1
        f.tau_bot2 = 0;  // tau_bot = 0
        f.sigma = -1;
        f.alternating = true;
        f.delta2 = 2;
        all.push_back(f);
    }
    {
        Fixture f;
        f.name = "t2_4";
        f.grid = torus2_grid_rh(6);
        f.braid = {2, {1, 1, 1, 1}};
        f.components = 2;
        f.tau_top2 = 4;  // tau_top = 2
        f.tau_bot2 = 2;  // tau_bot = 1
        f.sigma = -3;
        f.alternating = true;
        f.delta2 = 4;
        all.push_back(f);
    }
    {
        Fixture f;
        f.name = "t2_5";
        f.grid = torus2_grid_rh(7);
        f.braid = {2, {1, 1, 1, 1, 1}};
        f.components = 1;
        f.tau_top2 = 4;  // tau = 2
        f.tau_bot2 = 4;
        f.sigma = -4;
        f.alternating = true;
        f.delta2 = 4;
        all.push_back(f);
    }
    return all;
}

}  // namespace

const std::vector<Fixture>& fixture_corpus() {
    static const std::vector<Fixture> corpus = make_corpus();
    return corpus;
}

const Fixture* find_fixture(const std::string& name) {
    for (const Fixture& f : fixture_corpus())
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace gridtau
