#pragma once

// Hand-verified fixture corpus: small grids with known invariants, each
// paired with a braid word for the signature-side checks.

#include <optional>
#include <string>
#include <vector>

#include "gridtau/braid.hpp"
#include "gridtau/grid.hpp"

namespace gridtau {

struct Fixture {
    std::string name;
    GridDiagram grid;
    BraidWord braid;
    int components = 1;
    int tau_top2 = 0;  // doubled expected values
    int tau_bot2 = 0;
    std::optional<int> sigma;
    bool alternating = false;
    std::optional<int> delta2;  // doubled expected thin diagonal
};

const std::vector<Fixture>& fixture_corpus();
const Fixture* find_fixture(const std::string& name);

}  // namespace gridtau
