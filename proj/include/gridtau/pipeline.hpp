#pragma once

// Orchestration: input -> complexes -> reduction -> quotient -> report.

#include <optional>
#include <stdexcept>
#include <string>

#include "gridtau/braid.hpp"
#include "gridtau/grid.hpp"
#include "gridtau/invariants.hpp"

namespace gridtau {

struct PipelineOptions {
    int max_grid = 10;       // n! states; the state encoding allows n <= 16
    int threads = 0;         // 0: GRIDTAU_THREADS env or hardware concurrency
    bool assoc_graded = false;  // include the bigraded homology table
};

// Internal consistency failure (boundary^2 != 0, failed quotient, broken
// structural law).  The CLI maps this to exit code 2.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Full pipeline on a grid.  When the grid came from a braid or quasipositive
// word, passing it adds the signature and the diagram-level checks.
InvariantReport compute_report(const GridDiagram& g, const PipelineOptions& opts = {},
                               const std::optional<BraidWord>& braid = std::nullopt,
                               const std::optional<QuasipositiveWord>& qp = std::nullopt,
                               const std::string& input_desc = "grid");

InvariantReport compute_report_for_braid(const BraidWord& w, const PipelineOptions& opts = {});
InvariantReport compute_report_for_qp(const QuasipositiveWord& qp, const PipelineOptions& opts = {});

}  // namespace gridtau
