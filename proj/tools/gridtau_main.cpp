// gridtau: concordance invariants of links from grid diagrams.
//
// Exit codes: 0 success, 1 invalid input, 2 internal consistency failure,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gridtau/fixtures.hpp"
#include "gridtau/pipeline.hpp"
#include "gridtau/suites.hpp"

namespace {

struct InputFlags {
    std::string braid, qp, grid_file, fixture;

    int count() const {
        return !braid.empty() + !qp.empty() + !grid_file.empty() + !fixture.empty();
    }
};

void add_input_flags(CLI::App* cmd, InputFlags* in) {
    cmd->add_option("--braid", in->braid, "braid word, e.g. \"2: 1 1 1\"");
    cmd->add_option("--qp", in->qp, "quasipositive word, e.g. \"3: (2 | 1)\"");
    cmd->add_option("--grid", in->grid_file, "grid file path");
    cmd->add_option("--fixture", in->fixture, "built-in fixture name");
}

// 0 = ok with outputs set, 1 = input error (message on stderr)
int resolve_input(const InputFlags& in, gridtau::GridDiagram* grid,
                  std::optional<gridtau::BraidWord>* braid,
                  std::optional<gridtau::QuasipositiveWord>* qp, std::string* desc) {
    std::string err;
    if (in.count() != 1) {
        std::cerr << "error: exactly one of --braid/--qp/--grid/--fixture is required\n";
        return 1;
    }
    if (!in.braid.empty()) {
        auto w = gridtau::parse_braid(in.braid, &err);
        if (!w) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        *braid = *w;
        *grid = gridtau::to_grid(*w);
        *desc = "braid " + w->str();
        return 0;
    }
    if (!in.qp.empty()) {
        auto q = gridtau::parse_quasipositive(in.qp, &err);
        if (!q) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        *qp = *q;
        *braid = gridtau::expand_quasipositive(*q);
        *grid = gridtau::to_grid(**braid);
        *desc = "qp " + q->str();
        return 0;
    }
    if (!in.grid_file.empty()) {
        std::ifstream f(in.grid_file);
        if (!f) {
            std::cerr << "error: cannot open " << in.grid_file << "\n";
            return 1;
        }
        std::ostringstream body;
        body << f.rdbuf();
        auto g = gridtau::parse_grid(body.str(), &err);
        if (!g) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        *grid = *g;
        *desc = "grid " + in.grid_file;
        return 0;
    }
    const gridtau::Fixture* fx = gridtau::find_fixture(in.fixture);
    if (!fx) {
        std::cerr << "error: unknown fixture \"" << in.fixture << "\"\n";
        return 1;
    }
    *grid = fx->grid;
    *braid = fx->braid;
    *desc = "fixture " + fx->name;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concordance invariants of links from grid diagrams"};
    app.require_subcommand(1);

    InputFlags in;
    std::string format = "table";
    gridtau::PipelineOptions popts;
    gridtau::SuiteOptions sopts;
    std::string suite = "all";

    CLI::App* compute = app.add_subcommand("compute", "compute an invariant report");
    add_input_flags(compute, &in);
    compute->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    compute->add_flag("--assoc-graded", popts.assoc_graded,
                      "include the bigraded homology table");
    compute->add_option("--max-grid", popts.max_grid, "largest grid size accepted")
        ->check(CLI::Range(2, 16));
    compute->add_option("--threads", popts.threads, "worker threads (0 = auto)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "fixtures|moves|crossing|additivity|quasipositive|"
                                         "bennequin|alternating|oracle|all");
    verify->add_option("--seed", sopts.seed, "random seed");
    verify->add_option("--max-grid", sopts.max_grid, "largest grid size accepted")
        ->check(CLI::Range(2, 16));
    verify->add_option("--threads", sopts.threads, "worker threads (0 = auto)");
    verify->add_option("--trials", sopts.trials, "trial count for randomized suites");

    CLI::App* convert = app.add_subcommand("convert", "emit the grid file of a braid closure");
    add_input_flags(convert, &in);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            gridtau::GridDiagram grid;
            std::optional<gridtau::BraidWord> braid;
            std::optional<gridtau::QuasipositiveWord> qp;
            std::string desc;
            if (int rc = resolve_input(in, &grid, &braid, &qp, &desc)) return rc;
            gridtau::InvariantReport report =
                gridtau::compute_report(grid, popts, braid, qp, desc);
            std::cout << (format == "json" ? report.to_json() : report.to_table());
            return 0;
        }
        if (verify->parsed()) {
            std::vector<gridtau::SuiteResult> results;
            if (suite == "all") {
                results = gridtau::run_all_suites(sopts);
            } else {
                try {
                    results.push_back(gridtau::run_suite(suite, sopts));
                } catch (const std::invalid_argument& e) {
                    std::cerr << "error: " << e.what() << "\n";
                    return 1;
                }
            }
            bool all_pass = true;
            int total = 0;
            for (const auto& r : results) {
                for (const auto& c : r.checks) {
                    std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name
                              << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
                    all_pass = all_pass && c.pass;
                    ++total;
                }
            }
            std::cout << (all_pass ? "OK" : "FAILED") << " (" << total << " checks)\n";
            return all_pass ? 0 : 3;
        }
        if (convert->parsed()) {
            gridtau::GridDiagram grid;
            std::optional<gridtau::BraidWord> braid;
            std::optional<gridtau::QuasipositiveWord> qp;
            std::string desc;
            if (in.count() == 1 && !in.grid_file.empty()) {
                std::cerr << "error: convert expects --braid, --qp, or --fixture\n";
                return 1;
            }
            if (int rc = resolve_input(in, &grid, &braid, &qp, &desc)) return rc;
            std::cout << grid.str();
            return 0;
        }
    } catch (const gridtau::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
