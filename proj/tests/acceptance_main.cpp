// Acceptance harness: runs every gate with its stated bound and prints one
// pass/fail line per criterion.  Exit code 0 only if all gates pass.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gridtau/fixtures.hpp"
#include "gridtau/pipeline.hpp"
#include "gridtau/suites.hpp"

using namespace gridtau;

namespace {

struct Gate {
    std::string label;
    bool pass = false;
    std::string detail;
};

std::vector<Gate> gates;
bool all_reports_monotone = true;
bool all_structural_pass = true;
int reports_computed = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long vm_peak_kb() {
    std::ifstream f("/proc/self/status");
    std::string line;
    while (std::getline(f, line))
        if (line.rfind("VmPeak:", 0) == 0) {
            std::istringstream is(line.substr(7));
            long kb = 0;
            is >> kb;
            return kb;
        }
    return -1;
}

// every report computed in this run feeds criteria 5 and 7
InvariantReport tracked_report(const GridDiagram& g, const PipelineOptions& opts,
                               const std::optional<BraidWord>& braid,
                               const std::optional<QuasipositiveWord>& qp,
                               const std::string& desc) {
    InvariantReport r = compute_report(g, opts, braid, qp, desc);
    ++reports_computed;
    for (const CheckResult& c : r.checks) {
        if (c.name == "monotonicity" && !c.pass) all_reports_monotone = false;
        if ((c.name == "d_squared_filtered" || c.name == "d_squared_graded" ||
             c.name == "rank_law" || c.name == "poincare_specialization" ||
             c.name == "stabilization_divisibility") &&
            !c.pass)
            all_structural_pass = false;
    }
    return r;
}

void add_gate(const std::string& label, bool pass, const std::string& detail) {
    gates.push_back({label, pass, detail});
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << label << "  " << detail << "\n"
              << std::flush;
}

bool suite_gate(const std::string& label, const SuiteResult& res, const std::string& extra) {
    int failed = 0;
    std::string first_fail;
    for (const CheckResult& c : res.checks)
        if (!c.pass) {
            ++failed;
            if (first_fail.empty()) first_fail = c.name + ": " + c.detail;
        }
    std::ostringstream detail;
    detail << res.checks.size() << " checks";
    if (!extra.empty()) detail << ", " << extra;
    if (failed) detail << "; first failure: " << first_fail;
    add_gate(label, failed == 0, detail.str());
    return failed == 0;
}

void criterion_fixtures() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;
    double worst = 0;
    for (const Fixture& f : fixture_corpus()) {
        const auto f0 = std::chrono::steady_clock::now();
        InvariantReport r = tracked_report(f.grid, {}, f.braid, std::nullopt, f.name);
        const double dt = seconds_since(f0);
        worst = std::max(worst, dt);
        bool this_ok = r.tau_top.twice == f.tau_top2 && r.tau_bot.twice == f.tau_bot2 &&
                       r.components == f.components && dt < 5.0;
        if (f.sigma) {
            this_ok = this_ok && r.signature && *r.signature == *f.sigma;
            // alternating formula tau = k - sigma/2 at the extremes
            if (f.alternating)
                this_ok = this_ok && check_alternating(r.tau, *f.sigma).pass;
        }
        if (!this_ok) {
            ok = false;
            detail << f.name << " failed; ";
        }
    }
    // trefoil tau equals g4 from the quasipositive word (b=2, m=3)
    {
        QuasipositiveWord tre{2, {{{}, 1}, {{}, 1}, {{}, 1}}};
        InvariantReport r = tracked_report(find_fixture("trefoil")->grid, {},
                                           expand_quasipositive(tre), tre, "trefoil qp");
        ok = ok && check_quasipositive(r, tre).pass;
    }
    // T(2,5): tau = g3 = g4 = 2 through the positive-braid Seifert surface
    {
        const Fixture* f = find_fixture("t2_5");
        InvariantReport r = tracked_report(f->grid, {}, f->braid, std::nullopt, "t2_5");
        ok = ok && check_sqp_fibered(r, f->braid).pass && r.tau_top == Half::whole(2);
    }
    std::ostringstream summary;
    summary << fixture_corpus().size() << " fixtures, worst " << worst << " s (< 5 s each)"
            << (detail.str().empty() ? "" : "; " + detail.str())
            << "; total " << seconds_since(t0) << " s";
    add_gate("criterion 1: fixture values", ok, summary.str());
}

void criterion_additivity() {
    const auto t0 = std::chrono::steady_clock::now();
    const Fixture* tre = find_fixture("trefoil");
    const Fixture* mir = find_fixture("mirror-trefoil");
    PipelineOptions opts;
    opts.max_grid = 9;
    InvariantReport rt = tracked_report(tre->grid, opts, std::nullopt, std::nullopt, "trefoil");
    GridDiagram tt = connected_sum(tre->grid, tre->grid);
    GridDiagram tm = connected_sum(tre->grid, mir->grid);
    InvariantReport rtt = tracked_report(tt, opts, std::nullopt, std::nullopt, "t#t");
    InvariantReport rtm = tracked_report(tm, opts, std::nullopt, std::nullopt, "t#m");
    const double dt = seconds_since(t0);
    const bool ok = tt.size == 9 && tm.size == 9 && rtt.tau_top == Half::whole(2) &&
                    rtm.tau_top == Half::whole(0) &&
                    rtt.tau_top.twice == 2 * rt.tau_top.twice && dt < 600.0;
    std::ostringstream detail;
    detail << "tau(t#t)=" << rtt.tau_top.str() << " tau(t#mt)=" << rtm.tau_top.str()
           << " on n=9 grids in " << dt << " s (< 600 s)";
    add_gate("criterion 2: connected-sum additivity", ok, detail.str());
}

void criterion_performance() {
    // any n = 8 input in < 60 s and < 4 GB
    const auto t0 = std::chrono::steady_clock::now();
    BraidWord w = *parse_braid("2: 1 1 1 1 1 1");  // (2,6) torus link, n = 8
    GridDiagram g = to_grid(w);
    PipelineOptions opts;
    opts.assoc_graded = true;
    InvariantReport r = tracked_report(g, opts, w, std::nullopt, "t2_6");
    const double dt = seconds_since(t0);
    const long peak = vm_peak_kb();
    const bool ok = g.size == 8 && dt < 60.0 && peak > 0 && peak < 4L * 1024 * 1024 &&
                    r.tau_top == Half::whole(3);
    std::ostringstream detail;
    detail << "n=8 pipeline " << dt << " s (< 60 s), VmPeak " << peak / 1024 << " MB (< 4096 MB)";
    add_gate("criterion 10: performance gate", ok, detail.str());

    if (std::getenv("GRIDTAU_ACCEPT_N10")) {
        const auto t1 = std::chrono::steady_clock::now();
        BraidWord w10 = *parse_braid("2: 1 1 1 1 1 1 1 1");  // (2,8) torus link, n = 10
        GridDiagram g10 = to_grid(w10);
        PipelineOptions o10;
        o10.max_grid = 10;
        InvariantReport r10 = tracked_report(g10, o10, w10, std::nullopt, "t2_8");
        const double dt10 = seconds_since(t1);
        add_gate("criterion 10 (optional): n=10",
                 g10.size == 10 && dt10 < 1800.0 && r10.tau_top == Half::whole(4),
                 "n=10 pipeline " + std::to_string(dt10) + " s (< 1800 s)");
    } else {
        std::cout << "[skip] criterion 10 (optional): n=10 gate; set GRIDTAU_ACCEPT_N10=1 "
                     "to run it\n";
    }
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteOptions sopts;
    sopts.seed = 7;

    criterion_fixtures();
    criterion_additivity();

    {
        SuiteOptions qp = sopts;
        qp.trials = 25;
        suite_gate("criterion 3: quasipositive sharpness (25 words)",
                   run_suite("quasipositive", qp), "2 tau_top = l - (b - m) each");
    }
    {
        SuiteOptions cr = sopts;
        cr.trials = 25;
        suite_gate("criterion 4: crossing-change suite (25 pairs)", run_suite("crossing", cr),
                   "tau monotone under one sign flip");
    }
    {
        SuiteOptions bq = sopts;
        bq.trials = 25;
        suite_gate("criterion 6: Bennequin suite (25 braids + sharpness)",
                   run_suite("bennequin", bq), "tb+rot+l-1 <= 2 tau_top - 1");
    }
    {
        const auto t1 = std::chrono::steady_clock::now();
        SuiteOptions oc = sopts;
        oc.oracle_grids = 100;
        const SuiteResult res = run_suite("oracle", oc);
        std::ostringstream extra;
        extra << seconds_since(t1) << " s (< 900 s)";
        const bool in_time = seconds_since(t1) < 900.0;
        suite_gate("criterion 7: structural invariants + reduce == jump oracle (100 grids)",
                   res, extra.str());
        if (!in_time) gates.back().pass = false;
    }
    {
        SuiteOptions mv = sopts;
        mv.move_sequences = 50;
        mv.move_cap = 8;
        suite_gate("criterion 8: move invariance (50 sequences)", run_suite("moves", mv),
                   "stabilize/commute/translate, n <= 8");
    }
    suite_gate("criterion 9: delta-thinness of alternating fixtures",
               run_suite("alternating", sopts), "delta = (l-1)/2 - sigma/2");

    criterion_performance();

    add_gate("criterion 5: monotonicity on every computed report", all_reports_monotone,
             std::to_string(reports_computed) + " reports, tau_bot <= levels <= tau_top <= "
                                                "tau_bot + l - 1");
    add_gate("criterion 7b: structural checks on every computed report", all_structural_pass,
             "boundary^2, rank 2^{n-1}, Poincare, exact stabilization quotient");

    int failed = 0;
    for (const Gate& g : gates)
        if (!g.pass) ++failed;
    std::cout << (failed ? "ACCEPTANCE FAILED" : "ACCEPTANCE OK") << ": "
              << gates.size() - failed << "/" << gates.size() << " gates in "
              << seconds_since(t0) << " s\n";
    return failed ? 1 : 0;
}
