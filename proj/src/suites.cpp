#include "gridtau/suites.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gridtau/fixtures.hpp"
#include "gridtau/pipeline.hpp"
#include "gridtau/rng.hpp"

namespace gridtau {

namespace {

PipelineOptions pipeline_opts(const SuiteOptions& s, bool graded = false) {
    PipelineOptions p;
    p.max_grid = s.max_grid;
    p.threads = s.threads;
    p.assoc_graded = graded;
    return p;
}

std::string tau_signature(const InvariantReport& r) {
    std::ostringstream os;
    os << "l=" << r.components;
    for (const auto& [k2, levels] : r.tau.levels_by_k2) {
        os << " k" << k2 << ":";
        for (Half lv : levels) os << lv.str() << ",";
    }
    return os.str();
}

BraidWord random_braid_with_grid(SuiteRng& rng, const SuiteOptions& opts, GridDiagram* grid,
                                 int max_strands = 3, int max_letters = 6, int min_letters = 2) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        BraidWord w = random_braid(rng, max_strands, max_letters, min_letters);
        GridDiagram g = to_grid(w);
        if (g.size <= opts.random_cap) {
            if (grid) *grid = g;
            return w;
        }
    }
    throw std::runtime_error("random_braid_with_grid: no candidate within the size cap");
}

SuiteResult suite_fixtures(const SuiteOptions& opts) {
    SuiteResult res{"fixtures", {}};
    for (const Fixture& f : fixture_corpus()) {
        InvariantReport r = compute_report(f.grid, pipeline_opts(opts, true), f.braid,
                                           std::nullopt, "fixture " + f.name);
        std::ostringstream detail;
        bool ok = r.components == f.components && r.tau_top.twice == f.tau_top2 &&
                  r.tau_bot.twice == f.tau_bot2 && r.all_checks_pass();
        detail << "l=" << r.components << " tau_top=" << r.tau_top.str()
               << " tau_bot=" << r.tau_bot.str();
        if (f.sigma) {
            ok = ok && r.signature && *r.signature == *f.sigma;
            detail << " sigma=" << (r.signature ? std::to_string(*r.signature) : "?");
        }
        res.checks.push_back({"fixture:" + f.name, ok, detail.str()});

        // the braid-closure grid must reproduce the fixture's invariants
        InvariantReport rb = compute_report_for_braid(f.braid, pipeline_opts(opts));
        const bool same = tau_signature(rb) == tau_signature(r);
        res.checks.push_back({"fixture:" + f.name + ":braid-grid", same,
                              same ? "to_grid closure matches fixture invariants"
                                   : tau_signature(rb) + " vs " + tau_signature(r)});
    }
    return res;
}

SuiteResult suite_moves(const SuiteOptions& opts) {
    SuiteResult res{"moves", {}};
    SuiteRng rng(opts.seed);
    const auto& corpus = fixture_corpus();
    for (int trial = 0; trial < opts.move_sequences; ++trial) {
        const Fixture& f = corpus[rng.below(corpus.size())];
        InvariantReport base = compute_report(f.grid, pipeline_opts(opts), std::nullopt,
                                              std::nullopt, f.name);
        GridDiagram g = f.grid;
        std::ostringstream ops;
        const int steps = 1 + static_cast<int>(rng.below(3));
        for (int s = 0; s < steps; ++s) {
            switch (rng.below(3)) {
                case 0: {
                    if (g.size + 1 > opts.move_cap) break;
                    const int col = static_cast<int>(rng.below(g.size));
                    const StabKind kind = rng.coin() ? StabKind::XSW : StabKind::XNE;
                    g = stabilize(g, col, kind);
                    ops << " stab(" << col << ")";
                    break;
                }
                case 1: {
                    const int col = static_cast<int>(rng.below(g.size - 1));
                    if (auto moved = commutation_move(g, col)) {
                        g = *moved;
                        ops << " comm(" << col << ")";
                    }
                    break;
                }
                default: {
                    const int dc = static_cast<int>(rng.below(g.size));
                    const int dr = static_cast<int>(rng.below(g.size));
                    g = translate(g, dc, dr);
                    ops << " shift(" << dc << "," << dr << ")";
                    break;
                }
            }
        }
        InvariantReport moved = compute_report(g, pipeline_opts(opts), std::nullopt,
                                               std::nullopt, f.name + " after moves");
        const bool ok = tau_signature(moved) == tau_signature(base) &&
                        components(g) == base.components;
        res.checks.push_back({"moves:" + f.name + ":" + std::to_string(trial), ok,
                              ok ? "invariants stable under" + ops.str()
                                 : tau_signature(moved) + " vs " + tau_signature(base)});
    }
    return res;
}

SuiteResult suite_crossing(const SuiteOptions& opts) {
    SuiteResult res{"crossing", {}};
    SuiteRng rng(opts.seed);

    // pinned pairs: unknot <= trefoil <= unknot+1 and trefoil <= T(2,5)
    auto pinned = [&](const char* minus_text, const char* plus_text) {
        BraidWord minus = *parse_braid(minus_text);
        BraidWord plus = *parse_braid(plus_text);
        InvariantReport rm = compute_report(to_grid(minus), pipeline_opts(opts), minus,
                                            std::nullopt, "braid " + minus.str());
        InvariantReport rp = compute_report(to_grid(plus), pipeline_opts(opts), plus,
                                            std::nullopt, "braid " + plus.str());
        CheckResult c = check_crossing_change(rm, rp);
        c.name = std::string("crossing:") + minus_text + " -> " + plus_text;
        res.checks.push_back(c);
    };
    pinned("2: 1 1 -1", "2: 1 1 1");          // unknot -> trefoil
    pinned("2: 1 1 1 1 -1", "2: 1 1 1 1 1");  // trefoil -> T(2,5)

    for (int trial = 0; trial < opts.trials; ++trial) {
        BraidWord plus;
        GridDiagram gplus, gminus;
        BraidWord minus;
        while (true) {
            BraidWord w = random_braid_with_grid(rng, opts, nullptr);
            const int pos = static_cast<int>(rng.below(w.letters.size()));
            plus = w;
            plus.letters[pos] = std::abs(plus.letters[pos]);
            minus = w;
            minus.letters[pos] = -std::abs(minus.letters[pos]);
            gplus = to_grid(plus);
            gminus = to_grid(minus);
            if (gplus.size <= opts.random_cap && gminus.size <= opts.random_cap) break;
        }
        InvariantReport rp = compute_report(gplus, pipeline_opts(opts), plus, std::nullopt,
                                            "braid " + plus.str());
        InvariantReport rm = compute_report(gminus, pipeline_opts(opts), minus, std::nullopt,
                                            "braid " + minus.str());
        CheckResult c = check_crossing_change(rm, rp);
        c.name = "crossing:" + std::to_string(trial);
        c.detail += "  [" + minus.str() + " -> " + plus.str() + "]";
        res.checks.push_back(c);
    }
    return res;
}

SuiteResult suite_additivity(const SuiteOptions& opts) {
    SuiteResult res{"additivity", {}};
    const Fixture* tre = find_fixture("trefoil");
    const Fixture* mir = find_fixture("mirror-trefoil");
    const Fixture* unk = find_fixture("unknot");
    PipelineOptions popts = pipeline_opts(opts);
    popts.max_grid = std::max(popts.max_grid, tre->grid.size * 2 - 1);

    InvariantReport rt = compute_report(tre->grid, popts, std::nullopt, std::nullopt, "trefoil");
    InvariantReport rm = compute_report(mir->grid, popts, std::nullopt, std::nullopt, "mirror");
    InvariantReport ru = compute_report(unk->grid, popts, std::nullopt, std::nullopt, "unknot");

    auto run_sum = [&](const Fixture& a, const Fixture& b, const InvariantReport& ra,
                       const InvariantReport& rb, const std::string& label) {
        GridDiagram s = connected_sum(a.grid, b.grid);
        InvariantReport rs = compute_report(s, popts, std::nullopt, std::nullopt, label);
        CheckResult c = check_additivity(ra, rb, rs);
        c.name = "additivity:" + label;
        res.checks.push_back(c);
    };
    run_sum(*unk, *tre, ru, rt, "unknot#trefoil");
    run_sum(*tre, *tre, rt, rt, "trefoil#trefoil");
    run_sum(*tre, *mir, rt, rm, "trefoil#mirror-trefoil");

    // mirror duality for knots rides along
    const bool dual = rm.tau_top.twice == -rt.tau_top.twice;
    res.checks.push_back({"additivity:mirror-duality", dual,
                          "tau(mK) = " + rm.tau_top.str() + ", -tau(K) = " +
                              Half::from_twice(-rt.tau_top.twice).str()});
    return res;
}

SuiteResult suite_quasipositive(const SuiteOptions& opts) {
    SuiteResult res{"quasipositive", {}};
    SuiteRng rng(opts.seed);
    for (int trial = 0; trial < opts.trials; ++trial) {
        QuasipositiveWord qp;
        GridDiagram g;
        while (true) {
            qp = random_quasipositive(rng, 3, 4);
            g = to_grid(expand_quasipositive(qp));
            if (g.size <= opts.move_cap) break;
        }
        InvariantReport r = compute_report(g, pipeline_opts(opts), expand_quasipositive(qp), qp,
                                           "qp " + qp.str());
        CheckResult c = check_quasipositive(r, qp);
        c.name = "quasipositive:" + std::to_string(trial);
        c.detail += "  [" + qp.str() + "]";
        res.checks.push_back(c);
    }
    return res;
}

SuiteResult suite_bennequin(const SuiteOptions& opts) {
    SuiteResult res{"bennequin", {}};
    SuiteRng rng(opts.seed);
    for (int trial = 0; trial < opts.trials; ++trial) {
        GridDiagram g;
        BraidWord w = random_braid_with_grid(rng, opts, &g);
        InvariantReport r = compute_report(g, pipeline_opts(opts), w, std::nullopt,
                                           "braid " + w.str());
        CheckResult c = check_bennequin(r, w, /*expect_sharp=*/false);
        c.name = "bennequin:" + std::to_string(trial);
        c.detail += "  [" + w.str() + "]";
        res.checks.push_back(c);
    }
    // sharpness on quasipositive representatives
    for (int trial = 0; trial < opts.trials / 2 + 1; ++trial) {
        QuasipositiveWord qp;
        GridDiagram g;
        while (true) {
            qp = random_quasipositive(rng, 3, 4);
            g = to_grid(expand_quasipositive(qp));
            if (g.size <= opts.move_cap) break;
        }
        BraidWord w = expand_quasipositive(qp);
        InvariantReport r = compute_report(g, pipeline_opts(opts), w, qp, "qp " + qp.str());
        CheckResult c = check_bennequin(r, w, /*expect_sharp=*/true);
        c.name = "bennequin:sharp:" + std::to_string(trial);
        c.detail += "  [" + qp.str() + "]";
        res.checks.push_back(c);
    }
    return res;
}

SuiteResult suite_alternating(const SuiteOptions& opts) {
    SuiteResult res{"alternating", {}};
    for (const Fixture& f : fixture_corpus()) {
        if (!f.alternating || !f.sigma) continue;
        InvariantReport r = compute_report(f.grid, pipeline_opts(opts, true), f.braid,
                                           std::nullopt, "fixture " + f.name);
        CheckResult c = check_alternating(r.tau, *r.signature);
        c.name = "alternating:" + f.name;
        res.checks.push_back(c);
        CheckResult d = check_delta_thin(r.bigraded, r.components, *r.signature);
        d.name = "delta_thin:" + f.name;
        res.checks.push_back(d);
    }
    return res;
}

SuiteResult suite_oracle(const SuiteOptions& opts) {
    SuiteResult res{"oracle", {}};
    SuiteRng rng(opts.seed);
    for (int trial = 0; trial < opts.oracle_grids; ++trial) {
        GridDiagram g;
        BraidWord w = random_braid_with_grid(rng, opts, &g);
        FilteredComplex c = build_filtered_complex(g, opts.max_grid, opts.threads);
        const auto fast = jump_levels(filtered_reduce(c));
        const auto slow = tau_jump_oracle(c);
        const bool ok = fast == slow;
        res.checks.push_back({"oracle:" + std::to_string(trial), ok,
                              ok ? "reduction levels match rank-computed jump levels  [" +
                                       w.str() + "]"
                                 : "MISMATCH for " + w.str()});
    }
    return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "fixtures", "moves", "crossing", "additivity",
        "quasipositive", "bennequin", "alternating", "oracle"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "fixtures") return suite_fixtures(opts);
    if (name == "moves") return suite_moves(opts);
    if (name == "crossing") return suite_crossing(opts);
    if (name == "additivity") return suite_additivity(opts);
    if (name == "quasipositive") return suite_quasipositive(opts);
    if (name == "bennequin") return suite_bennequin(opts);
    if (name == "alternating") return suite_alternating(opts);
    if (name == "oracle") return suite_oracle(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts) {
    std::vector<SuiteResult> all;
    for (const std::string& name : suite_names()) all.push_back(run_suite(name, opts));
    return all;
}

}  // namespace gridtau
