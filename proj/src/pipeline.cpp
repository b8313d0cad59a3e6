#include "gridtau/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace gridtau {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

InvariantReport compute_report(const GridDiagram& g, const PipelineOptions& opts,
                               const std::optional<BraidWord>& braid,
                               const std::optional<QuasipositiveWord>& qp,
                               const std::string& input_desc) {
    if (!g.valid()) throw std::invalid_argument("compute_report: invalid grid");
    InvariantReport report;
    report.input = input_desc;
    report.grid_size = g.size;
    report.components = components(g);
    const int n = g.size, ell = report.components;

    FilteredComplex filtered = build_filtered_complex(g, opts.max_grid, opts.threads);
    if (!d_squared_is_zero(filtered)) throw ConsistencyError("boundary^2 != 0 (filtered mode)");
    report.checks.push_back({"d_squared_filtered", true, ""});

    ReducedComplex reduced = filtered_reduce(filtered);
    report.total_rank = reduced.total();
    {
        const std::uint64_t want = 1ull << (n - 1);
        if (report.total_rank != want)
            throw ConsistencyError("total homology rank " + std::to_string(report.total_rank) +
                                   " != 2^(n-1) = " + std::to_string(want));
        report.checks.push_back({"rank_law", true, "rank = 2^" + std::to_string(n - 1)});
    }
    {
        // Poincare specialization at t=1: count per Maslov grading is binomial
        std::map<int, std::uint64_t> per_m;
        for (const auto& [key, cnt] : reduced.multiset) per_m[key.first] += cnt;
        bool ok = true;
        for (const auto& [m, cnt] : per_m)
            if (m > 0 || cnt != binomial(n - 1, -m)) ok = false;
        if (!ok) throw ConsistencyError("Poincare specialization != (1+q^{-1})^{n-1}");
        report.checks.push_back({"poincare_specialization", true, "(1+q^{-1})^{n-1}"});
    }

    BigradedPolynomial quotient;
    try {
        quotient = divide_stabilization_factor(BigradedPolynomial::from_reduced(reduced), n - ell);
    } catch (const NotDivisible& e) {
        throw ConsistencyError(std::string("stabilization factor division failed: ") + e.what());
    }
    if (quotient.total() != static_cast<std::int64_t>(1ull << (ell - 1)))
        throw ConsistencyError("stabilization quotient size != 2^(l-1)");
    report.checks.push_back({"stabilization_divisibility", true,
                             "exact quotient by (1+q^{-1}t^{-1})^" + std::to_string(n - ell)});

    report.tau = tau_function(quotient, ell);
    report.tau_top = report.tau.tau_top();
    report.tau_bot = report.tau.tau_bot();
    report.checks.push_back(check_monotonicity(report.tau));
    report.slice_genus_lower_bound =
        Half::from_twice(std::max(std::abs(report.tau_top.twice), std::abs(report.tau_bot.twice)));

    if (braid) {
        report.signature = signature(*braid);
        // slice bound coherence: the Seifert surface of the closure gives
        // 2|tau| <= l - chi for every jump level
        const int chi = braid->strands - static_cast<int>(braid->letters.size());
        const bool coherent = report.slice_genus_lower_bound.twice <= ell - chi;
        report.checks.push_back({"seifert_slice_bound", coherent,
                                 "2 max|tau| = " +
                                     std::to_string(report.slice_genus_lower_bound.twice) +
                                     " <= l - chi(Seifert) = " + std::to_string(ell - chi)});
        report.checks.push_back(check_bennequin(report, *braid, /*expect_sharp=*/qp.has_value()));
        const bool positive = braid->negative_count() == 0 && !braid->letters.empty();
        std::vector<bool> used(braid->strands, false);
        for (int g2 : braid->letters) used[std::abs(g2)] = true;
        bool all_used = braid->strands == 1;
        if (braid->strands > 1)
            all_used = std::all_of(used.begin() + 1, used.end(), [](bool u) { return u; });
        if (positive && all_used) report.checks.push_back(check_sqp_fibered(report, *braid));
    }
    if (qp) {
        report.euler_char_bound = Half::from_twice(ell - qp_euler_characteristic(*qp));
        report.checks.push_back(check_quasipositive(report, *qp));
    }

    if (opts.assoc_graded) {
        FilteredComplex graded = build_graded_complex(g, opts.max_grid, opts.threads);
        if (!d_squared_is_zero(graded)) throw ConsistencyError("boundary^2 != 0 (graded mode)");
        report.checks.push_back({"d_squared_graded", true, ""});
        auto ranks = bigraded_homology(graded);
        BigradedPolynomial hfk;
        try {
            hfk = divide_stabilization_factor(BigradedPolynomial::from_ranks(ranks), n - ell);
        } catch (const NotDivisible& e) {
            throw ConsistencyError(std::string("bigraded stabilization division failed: ") +
                                   e.what());
        }
        for (const auto& [key, v] : hfk.coeff)
            if (v > 0) report.bigraded[key] = static_cast<std::uint64_t>(v);
        report.delta = delta_thinness(report.bigraded);
        if (ell == 1) {
            // symmetry rank(A, M) = rank(-A, M - 2A)
            bool sym = true;
            for (const auto& [key, v] : report.bigraded) {
                const auto [m, a2] = key;
                auto it = report.bigraded.find({m - a2, -a2});
                if (it == report.bigraded.end() || it->second != v) sym = false;
            }
            report.checks.push_back({"hfk_symmetry", sym, sym ? "rank(A,M) = rank(-A,M-2A)" :
                                     "symmetry rank(A,M) = rank(-A,M-2A) violated"});
        }
    }
    return report;
}

InvariantReport compute_report_for_braid(const BraidWord& w, const PipelineOptions& opts) {
    GridDiagram g = to_grid(w);
    return compute_report(g, opts, w, std::nullopt, "braid " + w.str());
}

InvariantReport compute_report_for_qp(const QuasipositiveWord& qp, const PipelineOptions& opts) {
    BraidWord w = expand_quasipositive(qp);
    GridDiagram g = to_grid(w);
    return compute_report(g, opts, w, qp, "qp " + qp.str());
}

}  // namespace gridtau
