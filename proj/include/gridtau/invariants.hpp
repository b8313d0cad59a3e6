#pragma once

// Tau extraction from reduced data, the stabilization-factor quotient, and
// the theorem checks assembled into an InvariantReport.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include "gridtau/algebra.hpp"
#include "gridtau/braid.hpp"
#include "gridtau/halfint.hpp"

namespace gridtau {

// Laurent polynomial in q (Maslov) and t (Alexander, half-integer exponents
// stored doubled).  Coefficients of generator-counting polynomials are >= 0.
struct BigradedPolynomial {
    std::map<std::pair<int, int>, std::int64_t> coeff;  // (q exponent, doubled t exponent)

    static BigradedPolynomial from_reduced(const ReducedComplex& r);
    static BigradedPolynomial from_ranks(const std::map<std::pair<int, int>, std::uint64_t>& ranks);

    std::int64_t total() const;
    bool operator==(const BigradedPolynomial&) const = default;
};

// Exact quotient by (1 + q^{-1} t^{-1})^power.  Throws NotDivisible on any
// negative intermediate coefficient or nonzero remainder.
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
BigradedPolynomial divide_stabilization_factor(const BigradedPolynomial& p, int power);

// Levels of the tau function per homology grading k of the knotification
// ambient manifold: k runs over {-(l-1)/2, ..., (l-1)/2}.
struct TauFunction {
    int components = 1;
    std::map<int, std::vector<Half>> levels_by_k2;  // doubled k -> sorted levels

    Half tau_top() const;  // unique level at k = (l-1)/2
    Half tau_bot() const;  // unique level at k = -(l-1)/2
};

// Grid Maslov gradings {0,...,-(l-1)} of the quotient map to k = m + (l-1)/2.
// Throws std::runtime_error if the quotient support or the per-grading
// multiplicities are not the expected binomial pattern.
TauFunction tau_function(const BigradedPolynomial& quotient, int components);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct InvariantReport {
    std::string input;
    int grid_size = 0;
    int components = 0;
    std::uint64_t total_rank = 0;
    Half tau_top;
    Half tau_bot;
    TauFunction tau;
    std::optional<int> signature;                 // braid inputs only
    Half slice_genus_lower_bound;                 // max(|tau_top|, |tau_bot|)
    std::optional<Half> euler_char_bound;         // (l - chi)/2 for qp inputs
    std::optional<Half> delta;                    // when the bigraded table is thin
    std::map<std::pair<int, int>, std::uint64_t> bigraded;  // optional HFK table
    std::vector<CheckResult> checks;

    bool all_checks_pass() const;
    std::string to_json() const;   // stable key order, exact half-integers
    std::string to_table() const;  // fixed width, k descending
};

// Theorem checks.  Each returns a named pass/fail with detail.
CheckResult check_monotonicity(const TauFunction& tau);
CheckResult check_alternating(const TauFunction& tau, int sigma);
CheckResult check_quasipositive(const InvariantReport& report, const QuasipositiveWord& qp);
CheckResult check_sqp_fibered(const InvariantReport& report, const BraidWord& positive_braid);
CheckResult check_bennequin(const InvariantReport& report, const BraidWord& braid,
                            bool expect_sharp);
CheckResult check_crossing_change(const InvariantReport& minus, const InvariantReport& plus);
CheckResult check_additivity(const InvariantReport& k1, const InvariantReport& k2,
                             const InvariantReport& sum);

// delta = A - M when the divided bigraded table lies on one diagonal.
std::optional<Half> delta_thinness(const std::map<std::pair<int, int>, std::uint64_t>& table);
CheckResult check_delta_thin(const std::map<std::pair<int, int>, std::uint64_t>& table,
                             int components, int sigma);

}  // namespace gridtau
