#include "gridtau/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace gridtau {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

BigradedPolynomial BigradedPolynomial::from_reduced(const ReducedComplex& r) {
    BigradedPolynomial p;
    for (const auto& [key, cnt] : r.multiset) p.coeff[key] = static_cast<std::int64_t>(cnt);
    return p;
}

BigradedPolynomial BigradedPolynomial::from_ranks(
    const std::map<std::pair<int, int>, std::uint64_t>& ranks) {
    BigradedPolynomial p;
    for (const auto& [key, cnt] : ranks) p.coeff[key] = static_cast<std::int64_t>(cnt);
    return p;
}

std::int64_t BigradedPolynomial::total() const {
    std::int64_t t = 0;
    for (const auto& [key, v] : coeff) t += v;
    return t;
}

BigradedPolynomial divide_stabilization_factor(const BigradedPolynomial& p, int power) {
    if (power < 0) throw NotDivisible("negative stabilization power");
    BigradedPolynomial cur = p;
    for (int step = 0; step < power; ++step) {
        // quotient by (1 + q^{-1} t^{-1}):  Q[m,a] = P[m,a] - Q[m+1,a+1],
        // processed from the top Maslov grading down
        BigradedPolynomial q;
        for (auto it = cur.coeff.rbegin(); it != cur.coeff.rend(); ++it) {
            const auto [m, a2] = it->first;
            std::int64_t v = it->second;
            auto upper = q.coeff.find({m + 1, a2 + 2});
            if (upper != q.coeff.end()) v -= upper->second;
            if (v < 0) throw NotDivisible("negative coefficient in stabilization quotient");
            if (v != 0) q.coeff[{m, a2}] = v;
        }
        // verify Q * (1 + q^{-1}t^{-1}) == P exactly
        BigradedPolynomial back;
        for (const auto& [key, v] : q.coeff) {
            back.coeff[key] += v;
            back.coeff[{key.first - 1, key.second - 2}] += v;
        }
        std::erase_if(back.coeff, [](const auto& kv) { return kv.second == 0; });
        if (back != cur) throw NotDivisible("nonzero remainder in stabilization quotient");
        cur = std::move(q);
    }
    return cur;
}

Half TauFunction::tau_top() const {
    const auto& v = levels_by_k2.rbegin()->second;
    assert(v.size() == 1);
    return v.front();
}

Half TauFunction::tau_bot() const {
    const auto& v = levels_by_k2.begin()->second;
    assert(v.size() == 1);
    return v.front();
}

TauFunction tau_function(const BigradedPolynomial& quotient, int components) {
    const int ell = components;
    TauFunction tf;
    tf.components = ell;
    for (const auto& [key, cnt] : quotient.coeff) {
        const auto [m, a2] = key;
        if (m > 0 || m < -(ell - 1))
            throw std::runtime_error("tau_function: quotient Maslov support outside [-(l-1), 0]");
        const int k2 = 2 * m + (ell - 1);
        auto& levels = tf.levels_by_k2[k2];
        for (std::int64_t i = 0; i < cnt; ++i) levels.push_back(Half::from_twice(a2));
    }
    for (int m = -(ell - 1); m <= 0; ++m) {
        const int k2 = 2 * m + (ell - 1);
        auto it = tf.levels_by_k2.find(k2);
        const std::uint64_t want = binomial(ell - 1, -m);
        if (it == tf.levels_by_k2.end() || it->second.size() != want)
            throw std::runtime_error("tau_function: grading multiplicity != binomial(l-1, k)");
        std::sort(it->second.begin(), it->second.end());
    }
    return tf;
}

bool InvariantReport::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

nlohmann::ordered_json half_json(Half h) {
    if (h.is_integer()) return h.as_integer();
    return h.str();
}

}  // namespace

std::string InvariantReport::to_json() const {
    nlohmann::ordered_json j;
    j["input"] = input;
    j["grid_size"] = grid_size;
    j["components"] = components;
    j["total_homology_rank"] = total_rank;
    j["tau_top"] = half_json(tau_top);
    j["tau_bot"] = half_json(tau_bot);
    nlohmann::ordered_json tf = nlohmann::ordered_json::array();
    for (auto it = tau.levels_by_k2.rbegin(); it != tau.levels_by_k2.rend(); ++it) {
        nlohmann::ordered_json entry;
        entry["k"] = half_json(Half::from_twice(it->first));
        nlohmann::ordered_json levels = nlohmann::ordered_json::array();
        for (Half lv : it->second) levels.push_back(half_json(lv));
        entry["levels"] = levels;
        tf.push_back(entry);
    }
    j["tau_function"] = tf;
    j["signature"] = signature ? nlohmann::ordered_json(*signature) : nlohmann::ordered_json(nullptr);
    j["slice_genus_lower_bound"] = half_json(slice_genus_lower_bound);
    j["delta"] = delta ? half_json(*delta) : nlohmann::ordered_json(nullptr);
    if (!bigraded.empty()) {
        nlohmann::ordered_json table = nlohmann::ordered_json::array();
        for (auto it = bigraded.rbegin(); it != bigraded.rend(); ++it) {
            nlohmann::ordered_json row;
            row["maslov"] = it->first.first;
            row["alexander"] = half_json(Half::from_twice(it->first.second));
            row["rank"] = it->second;
            table.push_back(row);
        }
        j["bigraded_homology"] = table;
    }
    nlohmann::ordered_json cj = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "pass" : "fail";
        e["detail"] = c.detail;
        cj.push_back(e);
    }
    j["checks"] = cj;
    return j.dump(2) + "\n";
}

std::string InvariantReport::to_table() const {
    std::ostringstream os;
    os << "input:        " << input << "\n";
    os << "grid size:    " << grid_size << "\n";
    os << "components:   " << components << "\n";
    os << "total rank:   " << total_rank << "\n";
    os << "tau_top:      " << tau_top.str() << "\n";
    os << "tau_bot:      " << tau_bot.str() << "\n";
    if (signature) os << "signature:    " << *signature << "\n";
    os << "g4 bound:     " << slice_genus_lower_bound.str() << "\n";
    if (delta) os << "delta:        " << delta->str() << "\n";
    os << "tau function (k : levels):\n";
    for (auto it = tau.levels_by_k2.rbegin(); it != tau.levels_by_k2.rend(); ++it) {
        os << "  " << std::setw(6) << Half::from_twice(it->first).str() << " :";
        for (Half lv : it->second) os << ' ' << lv.str();
        os << "\n";
    }
    if (!bigraded.empty()) {
        os << "bigraded homology (M, A : rank):\n";
        for (auto it = bigraded.rbegin(); it != bigraded.rend(); ++it)
            os << "  " << std::setw(4) << it->first.first << ", " << std::setw(6)
               << Half::from_twice(it->first.second).str() << " : " << it->second << "\n";
    }
    for (const CheckResult& c : checks)
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.name
           << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    return os.str();
}

CheckResult check_monotonicity(const TauFunction& tau) {
    const Half top = tau.tau_top(), bot = tau.tau_bot();
    bool ok = bot <= top && top <= bot + Half::whole(tau.components - 1);
    for (const auto& [k2, levels] : tau.levels_by_k2)
        for (Half lv : levels) ok = ok && bot <= lv && lv <= top;
    return {"monotonicity",
            ok,
            "tau_bot=" + bot.str() + " tau_top=" + top.str() + " l=" + std::to_string(tau.components)};
}

CheckResult check_alternating(const TauFunction& tau, int sigma) {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& [k2, levels] : tau.levels_by_k2)
        for (Half lv : levels)
            if (lv.twice != k2 - sigma) {  // level == k - sigma/2, doubled
                ok = false;
                detail << "level " << lv.str() << " at k=" << Half::from_twice(k2).str()
                       << " != k - sigma/2; ";
            }
    if (ok) detail << "tau_k = k - (" << sigma << ")/2 at every grading";
    return {"alternating", ok, detail.str()};
}

CheckResult check_quasipositive(const InvariantReport& report, const QuasipositiveWord& qp) {
    const int chi = qp_euler_characteristic(qp);
    // 2 tau_top = l - chi; tau_top.twice is exactly 2 tau_top
    const bool ok = report.tau_top.twice == report.components - chi;
    return {"quasipositive", ok,
            "2 tau_top = " + std::to_string(report.tau_top.twice) + ", l - (b-m) = " +
                std::to_string(report.components - chi)};
}

CheckResult check_sqp_fibered(const InvariantReport& report, const BraidWord& w) {
    const int chi = w.strands - static_cast<int>(w.letters.size());
    const bool positive = w.negative_count() == 0;
    std::vector<bool> used(w.strands, false);
    for (int gg : w.letters) used[std::abs(gg)] = true;
    bool all_used = true;
    for (int i = 1; i < w.strands; ++i) all_used = all_used && used[i];
    const bool ok = positive && all_used && report.tau_top.twice == report.components - chi;
    return {"sqp_fibered", ok,
            "2 tau_top = " + std::to_string(report.tau_top.twice) + ", l - chi(Seifert) = " +
                std::to_string(report.components - chi)};
}

CheckResult check_bennequin(const InvariantReport& report, const BraidWord& braid,
                            bool expect_sharp) {
    const auto [tb, rot] = legendrian_tb_rot(braid);
    // tb + rot + l - 1 <= 2 tau_top - 1, doubled to stay integral
    const std::int64_t lhs2 = 2 * (tb + rot + report.components - 1);
    const std::int64_t rhs2 = 2 * report.tau_top.twice - 2;
    const bool holds = lhs2 <= rhs2;
    const bool sharp = lhs2 == rhs2;
    const bool ok = holds && (!expect_sharp || sharp);
    std::ostringstream detail;
    detail << "tb+rot+l-1 = " << Half::from_twice(lhs2).str() << " vs 2 tau_top - 1 = "
           << Half::from_twice(rhs2).str() << (expect_sharp ? " (sharpness required)" : "");
    return {"bennequin", ok, detail.str()};
}

CheckResult check_crossing_change(const InvariantReport& minus, const InvariantReport& plus) {
    if (minus.components != plus.components)
        return {"crossing_change", false, "component counts differ"};
    auto within = [](Half lo, Half hi) {
        return lo <= hi && hi <= lo + Half::whole(1);
    };
    const bool ok = within(minus.tau_top, plus.tau_top) && within(minus.tau_bot, plus.tau_bot);
    return {"crossing_change", ok,
            "tau_top " + minus.tau_top.str() + " <= " + plus.tau_top.str() +
                " <= +1; tau_bot " + minus.tau_bot.str() + " <= " + plus.tau_bot.str() + " <= +1"};
}

CheckResult check_additivity(const InvariantReport& k1, const InvariantReport& k2,
                             const InvariantReport& sum) {
    if (k1.components != 1 || k2.components != 1 || sum.components != 1)
        return {"additivity", false, "connected-sum additivity applies to knots"};
    const bool ok = sum.tau_top.twice == k1.tau_top.twice + k2.tau_top.twice;
    return {"additivity", ok,
            "tau(K1#K2)=" + sum.tau_top.str() + " tau(K1)+tau(K2)=" +
                Half::from_twice(k1.tau_top.twice + k2.tau_top.twice).str()};
}

std::optional<Half> delta_thinness(const std::map<std::pair<int, int>, std::uint64_t>& table) {
    std::optional<int> delta2;
    for (const auto& [key, cnt] : table) {
        if (cnt == 0) continue;
        const int d2 = key.second - 2 * key.first;  // 2(A - M)
        if (!delta2) delta2 = d2;
        if (*delta2 != d2) return std::nullopt;
    }
    if (!delta2) return std::nullopt;
    return Half::from_twice(*delta2);
}

CheckResult check_delta_thin(const std::map<std::pair<int, int>, std::uint64_t>& table,
                             int components, int sigma) {
    const auto delta = delta_thinness(table);
    if (!delta) return {"delta_thin", false, "bigraded table is not on one diagonal"};
    const int expect2 = (components - 1) - sigma;  // 2 delta = (l-1) - sigma
    const bool ok = delta->twice == expect2;
    return {"delta_thin", ok,
            "delta=" + delta->str() + " expected " + Half::from_twice(expect2).str()};
}

}  // namespace gridtau
