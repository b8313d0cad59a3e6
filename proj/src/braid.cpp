#include "gridtau/braid.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gridtau {

bool BraidWord::valid() const {
    if (strands < 1) return false;
    for (int g : letters) {
        if (g == 0 || std::abs(g) >= strands) return false;
    }
    return true;
}

int BraidWord::positive_count() const {
    return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](int g) { return g > 0; }));
}

int BraidWord::negative_count() const {
    return static_cast<int>(letters.size()) - positive_count();
}

BraidWord BraidWord::mirrored() const {
    BraidWord m{strands, letters};
    for (int& g : m.letters) g = -g;
    return m;
}

std::string BraidWord::str() const {
    std::ostringstream os;
    os << strands << ":";
    for (int g : letters) os << ' ' << g;
    return os.str();
}

bool QuasipositiveWord::valid() const {
    if (strands < 1) return false;
    for (const auto& band : bands) {
        if (band.generator_index < 1 || band.generator_index >= strands) return false;
        for (int g : band.conjugator) {
            if (g == 0 || std::abs(g) >= strands) return false;
        }
    }
    return true;
}

std::string QuasipositiveWord::str() const {
    std::ostringstream os;
    os << strands << ":";
    for (const auto& band : bands) {
        os << " (";
        for (size_t i = 0; i < band.conjugator.size(); ++i) {
            if (i) os << ' ';
            os << band.conjugator[i];
        }
        os << " | " << band.generator_index << ")";
    }
    return os.str();
}

int closure_components(const BraidWord& w) {
    assert(w.valid());
    const int b = w.strands;
    std::vector<int> perm(b);
    std::iota(perm.begin(), perm.end(), 0);
    for (int g : w.letters) {
        int i = std::abs(g) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    std::vector<bool> seen(b, false);
    int cycles = 0;
    for (int s = 0; s < b; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return cycles;
}

BraidWord expand_quasipositive(const QuasipositiveWord& qp) {
    if (!qp.valid()) throw std::invalid_argument("invalid quasipositive word");
    BraidWord w;
    w.strands = qp.strands;
    for (const auto& band : qp.bands) {
        for (int g : band.conjugator) w.letters.push_back(g);
        w.letters.push_back(band.generator_index);
        for (auto it = band.conjugator.rbegin(); it != band.conjugator.rend(); ++it)
            w.letters.push_back(-*it);
    }
    return w;
}

int qp_euler_characteristic(const QuasipositiveWord& qp) {
    return qp.strands - qp.band_count();
}

std::pair<int, int> legendrian_tb_rot(const BraidWord& w) {
    const int np = w.positive_count();
    const int nn = w.negative_count();
    return {np - 2 * nn - w.strands, nn};
}

namespace {

// Basis cycle of the Seifert surface: consecutive occurrences of one braid
// generator index.  `lo < hi` are positions in the word, eps_* their signs.
struct SeifertCycle {
    int index;
    int lo, hi;
    int eps_lo, eps_hi;
};

// Seifert matrix for a word in which every generator index occurs.
std::vector<std::vector<std::int64_t>> seifert_block(const BraidWord& w) {
    std::vector<SeifertCycle> cycles;
    const int c = static_cast<int>(w.letters.size());
    for (int idx = 1; idx < w.strands; ++idx) {
        int prev = -1;
        for (int t = 0; t < c; ++t) {
            if (std::abs(w.letters[t]) != idx) continue;
            if (prev >= 0) {
                cycles.push_back({idx, prev, t,
                                  w.letters[prev] > 0 ? 1 : -1,
                                  w.letters[t] > 0 ? 1 : -1});
            }
            prev = t;
        }
    }
    const int d = static_cast<int>(cycles.size());
    std::vector<std::vector<std::int64_t>> v(d, std::vector<std::int64_t>(d, 0));
    for (int a = 0; a < d; ++a) {
        const auto& e = cycles[a];
        v[a][a] = -(e.eps_lo + e.eps_hi) / 2;
        for (int bb = a + 1; bb < d; ++bb) {
            const auto& f = cycles[bb];
            if (e.index == f.index && e.hi == f.lo) {
                // consecutive cycles sharing the crossing e.hi
                v[a][bb] = (1 + e.eps_hi) / 2;
                v[bb][a] = (e.eps_hi - 1) / 2;
            } else if (std::abs(e.index - f.index) == 1) {
                // adjacent indices link only when the spans interleave
                if (e.lo < f.lo && f.lo < e.hi && e.hi < f.hi) {
                    v[bb][a] = -1;
                } else if (f.lo < e.lo && e.lo < f.hi && f.hi < e.hi) {
                    v[bb][a] = 1;
                }
            }
        }
    }
    return v;
}

// Split a braid at unused generator indices.  Returns rebased factors,
// including one trivial 1-strand factor per crossing-free strand group.
std::vector<BraidWord> split_factors(const BraidWord& w) {
    std::vector<bool> used(w.strands + 1, false);
    for (int g : w.letters) used[std::abs(g)] = true;
    std::vector<BraidWord> factors;
    int lo = 1;  // current factor spans strands [lo, hi]
    for (int hi = 1; hi <= w.strands; ++hi) {
        if (hi < w.strands && used[hi]) continue;
        BraidWord f;
        f.strands = hi - lo + 1;
        for (int g : w.letters) {
            int idx = std::abs(g);
            if (idx >= lo && idx < hi) f.letters.push_back(g > 0 ? idx - lo + 1 : -(idx - lo + 1));
        }
        factors.push_back(std::move(f));
        lo = hi + 1;
    }
    return factors;
}

}  // namespace

SeifertData seifert_matrix(const BraidWord& w) {
    assert(w.valid());
    SeifertData data;
    data.euler_char = w.strands - static_cast<int>(w.letters.size());
    data.components = closure_components(w);
    for (const BraidWord& f : split_factors(w)) {
        auto block = seifert_block(f);
        const size_t off = data.matrix.size();
        const size_t d = block.size();
        for (auto& row : data.matrix) row.resize(off + d, 0);
        for (size_t r = 0; r < d; ++r) {
            std::vector<std::int64_t> row(off + d, 0);
            std::copy(block[r].begin(), block[r].end(), row.begin() + off);
            data.matrix.push_back(std::move(row));
        }
    }
    return data;
}

namespace {

// Exact rational, normalized with a positive denominator.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rat make(__int128 n, __int128 d) {
        if (n == 0) return {0, 1};
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        n /= a;
        d /= a;
        return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
    }
    friend Rat operator+(Rat a, Rat b) {
        return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator-(Rat a, Rat b) {
        return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator*(Rat a, Rat b) {
        return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator/(Rat a, Rat b) {
        return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    }
};

}  // namespace

int symmetric_signature(std::vector<std::vector<std::int64_t>> s) {
    const int n = static_cast<int>(s.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = {s[i][j], 1};

    int sig = 0;
    std::vector<bool> done(n, false);
    int remaining = n;
    while (remaining > 0) {
        int p = -1;
        for (int i = 0; i < n && p < 0; ++i)
            if (!done[i] && m[i][i].num != 0) p = i;
        if (p < 0) {
            // all-zero diagonal: adding row+column b into a makes the
            // diagonal entry 2 m[a][b] without leaving a zero block behind
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n && a < 0; ++j)
                    if (!done[j] && m[i][j].num != 0) { a = i; b = j; }
            }
            if (a < 0) break;  // remaining block is zero
            for (int j = 0; j < n; ++j)
                if (!done[j]) m[a][j] = m[a][j] + m[b][j];
            for (int j = 0; j < n; ++j)
                if (!done[j]) m[j][a] = m[j][a] + m[j][b];
            continue;
        }
        // symmetric congruence pivot: m[i][j] -= m[i][p] m[p][j] / d
        sig += m[p][p].num > 0 ? 1 : -1;
        const Rat d = m[p][p];
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == p || m[i][p].num == 0) continue;
            const Rat f = m[i][p] / d;
            for (int j = 0; j < n; ++j)
                if (!done[j]) m[i][j] = m[i][j] - f * m[p][j];
        }
        for (int i = 0; i < n; ++i)
            if (!done[i] && i != p) m[p][i] = m[i][p] = Rat{0, 1};
        done[p] = true;
        --remaining;
    }
    return sig;
}

int signature(const BraidWord& w) {
    SeifertData data = seifert_matrix(w);
    auto s = data.matrix;
    const size_t d = s.size();
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) s[i][j] += data.matrix[j][i];
    return symmetric_signature(std::move(s));
}

std::optional<BraidWord> parse_braid(const std::string& text, std::string* err) {
    auto fail = [&](const std::string& m) -> std::optional<BraidWord> {
        if (err) *err = m;
        return std::nullopt;
    };
    auto colon = text.find(':');
    if (colon == std::string::npos) return fail("braid: expected \"b: g1 g2 ...\"");
    BraidWord w;
    try {
        size_t pos = 0;
        w.strands = std::stoi(text.substr(0, colon), &pos);
        while (pos < colon && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != colon) return fail("braid: malformed strand count");
    } catch (...) {
        return fail("braid: malformed strand count");
    }
    std::istringstream rest(text.substr(colon + 1));
    int g = 0;
    while (rest >> g) w.letters.push_back(g);
    if (!rest.eof()) return fail("braid: malformed letter");
    if (!w.valid()) return fail("braid: letters must be nonzero with |g| < strands");
    return w;
}

std::optional<QuasipositiveWord> parse_quasipositive(const std::string& text, std::string* err) {
    auto fail = [&](const std::string& m) -> std::optional<QuasipositiveWord> {
        if (err) *err = m;
        return std::nullopt;
    };
    auto colon = text.find(':');
    if (colon == std::string::npos) return fail("qp: expected \"b: (w | i) ...\"");
    QuasipositiveWord qp;
    try {
        qp.strands = std::stoi(text.substr(0, colon));
    } catch (...) {
        return fail("qp: malformed strand count");
    }
    size_t pos = colon + 1;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
        if (text[pos] != '(') return fail("qp: expected '('");
        auto bar = text.find('|', pos);
        auto close = text.find(')', pos);
        if (bar == std::string::npos || close == std::string::npos || bar > close)
            return fail("qp: band must look like (w | i)");
        QuasipositiveBand band;
        std::istringstream ws(text.substr(pos + 1, bar - pos - 1));
        int g = 0;
        while (ws >> g) band.conjugator.push_back(g);
        if (!ws.eof()) return fail("qp: malformed conjugator");
        std::istringstream is(text.substr(bar + 1, close - bar - 1));
        if (!(is >> band.generator_index)) return fail("qp: malformed generator index");
        std::string tail;
        if (is >> tail) return fail("qp: trailing junk in band");
        qp.bands.push_back(std::move(band));
        pos = close + 1;
    }
    if (!qp.valid()) return fail("qp: generator index out of range");
    return qp;
}

}  // namespace gridtau
