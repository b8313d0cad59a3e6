#pragma once

// Braid words, quasipositive band words, Seifert matrices and signatures.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridtau {

struct GridDiagram;  // grid.hpp

struct BraidWord {
    int strands = 1;                // b >= 1
    std::vector<int> letters;       // g != 0, |g| < b; g>0 is sigma_g, g<0 is sigma_{|g|}^{-1}

    bool valid() const;
    int positive_count() const;     // n+
    int negative_count() const;     // n-
    int writhe() const { return positive_count() - negative_count(); }

    BraidWord mirrored() const;     // negate every letter
    std::string str() const;        // "b: g1 g2 ... gc"
};

// One band is a conjugate w * sigma_i * w^{-1}.
struct QuasipositiveBand {
    std::vector<int> conjugator;    // braid letters on the same strand count
    int generator_index = 1;        // i in {1,...,b-1}
};

struct QuasipositiveWord {
    int strands = 1;
    std::vector<QuasipositiveBand> bands;

    bool valid() const;
    int band_count() const { return static_cast<int>(bands.size()); }
    std::string str() const;        // "b: (w | i) (w | i) ..."
};

struct SeifertData {
    std::vector<std::vector<std::int64_t>> matrix;  // Seifert linking matrix V
    int euler_char = 0;                             // chi = b - c
    int components = 0;                             // link components of the closure
};

// Number of cycles of the strand permutation of the closure.
int closure_components(const BraidWord& w);

// Concatenation of w_k sigma_{i_k} w_k^{-1} over all bands; n+ - n- = m.
BraidWord expand_quasipositive(const QuasipositiveWord& qp);

// Euler characteristic b - m of the quasipositive ribbon surface.
int qp_euler_characteristic(const QuasipositiveWord& qp);

// Thurston-Bennequin and rotation numbers of the Legendrian representative
// obtained by stabilizing at each negative letter: tb = n+ - 2n- - b, rot = n-.
std::pair<int, int> legendrian_tb_rot(const BraidWord& w);

// Seifert matrix of the closure from Seifert's algorithm on the braid diagram.
// Split closures (missing generator indices) are assembled block-diagonally.
SeifertData seifert_matrix(const BraidWord& w);

// Signature of V + V^T, computed by exact integer congruence diagonalization.
int signature(const BraidWord& w);

// Signature of an arbitrary symmetric integer matrix (exact).
int symmetric_signature(std::vector<std::vector<std::int64_t>> s);

// Deterministic grid diagram of the braid closure, oriented by the downward
// braid strands.
GridDiagram to_grid(const BraidWord& w);

// Text formats: "2: 1 1 1" and "3: (2 | 1) ( | 2)".  Empty conjugators may be
// written "(|1)".  Returns std::nullopt and fills err on malformed input.
std::optional<BraidWord> parse_braid(const std::string& text, std::string* err = nullptr);
std::optional<QuasipositiveWord> parse_quasipositive(const std::string& text, std::string* err = nullptr);

}  // namespace gridtau
