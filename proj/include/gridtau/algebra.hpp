#pragma once

// Binary-field linear algebra and the two independent tau-extraction routes:
// filtered cancellation (fast path) and rank computations straight from the
// definition of the filtration jump levels.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gridtau/chain.hpp"

namespace gridtau {

// Dense bit matrix with word-parallel row XOR.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] |= 1ull << (c % 64); }
    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
    }
    void xor_rows(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words_; ++w) data_[dst * words_ + w] ^= data_[src * words_ + w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t w = 0; w < words_; ++w)
            std::swap(data_[a * words_ + w], data_[b * words_ + w]);
    }
    bool row_zero(std::size_t r) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (data_[r * words_ + w]) return false;
        return true;
    }

    // Row-reduces in place; returns the rank.
    std::size_t eliminate();

    // Rank without disturbing *this.
    std::size_t rank() const {
        BitMatrix copy = *this;
        return copy.eliminate();
    }

    BitMatrix transposed() const;

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

// Surviving generator multiset of a reduced complex: (maslov, doubled
// alexander level) with multiplicity.
struct ReducedComplex {
    std::map<std::pair<int, int>, std::uint64_t> multiset;  // (m, a2) -> count
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [key, cnt] : multiset) t += cnt;
        return t;
    }
};

// Cancels arrows in order of increasing filtration drop (drop-0 arrows first)
// until the differential vanishes; sweeps sources by (A, M, state rank).
// Throws std::runtime_error if boundary^2 != 0.
ReducedComplex filtered_reduce(const FilteredComplex& c);

// Per-Maslov multiset of filtration jump levels, computed definitionally:
// for each level r, dim Im(H_m(Filt_r) -> H_m(total)) by rank computations.
// Keys are Maslov gradings; values are sorted doubled levels with multiplicity.
std::map<int, std::vector<int>> tau_jump_oracle(const FilteredComplex& c);

// Multiset view of a ReducedComplex in the same shape as the oracle output.
std::map<int, std::vector<int>> jump_levels(const ReducedComplex& r);

// Exact homology ranks of the associated-graded complex per (maslov, doubled
// alexander) bigrading.  Requires mode == Graded.
std::map<std::pair<int, int>, std::uint64_t> bigraded_homology(const FilteredComplex& c);

}  // namespace gridtau
