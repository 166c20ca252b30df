#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quadric {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    // GF(2) inner product.
    bool dot(const BitVector& other) const;
    bool any() const;
    std::size_t count() const;
    std::vector<std::size_t> ones() const;

    std::uint64_t* data() noexcept { return words_.data(); }
    const std::uint64_t* data() const noexcept { return words_.data(); }

    friend bool operator==(const BitVector&, const BitVector&) = default;
    std::string str() const;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// A·x = rhs over GF(2), A given column by column.
struct LinearSystemGF2 {
    std::size_t rows = 0;
    std::vector<BitVector> columns;
    BitVector rhs;
};

// Row-reduces A once (columns taken from the last to the first) and keeps the
// row transform, so later right-hand sides cost one pass each.
//
// solve() sets free variables to zero. Because pivots are chosen from the
// highest column index down, the result is the lexicographically smallest
// solution when x is read with column 0 as the most significant bit.
class Gf2Solver {
public:
    Gf2Solver() = default;
    Gf2Solver(std::size_t rows, const std::vector<BitVector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return pivot_cols_.size(); }
    std::size_t nullity() const noexcept { return cols_ - rank(); }

    std::optional<BitVector> solve(const BitVector& rhs) const;
    bool in_span(const BitVector& rhs) const { return solve(rhs).has_value(); }
    std::vector<BitVector> kernel_basis() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> reduced_;    // R, row-major, cols_ bits per row
    std::vector<BitVector> transform_;  // T with T·A = R, rows_ bits per row
    std::vector<std::size_t> pivot_cols_;
};

std::optional<BitVector> solve_gf2(const LinearSystemGF2& system);

}  // namespace quadric
