#include "quadric/gf2.hpp"

#include <bit>

#include "quadric/errors.hpp"
#include "quadric/kernels.hpp"

namespace quadric {

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.bits_ != bits_)
        throw DimensionMismatch("BitVector xor: " + std::to_string(bits_) + " vs " +
                                std::to_string(other.bits_));
    kernels::active().xor_words(words_.data(), other.words_.data(), words_.size());
    return *this;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.bits_ != bits_)
        throw DimensionMismatch("BitVector dot: size mismatch");
    return kernels::active().and_parity(words_.data(), other.words_.data(), words_.size());
}

bool BitVector::any() const { return kernels::active().any_set(words_.data(), words_.size()); }

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_; ++i)
        if (get(i))
            out.push_back(i);
    return out;
}

std::string BitVector::str() const {
    std::string s;
    s.reserve(bits_);
    for (std::size_t i = 0; i < bits_; ++i)
        s += get(i) ? '1' : '0';
    return s;
}

Gf2Solver::Gf2Solver(std::size_t rows, const std::vector<BitVector>& columns)
    : rows_(rows), cols_(columns.size()) {
    reduced_.assign(rows_, BitVector(cols_));
    transform_.assign(rows_, BitVector(rows_));
    for (std::size_t r = 0; r < rows_; ++r)
        transform_[r].set(r);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (columns[c].size() != rows_)
            throw DimensionMismatch("Gf2Solver: column " + std::to_string(c) + " has " +
                                    std::to_string(columns[c].size()) + " rows, expected " +
                                    std::to_string(rows_));
        for (std::size_t r : columns[c].ones())
            reduced_[r].set(c);
    }

    std::size_t rank = 0;
    for (std::size_t jj = cols_; jj-- > 0 && rank < rows_;) {
        std::size_t p = rank;
        while (p < rows_ && !reduced_[p].get(jj))
            ++p;
        if (p == rows_)
            continue;
        std::swap(reduced_[p], reduced_[rank]);
        std::swap(transform_[p], transform_[rank]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && reduced_[r].get(jj)) {
                reduced_[r] ^= reduced_[rank];
                transform_[r] ^= transform_[rank];
            }
        }
        pivot_cols_.push_back(jj);
        ++rank;
    }
}

std::optional<BitVector> Gf2Solver::solve(const BitVector& rhs) const {
    if (rhs.size() != rows_)
        throw DimensionMismatch("Gf2Solver::solve: rhs has " + std::to_string(rhs.size()) +
                                " rows, expected " + std::to_string(rows_));
    BitVector x(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const bool y = transform_[r].dot(rhs);
        if (r < pivot_cols_.size()) {
            if (y)
                x.set(pivot_cols_[r]);
        } else if (y) {
            return std::nullopt;
        }
    }
    return x;
}

std::vector<BitVector> Gf2Solver::kernel_basis() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_cols_)
        is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        BitVector v(cols_);
        v.set(f);
        for (std::size_t r = 0; r < pivot_cols_.size(); ++r)
            if (reduced_[r].get(f))
                v.set(pivot_cols_[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve_gf2(const LinearSystemGF2& system) {
    return Gf2Solver(system.rows, system.columns).solve(system.rhs);
}

}  // namespace quadric
