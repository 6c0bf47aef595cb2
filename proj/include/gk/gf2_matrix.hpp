#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gk {

// Dense GF(2) matrix, bit-packed 64 bits to a word, row-major.
// Bits past `cols` in the last word of each row are kept zero.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t i, std::size_t j) const {
        return (w_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        uint64_t& word = w_[i * wpr_ + (j >> 6)];
        uint64_t bit = uint64_t(1) << (j & 63);
        if (v) word |= bit; else word &= ~bit;
    }
    void flip(std::size_t i, std::size_t j) {
        w_[i * wpr_ + (j >> 6)] ^= uint64_t(1) << (j & 63);
    }

    uint64_t* row(std::size_t i) { return w_.data() + i * wpr_; }
    const uint64_t* row(std::size_t i) const { return w_.data() + i * wpr_; }

    void xor_row(std::size_t dst, std::size_t src);
    void xor_row_from(std::size_t dst, const uint64_t* src, std::size_t word_begin = 0);
    void swap_rows(std::size_t a, std::size_t b);
    void clear_row(std::size_t i);

    std::size_t row_weight(std::size_t i) const;
    // parity of <row i, row j>
    bool dot_rows(std::size_t i, std::size_t j) const;
    static bool dot(const Gf2Matrix& a, std::size_t i, const Gf2Matrix& b, std::size_t j);

    bool is_symmetric(std::size_t* bad_i = nullptr, std::size_t* bad_j = nullptr) const;
    bool is_zero() const;
    bool operator==(const Gf2Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_; }

    // Exact rank; works on a scratch copy, deterministic first-nonzero pivoting.
    std::size_t rank() const;

    Gf2Matrix transpose() const;
    // this (r x c) times other^T (n x c) -> r x n
    Gf2Matrix mul_transpose(const Gf2Matrix& other) const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

// In-place row echelon reduction; returns rank. Leaves m in echelon form.
std::size_t gf2_rank_destructive(Gf2Matrix& m);

// True iff b * b^T equals m (m must be n x n, b n x t). Early exit on mismatch;
// used to verify symmetric factorizations by actual multiplication.
bool gf2_gram_equals(const Gf2Matrix& b, const Gf2Matrix& m,
                     std::size_t* bad_i = nullptr, std::size_t* bad_j = nullptr);

} // namespace gk
