#include "gk/gf2_matrix.hpp"

#include <algorithm>
#include <bit>

#include "gk/errors.hpp"
#include "gk/parallel.hpp"

namespace gk {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void Gf2Matrix::xor_row(std::size_t dst, std::size_t src) {
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void Gf2Matrix::xor_row_from(std::size_t dst, const uint64_t* src, std::size_t word_begin) {
    uint64_t* d = row(dst);
    for (std::size_t k = word_begin; k < wpr_; ++k) d[k] ^= src[k];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + wpr_, row(b));
}

void Gf2Matrix::clear_row(std::size_t i) {
    std::fill(row(i), row(i) + wpr_, 0);
}

std::size_t Gf2Matrix::row_weight(std::size_t i) const {
    const uint64_t* r = row(i);
    std::size_t w = 0;
    for (std::size_t k = 0; k < wpr_; ++k) w += std::popcount(r[k]);
    return w;
}

bool Gf2Matrix::dot_rows(std::size_t i, std::size_t j) const {
    return dot(*this, i, *this, j);
}

bool Gf2Matrix::dot(const Gf2Matrix& a, std::size_t i, const Gf2Matrix& b, std::size_t j) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("gf2 dot: width mismatch");
    const uint64_t* x = a.row(i);
    const uint64_t* y = b.row(j);
    uint64_t acc = 0;
    for (std::size_t k = 0; k < a.wpr_; ++k) acc ^= x[k] & y[k];
    return std::popcount(acc) & 1;
}

bool Gf2Matrix::is_symmetric(std::size_t* bad_i, std::size_t* bad_j) const {
    if (rows_ != cols_) {
        if (bad_i) *bad_i = rows_;
        if (bad_j) *bad_j = cols_;
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) {
                if (bad_i) *bad_i = i;
                if (bad_j) *bad_j = j;
                return false;
            }
    return true;
}

bool Gf2Matrix::is_zero() const {
    for (uint64_t word : w_)
        if (word) return false;
    return true;
}

std::size_t gf2_rank_destructive(Gf2Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.get(i, c)) { piv = i; break; }
        }
        if (piv == rows) continue;
        m.swap_rows(piv, r);
        const std::size_t wb = c >> 6; // all earlier words are zero below row r
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m.get(i, c)) m.xor_row_from(i, m.row(r), wb);
        }
        ++r;
    }
    return r;
}

std::size_t Gf2Matrix::rank() const {
    Gf2Matrix scratch(*this);
    return gf2_rank_destructive(scratch);
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const uint64_t* r = row(i);
        for (std::size_t k = 0; k < wpr_; ++k) {
            uint64_t word = r[k];
            while (word) {
                unsigned bit = std::countr_zero(word);
                word &= word - 1;
                t.set(k * 64 + bit, i, true);
            }
        }
    }
    return t;
}

Gf2Matrix Gf2Matrix::mul_transpose(const Gf2Matrix& other) const {
    if (cols_ != other.cols_) throw DimensionMismatch("mul_transpose: width mismatch");
    Gf2Matrix out(rows_, other.rows_);
    parallel_for(0, rows_, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < other.rows_; ++j)
                if (dot(*this, i, other, j)) out.set(i, j, true);
    });
    return out;
}

bool gf2_gram_equals(const Gf2Matrix& b, const Gf2Matrix& m, std::size_t* bad_i, std::size_t* bad_j) {
    if (m.rows() != m.cols() || b.rows() != m.rows())
        throw DimensionMismatch("gram check: shape mismatch");
    const std::size_t n = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (Gf2Matrix::dot(b, i, b, j) != m.get(i, j)) {
                if (bad_i) *bad_i = i;
                if (bad_j) *bad_j = j;
                return false;
            }
        }
    }
    return true;
}

} // namespace gk
