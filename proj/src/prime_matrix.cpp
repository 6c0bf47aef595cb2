#include "gk/prime_matrix.hpp"

#include "gk/arith.hpp"
#include "gk/errors.hpp"

namespace gk {

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols, uint64_t p)
    : p_(p), rows_(rows), cols_(cols) {
    if (!is_prime_u64(p)) throw BadParameter("modulus must be prime");
    if (p == 2)
        bits_ = Gf2Matrix(rows, cols);
    else
        e_.assign(rows * cols, 0);
}

PrimeFieldMatrix::PrimeFieldMatrix(Gf2Matrix bits)
    : p_(2), rows_(bits.rows()), cols_(bits.cols()), bits_(std::move(bits)) {}

uint64_t PrimeFieldMatrix::get(std::size_t i, std::size_t j) const {
    return p_ == 2 ? static_cast<uint64_t>(bits_.get(i, j)) : e_[i * cols_ + j];
}

void PrimeFieldMatrix::set(std::size_t i, std::size_t j, uint64_t v) {
    v %= p_;
    if (p_ == 2)
        bits_.set(i, j, v != 0);
    else
        e_[i * cols_ + j] = v;
}

std::size_t PrimeFieldMatrix::rank() const {
    if (p_ == 2) return bits_.rank();
    return rank_generic();
}

std::size_t PrimeFieldMatrix::rank_generic() const {
    std::vector<uint64_t> a(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a[i * cols_ + j] = get(i, j);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = rows_;
        for (std::size_t i = r; i < rows_; ++i) {
            if (a[i * cols_ + c]) { piv = i; break; }
        }
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols_; ++j) std::swap(a[piv * cols_ + j], a[r * cols_ + j]);
        const uint64_t inv = inv_mod(a[r * cols_ + c], p_);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            uint64_t v = a[i * cols_ + c];
            if (!v) continue;
            const uint64_t f = mul_mod(v, inv, p_);
            for (std::size_t j = c; j < cols_; ++j) {
                uint64_t sub = mul_mod(f, a[r * cols_ + j], p_);
                uint64_t cur = a[i * cols_ + j];
                a[i * cols_ + j] = cur >= sub ? cur - sub : cur + p_ - sub;
            }
        }
        ++r;
    }
    return r;
}

bool PrimeFieldMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    if (p_ == 2) return bits_.is_symmetric();
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bool PrimeFieldMatrix::operator==(const PrimeFieldMatrix& o) const {
    if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (p_ == 2) return bits_ == o.bits_;
    return e_ == o.e_;
}

const Gf2Matrix& PrimeFieldMatrix::bits() const {
    if (p_ != 2) throw BadParameter("bits(): modulus is not 2");
    return bits_;
}

} // namespace gk
