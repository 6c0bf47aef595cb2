#pragma once

#include <cstddef>
#include <vector>

#include "gk/arith.hpp"
#include "gk/prime_matrix.hpp"

namespace gk {

// Dense arbitrary-precision integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const BigInt& get(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, BigInt v) { a_[i * cols_ + j] = std::move(v); }

    bool is_symmetric() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

// Dense exact-rational matrix; entries canonical (lowest terms, positive denominator).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& get(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Rational v) {
        v.canonicalize();
        a_[i * cols_ + j] = std::move(v);
    }

    bool operator==(const RationalMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

using RationalVector = std::vector<Rational>;

std::size_t rank_rational(const RationalMatrix& m);
std::size_t rank_rational(const IntMatrix& m);

// Canonical reduced row echelon form (leading ones, cleared pivot columns,
// zero rows trailing). rank_out receives the number of nonzero rows.
RationalMatrix rref(const RationalMatrix& m, std::size_t* rank_out = nullptr);

// Basis of the right null space {x : m x = 0}, rows of the result, canonical.
RationalMatrix null_space(const RationalMatrix& m);

// true iff v lies in the row span of `basis`; exact.
bool membership(const RationalVector& v, const RationalMatrix& basis);

PrimeFieldMatrix reduce_mod_p(const IntMatrix& m, uint64_t p);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RationalMatrix to_rational(const IntMatrix& m);

} // namespace gk
