#pragma once

#include <cstdint>
#include <vector>

#include "gk/gf2_matrix.hpp"

namespace gk {

// Dense matrix over GF(p), p prime. p = 2 is bit-packed (Gf2Matrix); other
// primes store word residues. Composite moduli are rejected at construction.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix() = default;
    PrimeFieldMatrix(std::size_t rows, std::size_t cols, uint64_t p);
    // adopt an existing bit matrix as a GF(2) matrix
    explicit PrimeFieldMatrix(Gf2Matrix bits);

    uint64_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool packed() const { return p_ == 2; }

    uint64_t get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, uint64_t v); // v reduced mod p by caller or here

    // Exact rank over GF(p); input untouched. Uses the bit-packed eliminator
    // for p = 2 and schoolbook elimination otherwise.
    std::size_t rank() const;
    // Schoolbook path regardless of p (cross-implementation check for p = 2).
    std::size_t rank_generic() const;

    bool is_symmetric() const;
    bool operator==(const PrimeFieldMatrix& o) const;

    const Gf2Matrix& bits() const; // p = 2 only

private:
    uint64_t p_ = 0;
    std::size_t rows_ = 0, cols_ = 0;
    Gf2Matrix bits_;              // p == 2
    std::vector<uint64_t> e_;     // p > 2, row-major
};

} // namespace gk
