#pragma once

#include <cstdint>
#include <vector>

#include "gk/exact_matrix.hpp"
#include "gk/gf2_matrix.hpp"
#include "gk/kneser.hpp"
#include "gk/prime_matrix.hpp"

namespace gk {

// Caps for the dense constructions. `force` bypasses both checks.
struct BuildLimits {
    std::size_t max_vertices = 65536;
    std::size_t guard_bytes = std::size_t(2) << 30; // 2 GiB
    bool force = false;
};

void guard_allocation(std::size_t vertices, std::size_t bytes, const BuildLimits& lim);

// q(x) = C(x - m, s - m): integer valued, q(s) = 1, q(t) = 0 for m <= t < s.
BigInt q_value(unsigned s, unsigned m, long t);

// Forward differences c_j = sum_{i<=j} (-1)^(j-i) C(j,i) q(i), so that
// q(t) = sum_j c_j C(t,j) for every integer t.
struct NewtonCoefficients {
    unsigned s = 0, m = 0;
    std::vector<BigInt> c; // c_0 .. c_{s-m}
};
NewtonCoefficients newton_coefficients(unsigned s, unsigned m);

// n x n integer matrix with entry (A,B) = q(|A n B|): all-ones diagonal,
// zero on distinct non-adjacent pairs of K(d,s,m).
IntMatrix representing_matrix_integer(const GKParams& params, const BuildLimits& lim = {});

// The rank-R witness: M = B_incl Diag(c_{|S|}) B_incl^T with B_incl the
// inclusion matrix over all subsets S with |S| <= s-m, columns sorted by
// (|S|, colex).
struct InclusionFactorization {
    GKParams params;
    BigInt R;
    std::vector<uint64_t> col_masks;
    std::vector<std::size_t> size_offset; // size_offset[t] .. size_offset[t+1]
    Gf2Matrix incidence;                  // n rows, R columns
    std::vector<BigInt> coeffs;           // c_0 .. c_{s-m}

    // Actual multiplication over the stored bits (independent of the
    // entrywise construction).
    IntMatrix product(const BuildLimits& lim = {}) const;
};
InclusionFactorization inclusion_factorization(const GKParams& params, const BuildLimits& lim = {});

struct RepWitness {
    enum class Kind { None, ZeroDiagonal, NonAdjacentNonzero } kind = Kind::None;
    std::size_t i = 0, j = 0;
};

struct RepCheckResult {
    bool ok = false;
    RepWitness witness;
};

// Definition check: diagonal nonzero everywhere, zero at every distinct
// non-adjacent ordered pair. Entries at adjacent pairs are unconstrained.
template <class Mat, class Graph>
RepCheckResult verify_represents(const Mat& mat, const Graph& g) {
    if (mat.rows() != mat.cols() || mat.rows() != g.num_vertices())
        throw DimensionMismatch("verify_represents: matrix vs graph size");
    const std::size_t n = mat.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (mat.get(i, i) == 0)
            return {false, {RepWitness::Kind::ZeroDiagonal, i, i}};
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            if (mat.get(i, j) != 0)
                return {false, {RepWitness::Kind::NonAdjacentNonzero, i, j}};
            if (mat.get(j, i) != 0)
                return {false, {RepWitness::Kind::NonAdjacentNonzero, j, i}};
        }
    }
    return {true, {}};
}

PrimeFieldMatrix representing_matrix_mod_p_matrix(const GKParams& params, uint64_t p,
                                                  const BuildLimits& lim = {});

struct ModPRepresentation {
    GKParams params;
    uint64_t p = 0;
    PrimeFieldMatrix matrix;
    std::size_t rank = 0;
    BigInt R;
    bool rank_le_R = false;
    bool symmetric = false;
    RepCheckResult represents;
};

// Matrix, exact rank, bound R, and the three verdicts of the construction.
ModPRepresentation representing_matrix_mod_p(const GKParams& params, uint64_t p,
                                             const BuildLimits& lim = {});

} // namespace gk
