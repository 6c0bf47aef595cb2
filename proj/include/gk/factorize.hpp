#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gk/gf2_matrix.hpp"
#include "gk/kneser.hpp"
#include "gk/polyrep.hpp"

namespace gk {

struct Gf2Factorization {
    std::size_t r = 0;            // = rank(M)
    Gf2Matrix b;                  // n x r with M = b b^T
    std::vector<uint32_t> pivots; // generator extraction order
};

// Symmetric congruence factorization over GF(2). Requires M symmetric with at
// least one nonzero diagonal entry; returns B with exactly rank(M) columns,
// M = B B^T verified by multiplication before returning.
// Throws AsymmetricInput / AllZeroDiagonal.
Gf2Factorization lempel_factorize(const Gf2Matrix& m);

struct VectorAssignmentGf2 {
    std::size_t dimension = 0;
    Gf2Matrix vectors; // one row per vertex, `dimension` columns
};

struct OrthRepWitness {
    enum class Kind { None, SelfOrthogonal, AdjacentNonOrthogonal } kind = Kind::None;
    std::size_t i = 0, j = 0;
};

// Orthogonal representation check: every vector non-self-orthogonal, every
// adjacent pair of g orthogonal (standard dot product over GF(2)).
template <class Graph>
bool verify_orthogonal_representation(const VectorAssignmentGf2& a, const Graph& g,
                                      OrthRepWitness* witness = nullptr) {
    if (a.vectors.rows() != g.num_vertices())
        throw DimensionMismatch("orthogonal representation: one vector per vertex required");
    const std::size_t n = a.vectors.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.vectors.dot_rows(i, i)) {
            if (witness) *witness = {OrthRepWitness::Kind::SelfOrthogonal, i, i};
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j)) continue;
            if (a.vectors.dot_rows(i, j)) {
                if (witness) *witness = {OrthRepWitness::Kind::AdjacentNonOrthogonal, i, j};
                return false;
            }
        }
    }
    return true;
}

// Adjacency view of the complement of a generalized Kneser graph.
struct GKComplementView {
    const GKGraph* g = nullptr;
    std::size_t num_vertices() const { return g->num_vertices(); }
    bool adjacent(std::size_t i, std::size_t j) const { return i != j && !g->adjacent(i, j); }
};

// Rows of the congruence factor of the mod-2 representing matrix: an
// orthogonal representation of the complement of K(d,s,m) in dimension
// rank(M mod 2).
VectorAssignmentGf2 orthogonal_rep_of_complement(const GKParams& params, const BuildLimits& lim = {});

struct NearlyOrthWitness {
    enum class Kind { None, SelfOrthogonal, NonOrthogonalTriple } kind = Kind::None;
    std::size_t i = 0;                    // self-orthogonal row
    std::array<uint32_t, 3> triple{};     // pairwise non-orthogonal rows
};

// True iff no row is self-orthogonal and the non-orthogonality graph (pairs
// with inner product 1) has no triangle; triangle-freeness via
// odd_girth_exceeds(.., 3).
bool nearly_orthogonal_check(const Gf2Matrix& system, NearlyOrthWitness* witness = nullptr);

// The non-orthogonality graph itself (used by the check and by certificates).
ExplicitGraph non_orthogonality_graph(const Gf2Matrix& system);

} // namespace gk
