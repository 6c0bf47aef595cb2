#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gk/exact_matrix.hpp"

namespace gk {

// Subspace of Q^ambient, kept as a canonical reduced-row-echelon basis so
// equality is plain comparison.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace from_vectors(std::size_t ambient, const std::vector<RationalVector>& gens);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }

    bool contains(const RationalVector& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    Subspace intersect(const Subspace& o) const; // Zassenhaus
    Subspace sum(const Subspace& o) const;
    Subspace extend(const RationalVector& v) const; // sum with span{v}

private:
    std::size_t ambient_ = 0;
    RationalMatrix basis_{0, 0};
};

// A vector of U lying outside every member of `covers` (each a proper
// subspace of U), found by scanning the moment curve
//   u(alpha) = sum_j alpha^(j-1) b_j,  alpha = 0, 1, 2, ...
// over the basis b_1..b_l of U. Each proper subspace captures at most l-1
// scan values, so |covers|*(l-1)+1 candidates suffice; if the scan is
// exhausted (some cover contains U) throws CoveringCollection. `scanned`, if
// given, receives the number of candidates tried.
RationalVector uncovered_vector(const Subspace& u, const std::vector<Subspace>& covers,
                                std::size_t* scanned = nullptr);

// Subspace of U of dimension ell_prime meeting every W in ws in dimension at
// least dim(W) - (dim(U) - ell_prime). Grown one uncovered vector at a time,
// avoiding the current iterate and every sum iterate+W still proper in U.
// Each W must be a subspace of U.
Subspace graded_subspace(const Subspace& u, const std::vector<Subspace>& ws, std::size_t ell_prime);

// Subspace of U of dimension dim(U) - ell_prime meeting every W in ws
// trivially; requires dim(U \cap W) <= ell_prime for every W.
Subspace avoiding_subspace(const Subspace& u, const std::vector<Subspace>& ws, std::size_t ell_prime);

std::string subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const std::string& text);

} // namespace gk
