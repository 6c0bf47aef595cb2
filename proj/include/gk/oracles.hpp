#pragma once

#include <cstdint>

#include "gk/kneser.hpp"

namespace gk {

// Caps for the brute-force oracles. Exceeding any cap raises BudgetExceeded —
// a third outcome, never silently coerced to a bound.
struct OracleBudget {
    std::size_t max_vertices = 64;        // searched instance size
    std::size_t max_dimension = 64;       // dimensions / colors tried
    uint64_t max_nodes = 200'000'000;     // enumerated matrices / search nodes
    double max_seconds = 600.0;           // wall clock
};

struct OracleStats {
    uint64_t nodes = 0;
    double seconds = 0.0;
};

// Exact minrank over F_p: minimum rank over all matrices with nonzero diagonal,
// zero at non-adjacent distinct ordered pairs, and free entries at adjacent
// ordered pairs (both orientations independent). Lexicographic enumeration of
// all (p-1)^n * p^(2|E|) assignments.
unsigned minrank_exact(const ExplicitGraph& g, uint64_t p, const OracleBudget& budget = {},
                       OracleStats* stats = nullptr);

// Smallest t admitting odd-weight vectors in GF(2)^t, one per vertex, with
// adjacent pairs orthogonal. Incremental t with backtracking.
unsigned od_exact_gf2(const ExplicitGraph& g, const OracleBudget& budget = {},
                      OracleStats* stats = nullptr);

// Backtracking with forward checking; |V(H)| <= 64.
bool homomorphism_exists(const ExplicitGraph& g, const ExplicitGraph& h,
                         const OracleBudget& budget = {}, OracleStats* stats = nullptr);

// Smallest t with a homomorphism G -> K(t,k); k-subsets as colors, adjacent
// vertices get disjoint sets.
unsigned multichromatic_exact(const ExplicitGraph& g, unsigned k, const OracleBudget& budget = {},
                              OracleStats* stats = nullptr);

} // namespace gk
