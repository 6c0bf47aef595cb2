#pragma once

#include <cstdint>
#include <vector>

#include "gk/arith.hpp"

namespace gk {

// ceil(k/s)*(d-2s) + 2k; requires d >= 2s, k >= 1, s >= 1.
BigInt stahl_rhs(uint64_t k, uint64_t s, uint64_t d);

// ceil(k/2)*(d-4) + 2k; requires d >= 4, k >= 1. Equals stahl_rhs(k, 2, d).
BigInt thm_s2_value(uint64_t k, uint64_t d);

// (k - ceil((k+1)/s) + 1)/(s-1) * d - c; requires k >= s >= 3, d >= 2s, c >= 0.
// The additive constant c is caller-supplied.
Rational thm_general_lower(uint64_t k, uint64_t s, uint64_t d, const Rational& c);

// k*d/s; requires d >= 2s, k >= 1, s >= 1.
Rational bukh_cox_lower(uint64_t k, uint64_t s, uint64_t d);

// Exact R-vs-n comparison at s = d/2 with a float entropy estimate alongside.
// The verdict is decided with big-integer arithmetic only.
struct BoundReport {
    uint64_t d = 0, m = 0;
    BigInt n;                      // C(d, d/2)
    BigInt R;                      // sum_{i <= d/2 - m} C(d, i)
    double entropy_estimate = 0.0; // 2^(H(1/2 - m/d) * d), display only
    bool r_lt_n = false;
    double delta = 0.0;            // 1 - log(R)/log(n), display only
};

BoundReport bound_report(uint64_t d, uint64_t m);

struct CrossoverRule {
    enum class Kind { Ell, DOver8 } kind = Kind::Ell;
    uint64_t ell = 3; // used by Kind::Ell: m = d/(2*ell), d divisible by 2*ell
};

struct CrossoverResult {
    std::vector<BoundReport> reports; // ascending admissible d <= d_max
    bool found = false;
    uint64_t minimal_d = 0; // least admissible d with R < n, when found
};

CrossoverResult crossover_search(const CrossoverRule& rule, uint64_t d_max);

} // namespace gk
