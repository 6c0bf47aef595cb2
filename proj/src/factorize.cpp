#include "gk/factorize.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "gk/errors.hpp"

namespace gk {

namespace {

// Word-mask helpers over an n-bit row stored in wpr 64-bit words.
inline bool mask_get(const std::vector<uint64_t>& m, std::size_t i) {
    return (m[i >> 6] >> (i & 63)) & 1u;
}
inline void mask_set(std::vector<uint64_t>& m, std::size_t i) { m[i >> 6] |= uint64_t(1) << (i & 63); }
inline void mask_clear(std::vector<uint64_t>& m, std::size_t i) { m[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
inline void mask_flip(std::vector<uint64_t>& m, std::size_t i) { m[i >> 6] ^= uint64_t(1) << (i & 63); }

std::size_t first_set(const uint64_t* m, std::size_t nw) {
    for (std::size_t w = 0; w < nw; ++w)
        if (m[w]) return (w << 6) + std::size_t(std::countr_zero(m[w]));
    return SIZE_MAX;
}

std::size_t first_set_and(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        uint64_t v = a[w] & b[w];
        if (v) return (w << 6) + std::size_t(std::countr_zero(v));
    }
    return SIZE_MAX;
}

// State of the symmetric congruence reduction A -> T M T^T. W holds the rows
// of T^{-T}: after extracting pivot set P, M = sum_{k in P} w_k w_k^T where
// w_k is row k of W. Untouched rows of W equal unit vectors, so they are
// tracked lazily through `dirty`.
struct Congruence {
    std::size_t n, wpr;
    Gf2Matrix a, w;
    std::vector<uint64_t> remaining, diag, dirty;
    std::vector<uint32_t> dirty_rows, pivots, forced;

    explicit Congruence(const Gf2Matrix& m)
        : n(m.rows()), wpr(m.words_per_row()), a(m), w(Gf2Matrix::identity(m.rows())),
          remaining(wpr, 0), diag(wpr, 0), dirty(wpr, 0) {
        for (std::size_t i = 0; i < n; ++i) {
            mask_set(remaining, i);
            if (a.get(i, i)) mask_set(diag, i);
        }
    }

    void mark_dirty(std::size_t i) {
        if (!mask_get(dirty, i)) {
            mask_set(dirty, i);
            dirty_rows.push_back(uint32_t(i));
        }
    }

    // Symmetric congruence x_dst += x_src: row/col update on A, inverse
    // transpose update on W (row_src += row_dst).
    void add_generator(std::size_t dst, std::size_t src) {
        a.xor_row(dst, src);
        for (std::size_t k = 0; k < n; ++k)
            if (a.get(k, src)) a.flip(k, dst);
        w.xor_row(src, dst);
        mark_dirty(src);
    }

    // Extract a unit pivot: requires i remaining with A_ii = 1. Clears row and
    // column i against every remaining neighbor (Schur step) and records the
    // accumulated generator in W.
    void extract(std::size_t i) {
        std::vector<uint64_t> jmask(a.row(i), a.row(i) + wpr);
        mask_clear(jmask, i);

        // w_i += sum_{j in J} w_j; clean rows contribute unit vectors.
        uint64_t* wi = w.row(i);
        for (std::size_t k = 0; k < wpr; ++k) wi[k] ^= jmask[k] & ~dirty[k];
        for (uint32_t j : dirty_rows)
            if (mask_get(jmask, j)) w.xor_row(i, j);
        mark_dirty(i);

        const uint64_t* ai = a.row(i);
        for (std::size_t wd = 0; wd < wpr; ++wd) {
            uint64_t bits = jmask[wd];
            while (bits) {
                std::size_t j = (wd << 6) + std::size_t(std::countr_zero(bits));
                bits &= bits - 1;
                a.xor_row_from(j, ai, 0);
                mask_flip(diag, j); // A_jj flipped by the row addition
            }
        }
        a.clear_row(i);
        a.set(i, i, true);
        mask_clear(remaining, i);
        mask_clear(diag, i);
        pivots.push_back(uint32_t(i));
    }

    // No remaining diagonal 1 but the residual is nonzero at (q1,q2):
    // rebuild generators from the most recent pivot u so that u+q1, u+q2,
    // u+q1+q2 (post-update) have pairwise Gram I_3, then re-extract all three.
    void repair(std::size_t q1, std::size_t q2) {
        std::size_t u = pivots.back();
        pivots.pop_back();
        mask_set(remaining, u);
        add_generator(q1, u);
        add_generator(q2, u);
        add_generator(u, q1);
        add_generator(u, q2);
        for (std::size_t x : {q1, q2, u}) {
            if (a.get(x, x)) mask_set(diag, x); else mask_clear(diag, x);
            forced.push_back(uint32_t(x));
        }
    }

    void run() {
        while (true) {
            std::size_t piv;
            if (!forced.empty()) {
                piv = forced.front();
                forced.erase(forced.begin());
            } else {
                piv = first_set_and(diag, remaining);
            }
            if (piv != SIZE_MAX) {
                extract(piv);
                continue;
            }
            // Residual has an all-zero diagonal; find a nonzero entry or stop.
            std::size_t q1 = SIZE_MAX, q2 = SIZE_MAX;
            for (std::size_t i = 0; i < n && q1 == SIZE_MAX; ++i) {
                if (!mask_get(remaining, i)) continue;
                std::size_t j = first_set(a.row(i), wpr);
                if (j != SIZE_MAX) { q1 = i; q2 = j; }
            }
            if (q1 == SIZE_MAX) return;
            repair(q1, q2);
        }
    }
};

} // namespace

Gf2Factorization lempel_factorize(const Gf2Matrix& m) {
    std::size_t bi = 0, bj = 0;
    if (!m.is_symmetric(&bi, &bj))
        throw AsymmetricInput("factorize: input differs at (" + std::to_string(bi) + "," +
                              std::to_string(bj) + ") and its transpose");
    const std::size_t n = m.rows();
    bool has_unit = false;
    for (std::size_t i = 0; i < n && !has_unit; ++i) has_unit = m.get(i, i);
    if (!has_unit)
        throw AllZeroDiagonal("factorize: the diagonal is identically zero");

    Congruence c(m);
    c.run();

    Gf2Factorization out;
    out.r = c.pivots.size();
    out.pivots = c.pivots;
    out.b = Gf2Matrix(n, out.r);
    for (std::size_t t = 0; t < out.r; ++t) {
        const uint64_t* wr = c.w.row(c.pivots[t]);
        for (std::size_t wd = 0; wd < c.wpr; ++wd) {
            uint64_t bits = wr[wd];
            while (bits) {
                std::size_t v = (wd << 6) + std::size_t(std::countr_zero(bits));
                bits &= bits - 1;
                if (v < n) out.b.set(v, t, true);
            }
        }
    }
    std::size_t vi = 0, vj = 0;
    if (!gf2_gram_equals(out.b, m, &vi, &vj))
        throw Error("factorize: product check failed at (" + std::to_string(vi) + "," +
                    std::to_string(vj) + ")");
    return out;
}

VectorAssignmentGf2 orthogonal_rep_of_complement(const GKParams& params, const BuildLimits& lim) {
    PrimeFieldMatrix m = representing_matrix_mod_p_matrix(params, 2, lim);
    const std::size_t n = m.rows();
    // congruence state: working copy + accumulated generators + factor
    guard_allocation(n, (3 * n * n) / 8 + 64, lim);
    Gf2Factorization f = lempel_factorize(m.bits());
    VectorAssignmentGf2 out;
    out.dimension = f.r;
    out.vectors = std::move(f.b);
    return out;
}

ExplicitGraph non_orthogonality_graph(const Gf2Matrix& system) {
    const std::size_t n = system.rows();
    ExplicitGraph h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (system.dot_rows(i, j)) h.add_edge(i, j);
    return h;
}

bool nearly_orthogonal_check(const Gf2Matrix& system, NearlyOrthWitness* witness) {
    const std::size_t n = system.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (!system.dot_rows(i, i)) {
            if (witness) {
                witness->kind = NearlyOrthWitness::Kind::SelfOrthogonal;
                witness->i = i;
            }
            return false;
        }
    }
    ExplicitGraph h = non_orthogonality_graph(system);
    OddCycleWitness cyc;
    if (!odd_girth_exceeds(h, 3, &cyc)) {
        if (witness) {
            witness->kind = NearlyOrthWitness::Kind::NonOrthogonalTriple;
            witness->triple = {cyc.vertices[0], cyc.vertices[1], cyc.vertices[2]};
        }
        return false;
    }
    if (witness) witness->kind = NearlyOrthWitness::Kind::None;
    return true;
}

} // namespace gk
