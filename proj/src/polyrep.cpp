#include "gk/polyrep.hpp"

#include <bit>

#include "gk/parallel.hpp"

namespace gk {

void guard_allocation(std::size_t vertices, std::size_t bytes, const BuildLimits& lim) {
    if (lim.force) return;
    if (vertices > lim.max_vertices)
        throw MemoryGuard("vertex count " + std::to_string(vertices) + " exceeds cap " +
                          std::to_string(lim.max_vertices) + " (use force to override)");
    if (bytes > lim.guard_bytes)
        throw MemoryGuard("estimated allocation " + std::to_string(bytes) + " bytes exceeds cap " +
                          std::to_string(lim.guard_bytes) + " (use force to override)");
}

BigInt q_value(unsigned s, unsigned m, long t) {
    if (m < 1 || m > s) throw BadParameter("q_value: need 1 <= m <= s");
    return binomial_any(BigInt(t) - static_cast<long>(m), s - m);
}

NewtonCoefficients newton_coefficients(unsigned s, unsigned m) {
    if (m < 1 || m > s) throw BadParameter("newton_coefficients: need 1 <= m <= s");
    const unsigned deg = s - m;
    std::vector<BigInt> q(deg + 1);
    for (unsigned i = 0; i <= deg; ++i) q[i] = q_value(s, m, static_cast<long>(i));
    NewtonCoefficients out{s, m, {}};
    out.c.resize(deg + 1);
    for (unsigned j = 0; j <= deg; ++j) {
        BigInt acc = 0;
        for (unsigned i = 0; i <= j; ++i) {
            BigInt term = binomial(j, i) * q[i];
            if ((j - i) % 2)
                acc -= term;
            else
                acc += term;
        }
        out.c[j] = acc;
    }
    return out;
}

IntMatrix representing_matrix_integer(const GKParams& params, const BuildLimits& lim) {
    validate(params);
    GKGraph g(params, lim.force ? GKGraph::kDefaultCap : lim.max_vertices);
    const std::size_t n = g.num_vertices();
    guard_allocation(n, n * n * sizeof(BigInt) * 2, lim);

    std::vector<BigInt> qt(params.s + 1);
    for (unsigned t = 0; t <= params.s; ++t) qt[t] = q_value(params.s, params.m, t);

    IntMatrix mat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const uint64_t a = g.vertex_mask(i);
        for (std::size_t j = i; j < n; ++j) {
            const unsigned w = std::popcount(a & g.vertex_mask(j));
            if (qt[w] == 0) continue;
            mat.set(i, j, qt[w]);
            if (j != i) mat.set(j, i, qt[w]);
        }
    }
    return mat;
}

InclusionFactorization inclusion_factorization(const GKParams& params, const BuildLimits& lim) {
    validate(params);
    GKGraph g(params, lim.force ? GKGraph::kDefaultCap : lim.max_vertices);
    const std::size_t n = g.num_vertices();
    const unsigned deg = params.s - params.m;

    BigInt big_r = binomial_prefix_sum(params.d, deg);
    // columns must be indexable
    if (big_r > BigInt(1u) << 26)
        throw MemoryGuard("inclusion factorization: R = " + big_r.get_str() + " columns is past desk scale");
    const std::size_t R = big_r.get_ui();
    guard_allocation(n, n * ((R + 63) / 64) * 8, lim);

    InclusionFactorization f;
    f.params = params;
    f.R = big_r;
    f.coeffs = newton_coefficients(params.s, params.m).c;
    f.size_offset.assign(deg + 2, 0);
    f.col_masks.reserve(R);
    for (unsigned t = 0; t <= deg; ++t) {
        f.size_offset[t] = f.col_masks.size();
        if (t == 0) {
            f.col_masks.push_back(0);
        } else if (t <= params.d) {
            uint64_t v = (uint64_t(1) << t) - 1;
            const uint64_t count = binomial_u64(params.d, t);
            for (uint64_t i = 0; i < count; ++i) {
                f.col_masks.push_back(v);
                if (i + 1 == count) break;
                uint64_t c = v & (~v + 1);
                uint64_t r = v + c;
                v = (((r ^ v) >> 2) / c) | r;
            }
        }
        f.size_offset[t + 1] = f.col_masks.size();
    }

    f.incidence = Gf2Matrix(n, R);
    for (std::size_t row = 0; row < n; ++row) {
        const uint64_t a = g.vertex_mask(row);
        unsigned pos[64];
        unsigned np = 0;
        for (unsigned b = 0; b < params.d; ++b)
            if ((a >> b) & 1) pos[np++] = b;
        for (unsigned t = 0; t <= deg && t <= np; ++t) {
            unsigned comb[64];
            for (unsigned q = 0; q < t; ++q) comb[q] = q;
            while (true) {
                uint64_t sub = 0;
                for (unsigned q = 0; q < t; ++q) sub |= uint64_t(1) << pos[comb[q]];
                f.incidence.set(row, f.size_offset[t] + colex_rank(sub), true);
                if (t == 0) break;
                unsigned q = t;
                while (q > 0 && comb[q - 1] == np - (t - (q - 1))) --q;
                if (q == 0) break;
                ++comb[q - 1];
                for (unsigned w = q; w < t; ++w) comb[w] = comb[w - 1] + 1;
            }
        }
    }
    return f;
}

namespace {

std::size_t popcount_bit_range(const uint64_t* words, std::size_t begin, std::size_t end) {
    if (begin >= end) return 0;
    const std::size_t wb = begin >> 6, we = (end - 1) >> 6;
    const uint64_t mask_lo = ~uint64_t(0) << (begin & 63);
    const uint64_t mask_hi = ~uint64_t(0) >> (63 - ((end - 1) & 63));
    if (wb == we) return std::popcount(words[wb] & mask_lo & mask_hi);
    std::size_t total = std::popcount(words[wb] & mask_lo);
    for (std::size_t k = wb + 1; k < we; ++k) total += std::popcount(words[k]);
    total += std::popcount(words[we] & mask_hi);
    return total;
}

} // namespace

IntMatrix InclusionFactorization::product(const BuildLimits& lim) const {
    const std::size_t n = incidence.rows();
    guard_allocation(n, n * n * sizeof(BigInt) * 2, lim);
    const unsigned deg = params.s - params.m;
    const std::size_t wpr = incidence.words_per_row();
    IntMatrix out(n, n);
    std::vector<uint64_t> buf(wpr);
    for (std::size_t i = 0; i < n; ++i) {
        const uint64_t* ri = incidence.row(i);
        for (std::size_t j = i; j < n; ++j) {
            const uint64_t* rj = incidence.row(j);
            for (std::size_t k = 0; k < wpr; ++k) buf[k] = ri[k] & rj[k];
            BigInt acc = 0;
            for (unsigned t = 0; t <= deg; ++t) {
                const std::size_t cnt = popcount_bit_range(buf.data(), size_offset[t], size_offset[t + 1]);
                if (cnt) acc += coeffs[t] * static_cast<unsigned long>(cnt);
            }
            if (acc != 0) {
                out.set(i, j, acc);
                if (j != i) out.set(j, i, acc);
            }
        }
    }
    return out;
}

PrimeFieldMatrix representing_matrix_mod_p_matrix(const GKParams& params, uint64_t p, const BuildLimits& lim) {
    validate(params);
    if (!is_prime_u64(p)) throw BadParameter("representing matrix: composite modulus");
    GKGraph g(params, lim.force ? GKGraph::kDefaultCap : lim.max_vertices);
    const std::size_t n = g.num_vertices();
    guard_allocation(n, p == 2 ? n * n / 8 + n : n * n * 8, lim);

    std::vector<uint64_t> qp(params.s + 1);
    for (unsigned t = 0; t <= params.s; ++t) {
        BigInt r = q_value(params.s, params.m, t) % static_cast<unsigned long>(p);
        if (r < 0) r += static_cast<unsigned long>(p);
        qp[t] = r.get_ui();
    }

    PrimeFieldMatrix mat(n, n, p);
    parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const uint64_t a = g.vertex_mask(i);
            for (std::size_t j = 0; j < n; ++j) {
                const unsigned w = std::popcount(a & g.vertex_mask(j));
                if (qp[w]) mat.set(i, j, qp[w]);
            }
        }
    });
    return mat;
}

ModPRepresentation representing_matrix_mod_p(const GKParams& params, uint64_t p, const BuildLimits& lim) {
    ModPRepresentation rep;
    rep.params = params;
    rep.p = p;
    rep.matrix = representing_matrix_mod_p_matrix(params, p, lim);
    GKGraph g(params, lim.force ? GKGraph::kDefaultCap : lim.max_vertices);
    rep.R = binomial_prefix_sum(params.d, params.s - params.m);
    rep.rank = rep.matrix.rank();
    rep.rank_le_R = BigInt(static_cast<unsigned long>(rep.rank)) <= rep.R;
    rep.symmetric = rep.matrix.is_symmetric();
    rep.represents = verify_represents(rep.matrix, g);
    return rep;
}

} // namespace gk
