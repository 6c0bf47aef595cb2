#include "gk/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <vector>

#include "gk/arith.hpp"
#include "gk/errors.hpp"

namespace gk {

namespace {

struct BudgetClock {
    const OracleBudget& budget;
    uint64_t nodes = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit BudgetClock(const OracleBudget& b) : budget(b) {}

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    void charge(const char* what) {
        if (++nodes > budget.max_nodes)
            throw BudgetExceeded(std::string(what) + ": node cap " +
                                 std::to_string(budget.max_nodes) + " exceeded");
        if ((nodes & 0xfff) == 0 && elapsed() > budget.max_seconds)
            throw BudgetExceeded(std::string(what) + ": wall-clock cap exceeded");
    }
    void fill(OracleStats* stats) const {
        if (stats) {
            stats->nodes = nodes;
            stats->seconds = elapsed();
        }
    }
};

// Destructive rank of a small dense matrix mod p.
unsigned small_rank(std::vector<uint64_t>& a, std::size_t n, uint64_t p) {
    unsigned rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = rank; r < n; ++r)
            if (a[r * n + c] != 0) { piv = r; break; }
        if (piv == SIZE_MAX) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[rank * n + j]);
        uint64_t inv = inv_mod(a[rank * n + c], p);
        for (std::size_t r = rank + 1; r < n; ++r) {
            uint64_t f = a[r * n + c];
            if (!f) continue;
            uint64_t scale = mul_mod(f, inv, p);
            for (std::size_t j = c; j < n; ++j) {
                uint64_t sub = mul_mod(scale, a[rank * n + j], p);
                a[r * n + j] = (a[r * n + j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

unsigned minrank_exact(const ExplicitGraph& g, uint64_t p, const OracleBudget& budget,
                       OracleStats* stats) {
    if (!is_prime_u64(p)) throw BadParameter("minrank oracle: modulus must be prime");
    const std::size_t n = g.num_vertices();
    if (n > budget.max_vertices)
        throw BudgetExceeded("minrank oracle: vertex cap " +
                             std::to_string(budget.max_vertices) + " exceeded");
    if (n == 0) return 0;

    std::vector<std::pair<uint32_t, uint32_t>> free_pairs; // ordered adjacent pairs
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g.adjacent(i, j)) free_pairs.emplace_back(uint32_t(i), uint32_t(j));

    // Digits: diagonal entries over {1..p-1} (p=2 pins them), then the free
    // ordered pairs over {0..p-1}; enumerated lexicographically.
    std::vector<uint64_t> diag(n, 1), off(free_pairs.size(), 0);
    std::vector<uint64_t> mat(n * n), scratch;
    BudgetClock clock(budget);
    unsigned best = unsigned(n) + 1;
    while (true) {
        clock.charge("minrank oracle");
        std::fill(mat.begin(), mat.end(), 0);
        for (std::size_t i = 0; i < n; ++i) mat[i * n + i] = diag[i];
        for (std::size_t e = 0; e < free_pairs.size(); ++e)
            mat[free_pairs[e].first * n + free_pairs[e].second] = off[e];
        scratch = mat;
        best = std::min(best, small_rank(scratch, n, p));
        if (best == 1) break; // nonzero diagonal forces rank >= 1
        // odometer: least significant digit last
        std::size_t k = off.size();
        while (k > 0 && off[k - 1] == p - 1) off[--k] = 0;
        if (k > 0) {
            ++off[k - 1];
            continue;
        }
        std::size_t dk = n;
        while (dk > 0 && diag[dk - 1] == p - 1) diag[--dk] = 1;
        if (dk == 0) break;
        ++diag[dk - 1];
    }
    clock.fill(stats);
    return best;
}

unsigned od_exact_gf2(const ExplicitGraph& g, const OracleBudget& budget, OracleStats* stats) {
    const std::size_t n = g.num_vertices();
    if (n > 64) throw BadParameter("od oracle: limited to 64 vertices");
    if (n > budget.max_vertices)
        throw BudgetExceeded("od oracle: vertex cap exceeded");
    if (n == 0) return 0;

    std::vector<uint64_t> nbr_before(n, 0); // earlier neighbors as bitmask
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u)
            if (g.adjacent(u, v)) nbr_before[v] |= uint64_t(1) << u;

    BudgetClock clock(budget);
    std::vector<uint64_t> assign(n, 0);
    for (std::size_t t = 1; t <= n; ++t) {
        if (t > budget.max_dimension)
            throw BudgetExceeded("od oracle: dimension cap exceeded");
        const uint64_t top = (t == 64) ? ~uint64_t(0) : ((uint64_t(1) << t) - 1);
        // depth-first over vertices; candidates are odd-weight masks ascending
        std::size_t v = 0;
        std::vector<uint64_t> next(n, 1);
        bool ok = false;
        while (true) {
            if (v == n) { ok = true; break; }
            uint64_t cand = next[v];
            bool placed = false;
            while (cand <= top) {
                const bool last = (cand == top); // guard ++ overflow at t == 64
                if (std::popcount(cand) & 1) {
                    clock.charge("od oracle");
                    bool fits = true;
                    uint64_t nb = nbr_before[v];
                    while (nb && fits) {
                        std::size_t u = std::size_t(std::countr_zero(nb));
                        nb &= nb - 1;
                        if (std::popcount(cand & assign[u]) & 1) fits = false;
                    }
                    if (fits) {
                        assign[v] = cand;
                        next[v] = cand + 1;
                        placed = true;
                        break;
                    }
                }
                if (last) break;
                ++cand;
            }
            if (placed) {
                ++v;
                if (v < n) next[v] = 1;
                continue;
            }
            if (v == 0) break;
            --v; // backtrack; next[v] already advanced past the failed choice
        }
        if (ok) {
            clock.fill(stats);
            return unsigned(t);
        }
    }
    throw Error("od oracle: no assignment found up to t = n (unreachable)");
}

bool homomorphism_exists(const ExplicitGraph& g, const ExplicitGraph& h,
                         const OracleBudget& budget, OracleStats* stats) {
    const std::size_t n = g.num_vertices(), m = h.num_vertices();
    if (n > budget.max_vertices)
        throw BudgetExceeded("homomorphism oracle: vertex cap exceeded");
    if (m > 64) throw BadParameter("homomorphism oracle: target limited to 64 vertices");
    if (n == 0) return true;
    if (m == 0) return false;

    std::vector<uint64_t> h_adj(m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (h.adjacent(a, b)) h_adj[a] |= uint64_t(1) << b;
    const uint64_t full = (m == 64) ? ~uint64_t(0) : ((uint64_t(1) << m) - 1);

    // static fail-first order: highest degree first, index as tie-break
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        auto da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });

    BudgetClock clock(budget);
    // cand[depth][v]: remaining colors for v after the first `depth` choices
    std::vector<std::vector<uint64_t>> cand(n + 1, std::vector<uint64_t>(n, full));
    std::vector<uint64_t> tried(n, 0);
    std::size_t depth = 0;
    bool found = false;
    while (true) {
        if (depth == n) { found = true; break; }
        const uint32_t v = order[depth];
        uint64_t avail = cand[depth][v] & ~tried[depth];
        if (!avail) {
            if (depth == 0) break;
            --depth;
            continue;
        }
        const std::size_t c = std::size_t(std::countr_zero(avail));
        tried[depth] |= uint64_t(1) << c;
        clock.charge("homomorphism oracle");
        // forward check into the next frame
        cand[depth + 1] = cand[depth];
        cand[depth + 1][v] = uint64_t(1) << c;
        bool dead = false;
        for (std::size_t w = 0; w < n && !dead; ++w) {
            if (!g.adjacent(v, w)) continue;
            cand[depth + 1][w] &= h_adj[c];
            if (!cand[depth + 1][w]) dead = true;
        }
        if (dead) continue;
        ++depth;
        if (depth < n) tried[depth] = 0;
    }
    clock.fill(stats);
    return found;
}

unsigned multichromatic_exact(const ExplicitGraph& g, unsigned k, const OracleBudget& budget,
                              OracleStats* stats) {
    if (k == 0) throw BadParameter("multichromatic oracle: k must be positive");
    const std::size_t n = g.num_vertices();
    if (n > budget.max_vertices)
        throw BudgetExceeded("multichromatic oracle: vertex cap exceeded");
    if (n == 0) return k;

    OracleStats acc;
    for (uint64_t t = k;; ++t) {
        if (t > budget.max_dimension)
            throw BudgetExceeded("multichromatic oracle: color cap exceeded");
        if (binomial(t, k) > 64)
            throw BudgetExceeded("multichromatic oracle: K(" + std::to_string(t) + "," +
                                 std::to_string(k) + ") exceeds the 64-vertex target cap");
        GKParams kp{t, k, 1};
        ExplicitGraph target = ExplicitGraph::from_gk(GKGraph(kp));
        OracleStats one;
        OracleBudget rem = budget;
        rem.max_nodes = budget.max_nodes - acc.nodes;
        bool ok = homomorphism_exists(g, target, rem, &one);
        acc.nodes += one.nodes;
        acc.seconds += one.seconds;
        if (ok) {
            if (stats) *stats = acc;
            return unsigned(t);
        }
    }
}

} // namespace gk
