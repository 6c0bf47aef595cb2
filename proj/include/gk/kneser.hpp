#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gk/arith.hpp"
#include "gk/errors.hpp"
#include "gk/gf2_matrix.hpp"

namespace gk {

// Colexicographic bijection between s-subsets of [d] (d-bit masks, bit i =
// element i+1) and [0, C(d,s)). For fixed subset size, colex order coincides
// with numeric order of the masks.
uint64_t colex_rank(uint64_t mask);
uint64_t colex_unrank(uint64_t index, unsigned d, unsigned s);

struct GKParams {
    unsigned d = 0, s = 0, m = 0;
};

// 1 <= m <= s <= d <= 64; m = 0 would make the graph edgeless and is rejected.
void validate(const GKParams& p);

// Generalized Kneser graph K(d,s,m): vertices are the s-subsets of [d] in
// colex order, A ~ B iff |A n B| < m. With m = 1 adjacency is disjointness.
class GKGraph {
public:
    explicit GKGraph(GKParams p, std::size_t max_vertices = kDefaultCap);

    static constexpr std::size_t kDefaultCap = std::size_t(1) << 22;

    const GKParams& params() const { return prm_; }
    std::size_t num_vertices() const { return masks_.size(); }
    uint64_t vertex_mask(std::size_t i) const { return masks_[i]; }

    bool adjacent_masks(uint64_t a, uint64_t b) const {
        return a != b && static_cast<unsigned>(__builtin_popcountll(a & b)) < prm_.m;
    }
    bool adjacent(std::size_t i, std::size_t j) const { return adjacent_masks(masks_[i], masks_[j]); }

    uint64_t degree() const; // constant: sum_{i<m} C(s,i) C(d-s,s-i)
    BigInt num_edges() const;

    template <class F>
    void for_neighbors(std::size_t v, F&& f) const;

    std::vector<uint32_t> neighbor_list(std::size_t v) const;

private:
    GKParams prm_;
    std::vector<uint64_t> masks_;
};

// Small explicit graph over adjacency bit rows; used by oracles, sampled
// girth checks and the non-orthogonality graph.
class ExplicitGraph {
public:
    ExplicitGraph() = default;
    explicit ExplicitGraph(std::size_t n) : n_(n), adj_(n, n) {}

    std::size_t num_vertices() const { return n_; }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return adj_.get(u, v); }
    std::size_t degree(std::size_t v) const { return adj_.row_weight(v); }
    BigInt num_edges() const;

    template <class F>
    void for_neighbors(std::size_t v, F&& f) const {
        const uint64_t* r = adj_.row(v);
        for (std::size_t k = 0; k < adj_.words_per_row(); ++k) {
            uint64_t word = r[k];
            while (word) {
                unsigned bit = __builtin_ctzll(word);
                word &= word - 1;
                f(static_cast<uint32_t>(k * 64 + bit));
            }
        }
    }

    ExplicitGraph complement() const;
    static ExplicitGraph from_gk(const GKGraph& g);

    bool operator==(const ExplicitGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    std::size_t n_ = 0;
    Gf2Matrix adj_;
};

struct OddCycleWitness {
    std::vector<uint32_t> vertices; // cyclic order; odd length <= the queried ell
};

namespace detail {

template <class G>
bool odd_cycle_from_root(const G& g, std::size_t root, unsigned h, std::vector<int32_t>& depth,
                         std::vector<uint32_t>& parent, std::vector<uint32_t>& queue,
                         std::vector<uint32_t>& touched, OddCycleWitness* witness) {
    queue.clear();
    touched.clear();
    depth[root] = 0;
    parent[root] = static_cast<uint32_t>(root);
    queue.push_back(static_cast<uint32_t>(root));
    touched.push_back(static_cast<uint32_t>(root));
    bool found = false;
    uint32_t fu = 0, fv = 0;
    std::size_t qi = 0;
    while (qi < queue.size() && !found) {
        const uint32_t u = queue[qi++];
        const int32_t du = depth[u];
        g.for_neighbors(u, [&](uint32_t v) {
            if (found) return;
            if (depth[v] < 0) {
                if (du < static_cast<int32_t>(h)) {
                    depth[v] = du + 1;
                    parent[v] = u;
                    queue.push_back(v);
                    touched.push_back(v);
                }
            } else if (depth[v] == du) {
                found = true;
                fu = u;
                fv = v;
            }
        });
    }
    if (found && witness) {
        std::vector<uint32_t> cu{fu}, cv{fv};
        uint32_t x = fu, y = fv;
        while (x != y) {
            x = parent[x];
            y = parent[y];
            cu.push_back(x);
            cv.push_back(y);
        }
        witness->vertices.assign(cu.rbegin(), cu.rend()); // w .. fu
        witness->vertices.insert(witness->vertices.end(), cv.begin(), cv.end() - 1); // fv .. child of w
    }
    for (uint32_t t : touched) depth[t] = -1;
    return found;
}

} // namespace detail

// True iff g has no odd cycle of length <= ell. Layered BFS from every vertex;
// a same-layer edge at depth j certifies an odd closed walk of length 2j+1,
// and on a shortest odd cycle the antipodal edge is found this way.
template <class G>
bool odd_girth_exceeds(const G& g, unsigned ell, OddCycleWitness* witness = nullptr) {
    if (ell < 3 || ell % 2 == 0) throw BadParameter("odd_girth_exceeds: ell must be odd, >= 3");
    const std::size_t n = g.num_vertices();
    const unsigned h = (ell - 1) / 2;
    std::vector<int32_t> depth(n, -1);
    std::vector<uint32_t> parent(n, 0);
    std::vector<uint32_t> queue, touched;
    queue.reserve(n);
    touched.reserve(n);
    for (std::size_t root = 0; root < n; ++root) {
        if (detail::odd_cycle_from_root(g, root, h, depth, parent, queue, touched, witness))
            return false;
    }
    return true;
}

template <class F>
void GKGraph::for_neighbors(std::size_t v, F&& f) const {
    const uint64_t a = masks_[v];
    const unsigned d = prm_.d, s = prm_.s, m = prm_.m;
    unsigned in_pos[64], out_pos[64];
    unsigned ni = 0, no = 0;
    for (unsigned b = 0; b < d; ++b) {
        if ((a >> b) & 1)
            in_pos[ni++] = b;
        else
            out_pos[no++] = b;
    }
    // neighbors partitioned by i = |A n B| < m: choose i bits inside A and
    // s-i bits outside
    for (unsigned i = 0; i < m; ++i) {
        const unsigned j = s - i;
        if (j > no) continue;
        unsigned ci[64], cj[64];
        for (unsigned t = 0; t < i; ++t) ci[t] = t;
        while (true) {
            uint64_t mask_in = 0;
            for (unsigned t = 0; t < i; ++t) mask_in |= uint64_t(1) << in_pos[ci[t]];
            for (unsigned t = 0; t < j; ++t) cj[t] = t;
            while (true) {
                uint64_t mask = mask_in;
                for (unsigned t = 0; t < j; ++t) mask |= uint64_t(1) << out_pos[cj[t]];
                f(static_cast<uint32_t>(colex_rank(mask)));
                // next j-combination of out_pos
                unsigned t = j;
                while (t > 0 && cj[t - 1] == no - (j - (t - 1))) --t;
                if (t == 0) break;
                ++cj[t - 1];
                for (unsigned q = t; q < j; ++q) cj[q] = cj[q - 1] + 1;
            }
            if (i == 0) break;
            unsigned t = i;
            while (t > 0 && ci[t - 1] == ni - (i - (t - 1))) --t;
            if (t == 0) break;
            ++ci[t - 1];
            for (unsigned q = t; q < i; ++q) ci[q] = ci[q - 1] + 1;
        }
    }
}

// Canonical JSON for explicit graphs: {"n": ..., "edges": [[u,v], ...]} with
// u < v, sorted. Used by the oracle CLI and for instance digests.
std::string explicit_graph_to_json(const ExplicitGraph& g);
ExplicitGraph explicit_graph_from_json(const std::string& text);

std::string gk_graph_json(const GKGraph& g, bool with_edges);

} // namespace gk
