#include "gk/kneser.hpp"

#include <algorithm>

#include <json.hpp>

namespace gk {

uint64_t colex_rank(uint64_t mask) {
    uint64_t r = 0;
    unsigned j = 1;
    while (mask) {
        unsigned pos = __builtin_ctzll(mask);
        mask &= mask - 1;
        r += binomial_u64(pos, j);
        ++j;
    }
    return r;
}

uint64_t colex_unrank(uint64_t index, unsigned d, unsigned s) {
    if (s > d || d > 64) throw BadParameter("colex_unrank: bad (d,s)");
    uint64_t mask = 0;
    uint64_t rem = index;
    for (unsigned j = s; j >= 1; --j) {
        // largest a with C(a, j) <= rem
        unsigned a = j - 1;
        while (a + 1 < d && binomial_u64(a + 1, j) <= rem) ++a;
        rem -= binomial_u64(a, j);
        mask |= uint64_t(1) << a;
    }
    if (rem != 0 || static_cast<unsigned>(__builtin_popcountll(mask)) != s)
        throw BadParameter("colex_unrank: index out of range");
    return mask;
}

void validate(const GKParams& p) {
    if (p.m < 1 || p.m > p.s || p.s > p.d || p.d > 64)
        throw BadParameter("GKParams: need 1 <= m <= s <= d <= 64");
}

GKGraph::GKGraph(GKParams p, std::size_t max_vertices) : prm_(p) {
    validate(p);
    BigInt n = binomial(p.d, p.s);
    if (n > BigInt(static_cast<unsigned long>(max_vertices)))
        throw MemoryGuard("GKGraph: C(d,s) = " + n.get_str() + " exceeds vertex cap " + std::to_string(max_vertices));
    const std::size_t count = n.get_ui();
    masks_.reserve(count);
    // Gosper's hack: masks of fixed popcount ascend numerically = colex order
    uint64_t v = (p.s == 0) ? 0 : ((uint64_t(1) << p.s) - 1);
    for (std::size_t i = 0; i < count; ++i) {
        masks_.push_back(v);
        if (i + 1 == count) break;
        uint64_t c = v & (~v + 1);
        uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

uint64_t GKGraph::degree() const {
    uint64_t deg = 0;
    for (unsigned i = 0; i < prm_.m; ++i) {
        if (prm_.s - i > prm_.d - prm_.s) continue;
        deg += binomial_u64(prm_.s, i) * binomial_u64(prm_.d - prm_.s, prm_.s - i);
    }
    return deg;
}

BigInt GKGraph::num_edges() const {
    BigInt e = BigInt(static_cast<unsigned long>(num_vertices())) * BigInt(static_cast<unsigned long>(degree()));
    return e / 2;
}

std::vector<uint32_t> GKGraph::neighbor_list(std::size_t v) const {
    std::vector<uint32_t> out;
    out.reserve(degree());
    for_neighbors(v, [&](uint32_t u) { out.push_back(u); });
    std::sort(out.begin(), out.end());
    return out;
}

void ExplicitGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw BadParameter("add_edge: vertex out of range");
    if (u == v) throw BadParameter("add_edge: loops not allowed");
    adj_.set(u, v, true);
    adj_.set(v, u, true);
}

BigInt ExplicitGraph::num_edges() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < n_; ++v) twice += degree(v);
    return BigInt(static_cast<unsigned long>(twice / 2));
}

ExplicitGraph ExplicitGraph::complement() const {
    ExplicitGraph c(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!adjacent(i, j)) c.add_edge(i, j);
    return c;
}

ExplicitGraph ExplicitGraph::from_gk(const GKGraph& g) {
    ExplicitGraph out(g.num_vertices());
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        for (std::size_t j = i + 1; j < g.num_vertices(); ++j)
            if (g.adjacent(i, j)) out.add_edge(i, j);
    return out;
}

std::string explicit_graph_to_json(const ExplicitGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.num_vertices();
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t u = 0; u < g.num_vertices(); ++u)
        for (std::size_t v = u + 1; v < g.num_vertices(); ++v)
            if (g.adjacent(u, v)) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

ExplicitGraph explicit_graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_unsigned()) throw ParseError("graph JSON: missing n");
    ExplicitGraph g(j["n"].get<std::size_t>());
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: bad edge");
            g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
    }
    return g;
}

std::string gk_graph_json(const GKGraph& g, bool with_edges) {
    nlohmann::ordered_json j;
    const auto& p = g.params();
    j["d"] = p.d;
    j["s"] = p.s;
    j["m"] = p.m;
    j["n"] = g.num_vertices();
    j["degree"] = g.degree();
    j["edges"] = g.num_edges().get_str();
    j["vertex_encoding"] = "vertex i is the i-th s-subset of [d] in colexicographic order, as a d-bit mask (bit k = element k+1)";
    if (with_edges) {
        auto edges = nlohmann::ordered_json::array();
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            for (uint32_t u : g.neighbor_list(v))
                if (u > v) edges.push_back({v, u});
        }
        j["edge_list"] = std::move(edges);
    }
    return j.dump(2) + "\n";
}

} // namespace gk
