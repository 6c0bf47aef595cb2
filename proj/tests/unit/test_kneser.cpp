#include <doctest.h>

#include <algorithm>
#include <bit>
#include <json.hpp>

#include "gk/errors.hpp"
#include "gk/kneser.hpp"

using namespace gk;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(GKParams{5, 2, 0}), BadParameter);
    CHECK_THROWS_AS(validate(GKParams{5, 6, 1}), BadParameter);
    CHECK_THROWS_AS(validate(GKParams{5, 2, 3}), BadParameter);
    CHECK_THROWS_AS(validate(GKParams{65, 2, 1}), BadParameter);
    CHECK_NOTHROW(validate(GKParams{64, 1, 1}));
}

TEST_CASE("colex rank and unrank invert each other") {
    uint64_t idx = 0;
    uint64_t mask = (1u << 3) - 1; // first 3-subset of [6]
    for (; mask < (1u << 6); ) {
        CHECK(colex_rank(mask) == idx);
        CHECK(colex_unrank(idx, 6, 3) == mask);
        ++idx;
        // Gosper's hack
        uint64_t c = mask & -mask, r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if (idx == 20) break;
    }
    CHECK(idx == 20);
}

TEST_CASE("vertices come out in ascending mask order") {
    GKGraph g(GKParams{6, 3, 1});
    REQUIRE(g.num_vertices() == 20);
    for (std::size_t i = 0; i + 1 < 20; ++i) CHECK(g.vertex_mask(i) < g.vertex_mask(i + 1));
    for (std::size_t i = 0; i < 20; ++i)
        CHECK(std::popcount(g.vertex_mask(i)) == 3);
}

TEST_CASE("petersen graph") {
    GKGraph g(GKParams{5, 2, 1});
    CHECK(g.num_vertices() == 10);
    CHECK(g.degree() == 3);
    CHECK(g.num_edges() == 15);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            CHECK(g.adjacent(i, j) == (i != j && (g.vertex_mask(i) & g.vertex_mask(j)) == 0));
    CHECK(odd_girth_exceeds(g, 3, nullptr));
    OddCycleWitness w;
    CHECK_FALSE(odd_girth_exceeds(g, 5, &w));
    REQUIRE(w.vertices.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(g.adjacent(w.vertices[i], w.vertices[(i + 1) % 5]));
}

TEST_CASE("m = 1, s = d/2 gives a perfect matching") {
    GKGraph g(GKParams{6, 3, 1});
    CHECK(g.degree() == 1);
    CHECK(g.num_edges() == 10);
    CHECK(odd_girth_exceeds(g, 9, nullptr)); // bipartite: no odd cycle at all
    for (std::size_t i = 0; i < 20; ++i) {
        auto nb = g.neighbor_list(i);
        REQUIRE(nb.size() == 1);
        CHECK(g.vertex_mask(nb[0]) == (~g.vertex_mask(i) & 0x3f));
    }
}

TEST_CASE("m = s makes it complete") {
    GKGraph g(GKParams{4, 2, 2}); // any two distinct 2-sets meet in < 2 points
    CHECK(g.num_vertices() == 6);
    CHECK(g.degree() == 5);
    CHECK(g.num_edges() == 15);
    OddCycleWitness w;
    CHECK_FALSE(odd_girth_exceeds(g, 3, &w));
    REQUIRE(w.vertices.size() == 3);
    CHECK(g.adjacent(w.vertices[0], w.vertices[1]));
    CHECK(g.adjacent(w.vertices[1], w.vertices[2]));
    CHECK(g.adjacent(w.vertices[2], w.vertices[0]));
}

TEST_CASE("degree formula against brute force") {
    for (auto [d, s, m] : {std::tuple<unsigned, unsigned, unsigned>{7, 3, 2},
                           {8, 4, 2},
                           {6, 2, 1},
                           {9, 4, 3}}) {
        GKGraph g(GKParams{d, s, m});
        uint64_t deg0 = 0;
        for (std::size_t j = 0; j < g.num_vertices(); ++j)
            if (g.adjacent(0, j)) ++deg0;
        CHECK(g.degree() == deg0);
        CHECK(g.num_edges() == BigInt(static_cast<unsigned long>(g.num_vertices())) *
                                   BigInt(static_cast<unsigned long>(g.degree())) / 2);
    }
}

TEST_CASE("for_neighbors matches neighbor_list") {
    GKGraph g(GKParams{7, 3, 2});
    for (std::size_t v = 0; v < g.num_vertices(); v += 5) {
        std::vector<uint32_t> got;
        g.for_neighbors(v, [&](uint32_t u) { got.push_back(u); });
        std::sort(got.begin(), got.end());
        CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
        CHECK(got == g.neighbor_list(v));
    }
}

TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(GKGraph(GKParams{30, 15, 1}, 1000), MemoryGuard);
    CHECK_NOTHROW(GKGraph(GKParams{6, 3, 1}, 20));
}

TEST_CASE("explicit graph from gk and complement") {
    GKGraph g(GKParams{5, 2, 1});
    ExplicitGraph e = ExplicitGraph::from_gk(g);
    REQUIRE(e.num_vertices() == 10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) CHECK(e.adjacent(i, j) == g.adjacent(i, j));
    ExplicitGraph c = e.complement();
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK_FALSE(c.adjacent(i, i));
        for (std::size_t j = 0; j < 10; ++j)
            if (i != j) CHECK(c.adjacent(i, j) == !e.adjacent(i, j));
    }
    CHECK(c.complement() == e);
    CHECK(e.num_edges() == 15);
    CHECK(c.num_edges() == 45 - 15);
}

TEST_CASE("graph json export") {
    GKGraph g(GKParams{5, 2, 1});
    auto j = nlohmann::json::parse(gk_graph_json(g, true));
    CHECK(j["d"] == 5);
    CHECK(j["s"] == 2);
    CHECK(j["m"] == 1);
    CHECK(j["n"] == 10);
    CHECK(j["degree"] == 3);
    CHECK(j["edges"] == "15");
    CHECK(j["edge_list"].size() == 15);
    auto j2 = nlohmann::json::parse(gk_graph_json(g, false));
    CHECK_FALSE(j2.contains("edge_list"));
}
