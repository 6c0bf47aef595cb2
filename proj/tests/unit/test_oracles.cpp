#include <doctest.h>

#include "gk/errors.hpp"
#include "gk/kneser.hpp"
#include "gk/oracles.hpp"

using namespace gk;

namespace {

ExplicitGraph cycle(std::size_t n) {
    ExplicitGraph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

ExplicitGraph complete(std::size_t n) {
    ExplicitGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("minrank of edgeless and complete graphs") {
    for (uint64_t p : {2ull, 3ull}) {
        CHECK(minrank_exact(ExplicitGraph(1), p) == 1);
        CHECK(minrank_exact(ExplicitGraph(3), p) == 3); // identity forced
        CHECK(minrank_exact(complete(3), p) == 1);      // all-ones works
        CHECK(minrank_exact(complete(4), p) == 1);
    }
}

TEST_CASE("minrank of cycles is n - 2") {
    OracleStats st;
    CHECK(minrank_exact(cycle(4), 2, {}, &st) == 2);
    CHECK(st.nodes > 0);
    CHECK(minrank_exact(cycle(5), 2) == 3);
    CHECK(minrank_exact(cycle(4), 3) == 2);
    CHECK(minrank_exact(cycle(5), 3) == 3);
}

TEST_CASE("minrank path graph") {
    ExplicitGraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(minrank_exact(p3, 2) == 2);
}

TEST_CASE("minrank budget enforcement") {
    OracleBudget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(minrank_exact(cycle(5), 2, tiny), BudgetExceeded);
    OracleBudget small_graphs;
    small_graphs.max_vertices = 4;
    CHECK_THROWS_AS(minrank_exact(cycle(5), 2, small_graphs), BudgetExceeded);
}

TEST_CASE("orthogonality dimension over GF(2)") {
    CHECK(od_exact_gf2(ExplicitGraph(1)) == 1);
    CHECK(od_exact_gf2(ExplicitGraph(4)) == 1); // same all-ones vector everywhere
    CHECK(od_exact_gf2(complete(2)) == 2);
    CHECK(od_exact_gf2(complete(3)) == 3);
    CHECK(od_exact_gf2(complete(4)) == 4);
    CHECK(od_exact_gf2(cycle(5)) == 3);
}

TEST_CASE("orthogonality dimension budget") {
    OracleBudget tiny;
    tiny.max_nodes = 2;
    CHECK_THROWS_AS(od_exact_gf2(complete(4), tiny), BudgetExceeded);
}

TEST_CASE("homomorphisms") {
    CHECK(homomorphism_exists(cycle(5), complete(3)));        // 3-colorable
    CHECK_FALSE(homomorphism_exists(complete(3), cycle(5)));  // triangle has no image
    CHECK_FALSE(homomorphism_exists(cycle(5), complete(2)));  // odd cycle not bipartite
    CHECK(homomorphism_exists(cycle(5), cycle(5)));
    CHECK(homomorphism_exists(cycle(4), complete(2)));
    // K(5,2,1) is 3-chromatic
    CHECK(homomorphism_exists(ExplicitGraph::from_gk(GKGraph(GKParams{5, 2, 1})), complete(3)));
}

TEST_CASE("multichromatic numbers of the 5-cycle") {
    CHECK(multichromatic_exact(cycle(5), 1) == 3);
    CHECK(multichromatic_exact(cycle(5), 2) == 5);
    CHECK(multichromatic_exact(cycle(5), 3) == 8);
}

TEST_CASE("multichromatic basics") {
    CHECK(multichromatic_exact(ExplicitGraph(3), 2) == 2); // no edges: everyone gets the same pair
    CHECK(multichromatic_exact(complete(3), 1) == 3);
    CHECK(multichromatic_exact(complete(3), 2) == 6);
    CHECK(multichromatic_exact(cycle(4), 2) == 4);
}

TEST_CASE("multichromatic dimension budget") {
    OracleBudget tiny;
    tiny.max_dimension = 2;
    CHECK_THROWS_AS(multichromatic_exact(cycle(5), 1, tiny), BudgetExceeded);
}
