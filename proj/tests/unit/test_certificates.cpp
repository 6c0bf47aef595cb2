#include <doctest.h>

#include <string>

#include <json.hpp>

#include "gk/certificates.hpp"
#include "gk/errors.hpp"

using namespace gk;
using nlohmann::ordered_json;

TEST_CASE("cycle certificate, matching family") {
    Certificate c = cycle_free_certificate(3, 6, 2);
    CHECK(c.claim() == "cycles");
    CHECK(c.verdict());
    const ordered_json& d = c.doc;
    CHECK(d.at("parameters").at("d") == 6);
    CHECK(d.at("parameters").at("s") == 3);
    CHECK(d.at("parameters").at("m") == 1);
    CHECK(d.at("graph").at("n") == "20");
    CHECK(d.at("odd_girth").at("mode") == "exhaustive");
    CHECK(d.at("odd_girth").at("exceeds") == true);
    CHECK(d.at("representation").at("R") == "22");
    CHECK(d.at("representation").at("rank") == 10);
    CHECK(d.at("representation").at("represents") == true);
    CHECK(d.at("representation").at("symmetric") == true);
    CHECK(d.at("comparisons").at("rank_le_R") == true);
    CHECK(d.at("comparisons").at("R_lt_n") == false);
    CHECK(d.at("degenerate") == true);           // m = 1
    CHECK(d.at("bound_nontrivial") == false);    // 22 >= 20
    CHECK(d.at("schema_version") == 1);
    CHECK(d.contains("generated_at"));
    CHECK(d.contains("run_config"));
}

TEST_CASE("cycle certificate, ell = 5") {
    Certificate c = cycle_free_certificate(5, 10, 2);
    CHECK(c.verdict());
    CHECK(c.doc.at("parameters").at("m") == 1);
    CHECK(c.doc.at("graph").at("n") == "252");
    CHECK(c.doc.at("representation").at("R") == "386");
    CHECK(c.doc.at("odd_girth").at("ell") == 5);
}

TEST_CASE("cycle certificate parameter validation") {
    CHECK_THROWS_AS(cycle_free_certificate(4, 8, 2), BadParameter);  // even ell
    CHECK_THROWS_AS(cycle_free_certificate(3, 10, 2), BadParameter); // 10 % 6 != 0
    CHECK_THROWS_AS(cycle_free_certificate(1, 6, 2), BadParameter);
}

TEST_CASE("triangle-free certificate, d = 6") {
    Certificate c = triangle_free_od_certificate(6);
    CHECK(c.claim() == "triangle-free-od");
    CHECK(c.verdict());
    const ordered_json& d = c.doc;
    CHECK(d.at("odd_girth").at("ell") == 3);
    CHECK(d.at("factorization").at("columns") == 10);
    CHECK(d.at("factorization").at("columns_equal_rank") == true);
    CHECK(d.at("factorization").at("product_verified") == true);
    CHECK(d.at("orthogonal_representation").at("graph") == "complement");
    CHECK(d.at("orthogonal_representation").at("dimension") == 10);
    CHECK(d.at("orthogonal_representation").at("verified") == true);
    CHECK(d.at("orthogonal_representation").at("pairs_checked") == "190");
    CHECK(d.at("nearly_orthogonal").at("size") == "20");
    CHECK(d.at("nearly_orthogonal").at("dimension") == 10);
    CHECK(d.at("nearly_orthogonal").at("size_exceeds_dimension") == true);
    CHECK(d.at("nearly_orthogonal").at("verified") == true);
}

TEST_CASE("triangle-free certificate parameter validation") {
    CHECK_THROWS_AS(triangle_free_od_certificate(8), BadParameter);
    CHECK_THROWS_AS(triangle_free_od_certificate(0), BadParameter);
}

TEST_CASE("vector chromatic certificate, d = 8") {
    Certificate c = vchrom3_certificate(8, 2);
    CHECK(c.claim() == "vchrom3");
    CHECK(c.verdict());
    const ordered_json& d = c.doc;
    CHECK(d.at("parameters").at("m") == 1);
    CHECK(d.at("graph").at("n") == "70");
    CHECK(d.at("sign_vectors").at("adjacent_pairs_checked") == "35");
    CHECK(d.at("sign_vectors").at("min_symmetric_difference") == "8");
    CHECK(d.at("sign_vectors").at("worst_inner_product") == "-1/1");
    CHECK(d.at("sign_vectors").at("threshold") == "-1/2");
    CHECK(d.at("sign_vectors").at("verified") == true);
    CHECK(d.at("complement_minrank").at("rank") == 35);
    CHECK(d.at("complement_minrank").at("lower_bound") == "2");
    CHECK(d.at("representation").at("rank") == 35);
}

TEST_CASE("vector chromatic certificate parameter validation") {
    CHECK_THROWS_AS(vchrom3_certificate(6, 2), BadParameter); // 6 % 8 != 0
}

TEST_CASE("verification round trip") {
    for (const Certificate& c : {cycle_free_certificate(3, 6, 2), triangle_free_od_certificate(6),
                                 vchrom3_certificate(8, 2)}) {
        VerifyResult v = verify_certificate(c.doc);
        CHECK(v.matches);
        CHECK(v.stored_verdict);
        CHECK(v.regenerated.verdict());
        CHECK(v.mismatch.empty());
    }
}

TEST_CASE("verification survives run-config and timestamp differences") {
    RunConfig rc;
    rc.command = "some other invocation";
    rc.threads = 7;
    Certificate c = cycle_free_certificate(3, 6, 2, {}, {}, rc);
    ordered_json doc = c.doc;
    doc["generated_at"] = "1999-01-01T00:00:00Z";
    VerifyResult v = verify_certificate(doc);
    CHECK(v.matches);
}

TEST_CASE("verification flags a tampered rank") {
    Certificate c = cycle_free_certificate(3, 6, 2);
    ordered_json doc = c.doc;
    doc["representation"]["rank"] = 9;
    VerifyResult v = verify_certificate(doc);
    CHECK_FALSE(v.matches);
    CHECK(v.mismatch == "/representation/rank");
}

TEST_CASE("verification flags a tampered verdict") {
    Certificate c = vchrom3_certificate(8, 2);
    ordered_json doc = c.doc;
    doc["verdict"] = false;
    VerifyResult v = verify_certificate(doc);
    CHECK_FALSE(v.matches);
    CHECK(v.stored_verdict == false);
    CHECK(v.mismatch == "/verdict");
}

TEST_CASE("verification rejects unknown claims and missing fields") {
    ordered_json doc;
    doc["claim"] = "perpetual-motion";
    CHECK_THROWS_AS(verify_certificate(doc), ParseError);
    CHECK_THROWS_AS(verify_certificate(ordered_json::object()), ParseError);
}

TEST_CASE("sampled girth mode is recorded and deterministic") {
    GirthCheckConfig g;
    g.exhaustive_threshold = 0; // force sampling even on a small graph
    g.samples = 5;
    g.sample_size = 12;
    Certificate a = cycle_free_certificate(3, 6, 2, g);
    CHECK(a.doc.at("odd_girth").at("mode") == "sampled");
    CHECK(a.doc.at("odd_girth").at("samples") == 5);
    CHECK(a.doc.at("odd_girth").at("seed") == std::to_string(g.seed));
    CHECK(a.doc.at("odd_girth").at("exceeds") == true);
    CHECK(a.doc.at("odd_girth").contains("semantics"));

    Certificate b = cycle_free_certificate(3, 6, 2, g);
    CHECK(a.doc.at("odd_girth") == b.doc.at("odd_girth"));

    // verify reconstructs the sampled configuration from the stored section
    VerifyResult v = verify_certificate(a.doc);
    CHECK(v.matches);
}

TEST_CASE("timestamps look like UTC instants") {
    std::string t = iso8601_utc_now();
    REQUIRE(t.size() == 20);
    CHECK(t[4] == '-');
    CHECK(t[10] == 'T');
    CHECK(t.back() == 'Z');
    CHECK(t.substr(0, 2) == "20");
}
