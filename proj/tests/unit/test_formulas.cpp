#include <doctest.h>

#include "gk/arith.hpp"
#include "gk/errors.hpp"
#include "gk/formulas.hpp"

using namespace gk;

TEST_CASE("stahl rhs values") {
    CHECK(stahl_rhs(1, 2, 5) == 3);
    CHECK(stahl_rhs(2, 2, 5) == 5);
    CHECK(stahl_rhs(3, 2, 5) == 8);
    CHECK(stahl_rhs(4, 2, 5) == 10);
    CHECK(stahl_rhs(1, 3, 7) == 3);  // ceil(1/3)*(7-6) + 2
    CHECK(stahl_rhs(5, 3, 10) == 18); // ceil(5/3)*4 + 10
}

TEST_CASE("stahl preconditions") {
    CHECK_THROWS_AS(stahl_rhs(0, 2, 5), BadParameter);
    CHECK_THROWS_AS(stahl_rhs(1, 0, 5), BadParameter);
    CHECK_THROWS_AS(stahl_rhs(1, 3, 5), BadParameter); // d < 2s
}

TEST_CASE("s = 2 specialization agrees with the general rhs") {
    for (uint64_t k = 1; k <= 12; ++k)
        for (uint64_t d = 4; d <= 16; ++d)
            CHECK(thm_s2_value(k, d) == stahl_rhs(k, 2, d));
    CHECK_THROWS_AS(thm_s2_value(1, 3), BadParameter);
}

TEST_CASE("general lower bound") {
    // k=3, s=3, d=6: (3 - ceil(4/3) + 1)/2 * 6 - 0 = (3-2+1)/2*6 = 6
    CHECK(thm_general_lower(3, 3, 6, Rational(0)) == Rational(6));
    CHECK(thm_general_lower(3, 3, 6, rational_from_string("1/2")) == rational_from_string("11/2"));
    CHECK(thm_general_lower(7, 3, 8, Rational(0)) == Rational(20)); // (7-3+1)/2*8
    CHECK_THROWS_AS(thm_general_lower(2, 3, 6, Rational(0)), BadParameter); // k < s
    CHECK_THROWS_AS(thm_general_lower(3, 2, 6, Rational(0)), BadParameter); // s < 3
    CHECK_THROWS_AS(thm_general_lower(3, 3, 5, Rational(0)), BadParameter); // d < 2s
    CHECK_THROWS_AS(thm_general_lower(3, 3, 6, Rational(-1)), BadParameter);
}

TEST_CASE("fractional lower bound") {
    CHECK(bukh_cox_lower(3, 2, 5) == rational_from_string("15/2"));
    CHECK(bukh_cox_lower(1, 2, 4) == Rational(2));
    // at s | k the bound is the integer k*d/s
    for (uint64_t s = 1; s <= 4; ++s)
        for (uint64_t mult = 1; mult <= 3; ++mult)
            CHECK(bukh_cox_lower(s * mult, s, 2 * s + 1) == Rational(long(mult * (2 * s + 1))));
    CHECK_THROWS_AS(bukh_cox_lower(0, 2, 5), BadParameter);
    CHECK_THROWS_AS(bukh_cox_lower(1, 3, 5), BadParameter);
}

TEST_CASE("bound reports at frozen points") {
    BoundReport a = bound_report(12, 2);
    CHECK(a.n == 924);
    CHECK(a.R == 794);
    CHECK(a.r_lt_n);
    CHECK(a.delta > 0.0);

    BoundReport b = bound_report(6, 1);
    CHECK(b.n == 20);
    CHECK(b.R == 22);
    CHECK_FALSE(b.r_lt_n);
    CHECK(b.delta < 0.0);

    BoundReport c = bound_report(16, 2);
    CHECK(c.n == 12870);
    CHECK(c.R == 14893);
    CHECK_FALSE(c.r_lt_n);

    BoundReport e = bound_report(18, 3);
    CHECK(e.n == 48620);
    CHECK(e.R == 31180);
    CHECK(e.r_lt_n);
    CHECK(e.entropy_estimate > 0.0);
}

TEST_CASE("crossover search, fixed ell") {
    CrossoverRule rule; // ell = 3
    CrossoverResult res = crossover_search(rule, 30);
    REQUIRE(res.found);
    CHECK(res.minimal_d == 12);
    // admissible d: multiples of 6
    CHECK(res.reports.size() == 5);
    for (const BoundReport& r : res.reports) {
        CHECK(r.d % 6 == 0);
        CHECK(r.m == r.d / 6);
        // re-verify the verdict with independent binomial sums
        BigInt n = binomial(r.d, r.d / 2);
        BigInt sum = 0;
        for (uint64_t i = 0; i + r.m <= r.d / 2; ++i) sum += binomial(r.d, i);
        CHECK(r.n == n);
        CHECK(r.R == sum);
        CHECK(r.r_lt_n == (sum < n));
    }
    CHECK_FALSE(res.reports[0].r_lt_n); // d = 6
    CHECK(res.reports[1].r_lt_n);       // d = 12

    CrossoverResult none = crossover_search(rule, 10);
    CHECK_FALSE(none.found);
    CHECK(none.minimal_d == 0);
}

TEST_CASE("crossover search, m = d/8") {
    CrossoverRule rule;
    rule.kind = CrossoverRule::Kind::DOver8;
    CrossoverResult res = crossover_search(rule, 40);
    REQUIRE(res.found);
    CHECK(res.minimal_d == 24);
    for (const BoundReport& r : res.reports) {
        CHECK(r.d % 8 == 0);
        CHECK(r.m == r.d / 8);
    }
    // frozen endpoints: d=8 and d=16 do not cross, d=24 does
    CHECK_FALSE(res.reports[0].r_lt_n);
    CHECK(res.reports[0].R == 93);
    CHECK(res.reports[0].n == 70);
    CHECK_FALSE(res.reports[1].r_lt_n);
    CHECK(res.reports[1].R == 14893);
    CHECK(res.reports[2].r_lt_n);
    CHECK(res.reports[2].R == BigInt(2579130));
    CHECK(res.reports[2].n == BigInt(2704156));
}

TEST_CASE("ell rules with other periods") {
    CrossoverRule rule;
    rule.ell = 5; // m = d/10
    CrossoverResult res = crossover_search(rule, 20);
    CHECK(res.reports.size() == 2); // d = 10, 20
    for (const BoundReport& r : res.reports) CHECK(r.m == r.d / 10);
}
