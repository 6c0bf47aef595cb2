#include <doctest.h>

#include <cstddef>
#include <random>
#include <vector>

#include "gk/errors.hpp"
#include "gk/subspaces.hpp"

using namespace gk;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Subspace span2(std::initializer_list<std::initializer_list<long>> gens, std::size_t ambient) {
    std::vector<RationalVector> g;
    for (const auto& row : gens) g.push_back(rv(row));
    return Subspace::from_vectors(ambient, g);
}

Rational random_rational(std::mt19937_64& rng) {
    long num = long(rng() % 9) - 4;
    long den = 1 + long(rng() % 3);
    return Rational(num, den);
}

Subspace random_subspace(std::size_t ambient, std::size_t gens, std::mt19937_64& rng) {
    std::vector<RationalVector> g(gens);
    for (auto& row : g) {
        row.resize(ambient);
        for (auto& x : row) x = random_rational(rng);
    }
    return Subspace::from_vectors(ambient, g);
}

// random subspace of u spanned by `gens` random combinations of its basis
Subspace random_subspace_of(const Subspace& u, std::size_t gens, std::mt19937_64& rng) {
    std::vector<RationalVector> g;
    for (std::size_t k = 0; k < gens; ++k) {
        RationalVector combo(u.ambient(), Rational(0));
        for (std::size_t i = 0; i < u.dim(); ++i) {
            Rational c = random_rational(rng);
            for (std::size_t j = 0; j < u.ambient(); ++j) combo[j] += c * u.basis().get(i, j);
        }
        g.push_back(std::move(combo));
    }
    return Subspace::from_vectors(u.ambient(), g);
}

} // namespace

TEST_CASE("canonical bases make equality trivial") {
    CHECK(span2({{2, 4}}, 2) == span2({{1, 2}}, 2));
    CHECK(span2({{1, 0}, {0, 1}, {1, 1}}, 2).dim() == 2);
    CHECK(Subspace::full(3).dim() == 3);
    CHECK(Subspace(3).dim() == 0);
    CHECK(span2({{0, 0, 0}}, 3).dim() == 0);
    CHECK_THROWS_AS(Subspace::from_vectors(2, {rv({1, 2, 3})}), DimensionMismatch);
}

TEST_CASE("membership") {
    Subspace s = span2({{1, 0, 1}, {0, 1, 1}}, 3);
    CHECK(s.contains(rv({1, 2, 3})));
    CHECK_FALSE(s.contains(rv({1, 0, 0})));
    CHECK(s.contains(rv({0, 0, 0})));
    CHECK(s.contains(span2({{1, 1, 2}}, 3)));
    CHECK_FALSE(s.contains(Subspace::full(3)));
    CHECK(Subspace::full(3).contains(s));
    CHECK_THROWS_AS(s.contains(rv({1, 0})), DimensionMismatch);
}

TEST_CASE("intersection and sum") {
    Subspace e1 = span2({{1, 0}}, 2), e2 = span2({{0, 1}}, 2);
    CHECK(e1.intersect(e2).dim() == 0);
    CHECK(e1.sum(e2) == Subspace::full(2));

    Subspace a = span2({{1, 0, 0}, {0, 1, 0}}, 3);
    Subspace b = span2({{0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(a.intersect(b) == span2({{0, 1, 0}}, 3));

    CHECK_THROWS_AS(e1.intersect(span2({{1, 0, 0}}, 3)), DimensionMismatch);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        Subspace v1 = random_subspace(6, 1 + rng() % 5, rng);
        Subspace v2 = random_subspace(6, 1 + rng() % 5, rng);
        Subspace s = v1.sum(v2), i = v1.intersect(v2);
        CHECK(v1.dim() + v2.dim() == s.dim() + i.dim());
        CHECK(s.contains(v1));
        CHECK(v1.contains(i));
        CHECK(v2.contains(i));
    }
}

TEST_CASE("extend") {
    Subspace s = span2({{1, 0, 0}}, 3);
    CHECK(s.extend(rv({0, 1, 0})).dim() == 2);
    CHECK(s.extend(rv({2, 0, 0})) == s);
}

TEST_CASE("uncovered vector: moment-curve scan") {
    // covers {span(e1)}: alpha=0 gives (1,0) inside, alpha=1 gives (1,1) outside
    Subspace u = Subspace::full(2);
    std::size_t scanned = 0;
    RationalVector got = uncovered_vector(u, {span2({{1, 0}}, 2)}, &scanned);
    CHECK(got == rv({1, 1}));
    CHECK(scanned == 2);

    // empty collection: first basis vector
    CHECK(uncovered_vector(u, {}) == rv({1, 0}));

    Subspace u3 = Subspace::full(3);
    std::vector<Subspace> ws = {span2({{1, 0, 0}, {0, 1, 0}}, 3), span2({{1, 0, 0}, {0, 0, 1}}, 3)};
    RationalVector v = uncovered_vector(u3, ws, &scanned);
    CHECK(u3.contains(v));
    for (const Subspace& w : ws) CHECK_FALSE(w.contains(v));
    CHECK(scanned <= ws.size() * (u3.dim() - 1) + 1);
}

TEST_CASE("uncovered vector: error paths") {
    Subspace u = span2({{1, 0}}, 2);
    CHECK_THROWS_AS(uncovered_vector(u, {Subspace::full(2)}), CoveringCollection);
    CHECK_THROWS_AS(uncovered_vector(Subspace(2), {}), BadParameter);
    CHECK_THROWS_AS(uncovered_vector(u, {span2({{1, 0, 0}}, 3)}), DimensionMismatch);
}

TEST_CASE("uncovered vector: randomized postconditions and scan bound") {
    std::mt19937_64 rng(0xabcdULL);
    int done = 0;
    while (done < 120) {
        std::size_t ambient = 2 + rng() % 7; // up to 8
        Subspace u = random_subspace(ambient, 1 + rng() % ambient, rng);
        if (u.dim() == 0) continue;
        std::size_t nw = rng() % 13;
        std::vector<Subspace> ws;
        bool ok = true;
        for (std::size_t k = 0; k < nw; ++k) {
            Subspace w = random_subspace_of(u, rng() % (u.dim() + 1), rng);
            if (w.dim() == u.dim()) { ok = false; break; } // must stay proper
            ws.push_back(std::move(w));
        }
        if (!ok) continue;
        std::size_t scanned = 0;
        RationalVector v = uncovered_vector(u, ws, &scanned);
        CHECK(u.contains(v));
        for (const Subspace& w : ws) CHECK_FALSE(w.contains(v));
        CHECK(scanned <= ws.size() * (u.dim() - 1) + 1);
        ++done;
    }
}

TEST_CASE("graded subspace: endpoints and a middle case") {
    Subspace u = Subspace::full(4);
    std::vector<Subspace> ws = {span2({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4)};

    CHECK(graded_subspace(u, ws, 0).dim() == 0);
    CHECK(graded_subspace(u, ws, 4) == u);

    Subspace mid = graded_subspace(u, ws, 2);
    CHECK(mid.dim() == 2);
    CHECK(u.contains(mid));
    CHECK(mid.intersect(ws[0]).dim() == 0); // max(0, 2+2-4)

    CHECK_THROWS_AS(graded_subspace(u, ws, 5), BadParameter);
    CHECK_THROWS_AS(graded_subspace(span2({{1, 0, 0, 0}}, 4), ws, 1), PreconditionViolated);
}

TEST_CASE("graded subspace: exact intersection grading on random instances") {
    std::mt19937_64 rng(0x5eedULL);
    int done = 0;
    while (done < 80) {
        std::size_t ambient = 2 + rng() % 7;
        Subspace u = random_subspace(ambient, 1 + rng() % ambient, rng);
        std::size_t l = u.dim();
        if (l == 0) continue;
        std::size_t nw = rng() % 7;
        std::vector<Subspace> ws;
        for (std::size_t k = 0; k < nw; ++k)
            ws.push_back(random_subspace_of(u, rng() % (l + 1), rng));
        std::size_t lp = rng() % (l + 1);
        Subspace res = graded_subspace(u, ws, lp);
        CHECK(res.dim() == lp);
        CHECK(u.contains(res));
        for (const Subspace& w : ws) {
            std::size_t want = w.dim() + lp >= l ? w.dim() + lp - l : 0;
            CHECK(res.intersect(w).dim() == want);
        }
        ++done;
    }
}

TEST_CASE("avoiding subspace: examples") {
    Subspace u = Subspace::full(3);
    std::vector<Subspace> ws = {span2({{1, 0, 0}, {0, 1, 0}}, 3)};
    Subspace res = avoiding_subspace(u, ws, 2);
    CHECK(res.dim() == 1);
    CHECK(res.intersect(ws[0]).dim() == 0);
    // any avoiding line must leave the e1-e2 plane
    CHECK(res.basis().get(0, 2) != 0);

    CHECK(avoiding_subspace(u, {}, 0) == u);
    CHECK_THROWS_AS(avoiding_subspace(u, {u}, 2), PreconditionViolated);
    CHECK_THROWS_AS(avoiding_subspace(u, ws, 4), BadParameter);
}

TEST_CASE("avoiding subspace: randomized trivial-intersection trials") {
    std::mt19937_64 rng(0xfeedULL);
    int done = 0;
    while (done < 80) {
        std::size_t ambient = 2 + rng() % 7;
        Subspace u = random_subspace(ambient, 1 + rng() % ambient, rng);
        std::size_t l = u.dim();
        if (l == 0) continue;
        std::size_t nw = rng() % 13;
        std::vector<Subspace> ws;
        std::size_t lp = 0;
        for (std::size_t k = 0; k < nw; ++k) {
            Subspace w = random_subspace(ambient, 1 + rng() % ambient, rng);
            std::size_t cut = u.intersect(w).dim();
            if (cut > lp) lp = cut;
            ws.push_back(std::move(w));
        }
        if (lp > l) continue;
        Subspace res = avoiding_subspace(u, ws, lp);
        CHECK(res.dim() == l - lp);
        CHECK(u.contains(res));
        for (const Subspace& w : ws) CHECK(res.intersect(w).dim() == 0);
        ++done;
    }
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 10; ++t) {
        Subspace s = random_subspace(1 + rng() % 6, 1 + rng() % 4, rng);
        CHECK(subspace_from_json(subspace_to_json(s)) == s);
    }
    CHECK_THROWS_AS(subspace_from_json("not json"), ParseError);
    CHECK_THROWS_AS(subspace_from_json("{\"ambient\": 2}"), ParseError);
}
