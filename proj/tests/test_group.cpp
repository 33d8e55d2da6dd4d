#include "cubecensus/group.hpp"
#include "cubecensus/hyperplanes.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace cubecensus;

TEST_CASE("apply: identity fixes every vertex") {
    auto id = identity_element(4);
    for (Vertex v = 0; v < 16; ++v) CHECK(apply(id, v) == v);
}

TEST_CASE("apply: (1)(-2 -3)(4) maps one hyperplane slice to another") {
    // pointwise image of the solutions of x1 - x2 - x3 + 2 x4 = 1 is the
    // solution set of x1 + x2 + x3 + 2 x4 = 3
    auto w = from_cycles(4, {{2, 3}}, {2, 3});
    GeneralHyperplane src{4, {1, -1, -1, 2}, 1};
    GeneralHyperplane dst{4, {1, 1, 1, 2}, 3};
    CHECK(act_on_set(w, vertices_on(src)) == vertices_on(dst));
    // and the coefficient-level transform agrees
    auto img = transform_hyperplane(w, src);
    CHECK(vertices_on(img) == vertices_on(dst));
}

TEST_CASE("apply: full negation sends the origin to the all-ones vertex") {
    SignedPermutation w = identity_element(5);
    w.negated = (1u << 5) - 1;
    CHECK(apply(w, 0) == 31u);
}

TEST_CASE("apply: dimension mismatch is rejected") {
    CHECK_THROWS_AS(act_on_set(identity_element(3), VertexSet::full(4)), std::invalid_argument);
}

TEST_CASE("compose and inverse satisfy the group laws") {
    auto id = identity_element(4);
    auto g = enumerate_group(3);
    for (const auto& w1 : g) {
        CHECK(compose(w1, identity_element(3)) == w1);
        CHECK(compose(w1, inverse(w1)) == identity_element(3));
        for (const auto& w2 : g)
            for (Vertex v = 0; v < 8; ++v)
                REQUIRE(apply(compose(w1, w2), v) == apply(w1, apply(w2, v)));
    }

    // an all-negative 2-cycle squares to the identity
    auto inv = from_cycles(4, {{1, 2}}, {1, 2});
    CHECK(compose(inv, inv) == id);
    CHECK(inverse(inv) == inv);
}

TEST_CASE("compose: random elements of B_4 and B_5 act compositionally") {
    std::mt19937_64 rng(7);
    for (int n : {4, 5}) {
        auto g = enumerate_group(n);
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        for (int it = 0; it < 500; ++it) {
            const auto &w1 = g[pick(rng)], &w2 = g[pick(rng)], &w3 = g[pick(rng)];
            CHECK(compose(compose(w1, w2), w3) == compose(w1, compose(w2, w3)));
            CHECK(compose(w1, inverse(w1)) == identity_element(n));
            auto c = compose(w1, w2);
            for (Vertex v = 0; v < (1u << n); ++v) REQUIRE(apply(c, v) == apply(w1, apply(w2, v)));
        }
    }
}

TEST_CASE("enumerate_group sizes") {
    CHECK(enumerate_group(1).size() == 2);
    CHECK(enumerate_group(2).size() == 8);
    CHECK(enumerate_group(6).size() == 46080);
    // all distinct
    auto g = enumerate_group(3);
    std::set<std::pair<std::vector<std::uint8_t>, std::uint32_t>> seen;
    for (const auto& w : g) seen.insert({w.image, w.negated});
    CHECK(seen.size() == g.size());
}

TEST_CASE("act_on_set basics") {
    VertexSet s = vertices_on(GeneralHyperplane{4, {1, 0, 0, 0}, 0});
    CHECK(act_on_set(identity_element(4), s) == s);
    SignedPermutation neg1 = identity_element(4);
    neg1.negated = 1;
    CHECK(act_on_set(neg1, s) == vertices_on(GeneralHyperplane{4, {1, 0, 0, 0}, 1}));
    CHECK(act_on_set(neg1, s).count() == s.count());
    // orbit closure: acting by every element then the inverse returns the set
    std::mt19937_64 rng(3);
    auto g = enumerate_group(4);
    for (int it = 0; it < 200; ++it) {
        VertexSet t{4, rng() & 0xffffull};
        const auto& w = g[rng() % g.size()];
        CHECK(act_on_set(inverse(w), act_on_set(w, t)) == t);
    }
}

TEST_CASE("induced_cycle_type") {
    VertexSet s{3, 0b10110101};
    CycleType ct = induced_cycle_type(identity_element(3), s);
    CHECK(ct.counts == std::map<int, int>{{1, 5}});

    // (-1) in B_1 swaps the two vertices of Q_1
    SignedPermutation flip = identity_element(1);
    flip.negated = 1;
    CHECK(induced_cycle_type(flip, VertexSet::full(1)).counts == std::map<int, int>{{2, 1}});

    // mass always equals |S|
    auto g = enumerate_group(4);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const auto& w = g[rng() % g.size()];
        CHECK(induced_cycle_type(w, VertexSet::full(4)).total_mass() == 16);
    }

    // non-stabilizing element is an error
    SignedPermutation neg1 = identity_element(3);
    neg1.negated = 1;
    VertexSet face = vertices_on(GeneralHyperplane{3, {1, 0, 0}, 0});
    CHECK_THROWS_AS(induced_cycle_type(neg1, face), std::invalid_argument);
}

TEST_CASE("canonical_set: orbit representative behavior") {
    auto g2 = enumerate_group(2);
    VertexSet origin{2, 1};  // just vertex 0
    CHECK(canonical_set(origin, g2) == origin);

    // the two 2-vertex classes of the square: an edge and the diagonal
    VertexSet edge{2, 0b0011};      // (0,0),(1,0)
    VertexSet diagonal{2, 0b1001};  // (0,0),(1,1)
    CHECK(canonical_set(edge, g2) != canonical_set(diagonal, g2));

    // idempotent and constant on orbits
    auto g4 = enumerate_group(4);
    auto action = GroupAction::build(g4, 4);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        VertexSet s{4, rng() & 0xffffull};
        VertexSet c = canonical_set(s, action);
        CHECK(canonical_set(c, action) == c);
        for (int jt = 0; jt < 20; ++jt) {
            const auto& w = g4[rng() % g4.size()];
            CHECK(canonical_set(act_on_set(w, s), action) == c);
        }
    }
}

TEST_CASE("underlying_cycle_type") {
    // (-2 4 -5)(3)(1 -6)(7) has underlying type {1^2, 2, 3}
    auto w = from_cycles(7, {{2, 4, 5}, {1, 6}}, {2, 5, 6});
    CHECK(underlying_cycle_type(w).counts == std::map<int, int>{{1, 2}, {2, 1}, {3, 1}});
    CHECK(underlying_cycle_type(identity_element(5)).counts == std::map<int, int>{{1, 5}});
    auto cyc = from_cycles(6, {{1, 2, 3, 4, 5, 6}});
    CHECK(underlying_cycle_type(cyc).counts == std::map<int, int>{{6, 1}});
}
