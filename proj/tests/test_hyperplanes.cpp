#include "cubecensus/hyperplanes.hpp"
#include "cubecensus/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace cubecensus;

TEST_CASE("vertices_on counts") {
    CHECK(vertices_on(GeneralHyperplane{4, {1, 0, 0, 0}, 0}).count() == 8);
    CHECK(vertices_on(GeneralHyperplane{6, {1, 1, 1, 1, 1, 1}, 3}).count() == 20);
    CHECK(vertices_on(GeneralHyperplane{3, {1, 1, 1}, 1}).count() == 3);
}

TEST_CASE("transform_hyperplane commutes with the vertex-set action") {
    GeneralHyperplane h{4, {1, -1, -1, 2}, 1};
    CHECK(vertices_on(transform_hyperplane(identity_element(4), h)) == vertices_on(h));

    auto w = from_cycles(4, {{2, 3}}, {2, 3});
    GeneralHyperplane img = transform_hyperplane(w, h);
    CHECK(img.coeffs == std::vector<long long>{1, 1, 1, 2});
    CHECK(img.rhs == 3);

    // exhaustive over B_4 for a couple of hyperplanes
    for (const auto& hh :
         {GeneralHyperplane{4, {1, 1, 1, 2}, 2}, GeneralHyperplane{4, {1, -2, 0, 1}, -1}}) {
        VertexSet v = vertices_on(hh);
        for (const auto& g : enumerate_group(4))
            REQUIRE(vertices_on(transform_hyperplane(g, hh)) == act_on_set(g, v));
    }

    // sampled for n = 5, 6
    std::mt19937_64 rng(17);
    for (int n : {5, 6}) {
        auto g = enumerate_group(n);
        GeneralHyperplane hh{n, std::vector<long long>(n), 2};
        for (auto& c : hh.coeffs) c = static_cast<long long>(rng() % 5) - 2;
        hh.coeffs[0] = 1;
        VertexSet v = vertices_on(hh);
        for (int it = 0; it < 300; ++it) {
            const auto& w2 = g[rng() % g.size()];
            REQUIRE(vertices_on(transform_hyperplane(w2, hh)) == act_on_set(w2, v));
        }
    }
}

TEST_CASE("canonicalize") {
    // -x1 = -1 is the class of x1 = 0
    SpannedHyperplane h = canonicalize(GeneralHyperplane{4, {-1, 0, 0, 0}, -1});
    CHECK(h == SpannedHyperplane{4, {1}, 0});
    // sorting
    CHECK(canonicalize(GeneralHyperplane{3, {1, 1, 0}, 1}) == SpannedHyperplane{3, {1, 1}, 1});
    // gcd reduction
    CHECK(canonicalize(GeneralHyperplane{3, {2, 2, 0}, 2}) == SpannedHyperplane{3, {1, 1}, 1});
    // complement rule picks the smaller right side
    CHECK(canonicalize(GeneralHyperplane{3, {1, 1, 1}, 2}) == SpannedHyperplane{3, {1, 1, 1}, 1});
    // invariance across the whole class
    GeneralHyperplane base{5, {1, 1, 1, 2, 0}, 2};
    SpannedHyperplane canon = canonicalize(base);
    for (const auto& w : enumerate_group(5))
        if (underlying_cycle_type(w).counts.count(5))  // spot-check a slice of the group
            REQUIRE(canonicalize(transform_hyperplane(w, base)) == canon);

    CHECK_THROWS_AS(canonicalize(GeneralHyperplane{3, {0, 0, 0}, 1}), std::invalid_argument);
    // a hyperplane whose cube vertices span too little is not spanned:
    // x1+x2+2x3+2x4+2x5 = 3 holds 6 vertices of affine rank 3
    GeneralHyperplane thin{5, {1, 1, 2, 2, 2}, 3};
    CHECK(vertices_on(thin).count() == 6);
    CHECK(affine_dimension(vertices_on(thin)) == 3);
    CHECK_THROWS_AS(canonicalize(thin), std::invalid_argument);
    // a hyperplane missing the cube entirely
    CHECK_THROWS_AS(canonicalize(GeneralHyperplane{3, {1, 1, 1}, 9}), std::invalid_argument);
}

TEST_CASE("enumerate_spanned: small dimensions") {
    auto r2 = enumerate_spanned(2);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == SpannedHyperplane{2, {1}, 0});
    CHECK(r2[1] == SpannedHyperplane{2, {1, 1}, 1});
    CHECK(enumerate_spanned(3).size() == 3);

    auto r4 = enumerate_spanned(4);
    std::vector<SpannedHyperplane> expect4{{4, {1}, 0},          {4, {1, 1}, 1},    {4, {1, 1, 1}, 1},
                                           {4, {1, 1, 1, 1}, 1}, {4, {1, 1, 1, 1}, 2},
                                           {4, {1, 1, 1, 2}, 2}};
    CHECK(r4 == expect4);
    int maxc4 = 0;
    for (const auto& h : r4) maxc4 = std::max(maxc4, h.coeffs.back());
    CHECK(maxc4 == 2);
}

TEST_CASE("enumerate_spanned: n = 5 classes") {
    auto r5 = enumerate_spanned(5);
    // the 6 classes inherited from Q_4 plus 9 genuinely 5-dimensional ones;
    // the often-quoted forms x1+x2+2x3+2x4+2x5 = 3 and = 4 do not qualify
    // (their 6 cube vertices only span dimension 3, see canonicalize test)
    REQUIRE(r5.size() == 15);
    int maxc = 0;
    for (const auto& h : r5) maxc = std::max(maxc, h.coeffs.back());
    CHECK(maxc == 3);
    for (const auto& h : r5) {
        CHECK(h.coeffs != std::vector<int>{1, 1, 2, 2, 2});
        CHECK(affine_dimension(vertices_on(h)) == 4);
    }
    std::vector<SpannedHyperplane> expect_new{
        {5, {1, 1, 1, 1, 1}, 1}, {5, {1, 1, 1, 1, 1}, 2}, {5, {1, 1, 1, 1, 2}, 2},
        {5, {1, 1, 1, 1, 2}, 3}, {5, {1, 1, 1, 1, 3}, 3}, {5, {1, 1, 1, 2, 2}, 2},
        {5, {1, 1, 1, 2, 2}, 3}, {5, {1, 1, 1, 2, 3}, 3}, {5, {1, 1, 2, 2, 3}, 4}};
    std::vector<SpannedHyperplane> t5;
    for (const auto& h : r5)
        if (h.support() == 5) t5.push_back(h);
    CHECK(t5 == expect_new);

    // duplicate-free under canonical vertex sets
    auto g = enumerate_group(5);
    auto action = GroupAction::build(g, 5);
    std::set<std::uint64_t> canon;
    for (const auto& h : r5) canon.insert(canonical_bits(vertices_on(h).bits, action));
    CHECK(canon.size() == r5.size());
}

TEST_CASE("spanned hyperplanes never hold more than half the vertices") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& h : enumerate_spanned(n)) CHECK(vertices_on(h).count() <= (1 << (n - 1)));
    for (const auto& h : builtin_representatives(6, 13)) CHECK(vertices_on(h).count() <= 32);
}

TEST_CASE("enumerate_spanned guards") {
    CHECK_THROWS_AS(enumerate_spanned(6), std::invalid_argument);  // needs expensive mode
    CHECK_THROWS_AS(enumerate_spanned(0), std::invalid_argument);
}

TEST_CASE("builtin_representatives") {
    auto big = builtin_representatives(6, 17);
    REQUIRE(big.size() == 6);
    CHECK(vertices_on(big[5]).count() == 20);
    auto all = builtin_representatives(6, 13);
    REQUIRE(all.size() == 14);
    for (const auto& h : all) {
        CHECK(affine_dimension(vertices_on(h)) == 5);
        CHECK(vertices_on(h).count() >= 13);
        CHECK(canonicalize(h.general()) == h);
    }
    CHECK_THROWS_AS(builtin_representatives(5, 13), std::invalid_argument);
    CHECK_THROWS_AS(builtin_representatives(6, 10), std::invalid_argument);
}

TEST_CASE("hyperplane_type") {
    CHECK(hyperplane_type({5, {1, 1, 2, 2, 3}, 4}).alpha == std::vector<int>{2, 2, 1});
    CHECK(hyperplane_type({4, {1}, 0}).alpha == std::vector<int>{1});
    CHECK(hyperplane_type({6, {1, 1, 1, 1, 1, 1}, 3}).alpha == std::vector<int>{6});
    // a skipped value leaves a zero multiplicity
    CHECK(hyperplane_type({5, {1, 1, 3}, 2}).alpha == std::vector<int>{2, 0, 1});
}

TEST_CASE("stabilizer_elements: explicit lists match the order formula") {
    SpannedHyperplane h44{4, {1, 1, 1, 1}, 2};
    auto elems = stabilizer_elements(h44);
    CHECK(elems.size() == 48);
    CHECK(stabilizer_description(h44).order() == 48);

    SpannedHyperplane face{6, {1}, 0};
    CHECK(stabilizer_description(face).order() == 3840);
    CHECK(stabilizer_elements(face).size() == 3840);

    for (int n : {4, 5}) {
        for (const auto& h : enumerate_spanned(n)) {
            auto list = stabilizer_elements(h);
            REQUIRE(static_cast<long long>(list.size()) == stabilizer_description(h).order());
            bool has_identity = false;
            VertexSet v = vertices_on(h);
            for (const auto& w : list) {
                has_identity = has_identity || w == identity_element(n);
                REQUIRE(act_on_set(w, v) == v);
                REQUIRE(canonicalize(transform_hyperplane(w, h.general())) == h);
            }
            CHECK(has_identity);
        }
    }
}

TEST_CASE("atlas round trip and fixture") {
    auto reps = builtin_representatives(6, 13);
    std::string text = atlas_to_text(reps);
    CHECK(atlas_from_text(text) == reps);

    std::ifstream in(std::string(CUBECENSUS_SOURCE_DIR) + "/data/q6_atlas.txt");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(atlas_from_text(ss.str()) == reps);
    CHECK(ss.str() == text);

    CHECK_THROWS_AS(atlas_from_text("6 1,1 1 2 1 32 9999\n"), std::invalid_argument);
    CHECK_THROWS_AS(atlas_from_text("6 2,2 2 garbled\n"), std::invalid_argument);
}
