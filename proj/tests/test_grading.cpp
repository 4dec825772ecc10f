#include <doctest.h>

#include "twistkit/grading.hpp"

using namespace twistkit;

TEST_SUITE("grading") {

TEST_CASE("mixed groups reduce torsion coordinates") {
    GradingGroup G(1, {2, 3});
    CHECK(G.rank() == 3);
    CHECK(G.reduce({5, -1, 7}) == GroupElement{5, 1, 1});
    CHECK(G.add({1, 1, 2}, {2, 1, 2}) == GroupElement{3, 0, 1});
    CHECK(G.neg({2, 1, 1}) == GroupElement{-2, 1, 2});
    CHECK(G.is_zero(G.sub({1, 1, 2}, {1, 1, 2})));
    CHECK(!G.is_finite());
    CHECK_THROWS_AS(G.order(), std::domain_error);
    CHECK_THROWS_AS(G.enumerate(), std::domain_error);
    CHECK_THROWS_AS(G.add({0, 0}, {0, 0, 0}), std::domain_error);
}

TEST_CASE("enumeration runs the last coordinate fastest") {
    GradingGroup V(0, {2, 2});
    CHECK(V.order() == 4);
    auto all = V.enumerate();
    REQUIRE(all.size() == 4);
    CHECK(all[0] == GroupElement{0, 0});
    CHECK(all[1] == GroupElement{0, 1});
    CHECK(all[2] == GroupElement{1, 0});
    CHECK(all[3] == GroupElement{1, 1});
    for (size_t i = 0; i < all.size(); ++i) CHECK(V.element_index(all[i]) == i);
    GradingGroup M(0, {2, 3});
    auto ms = M.enumerate();
    REQUIRE(ms.size() == 6);
    CHECK(ms[1] == GroupElement{0, 1});
    CHECK(ms[3] == GroupElement{1, 0});
    CHECK(M.element_index({1, 2}) == 5);
    CHECK(M.element_index({3, -1}) == M.element_index({1, 2}));
}

TEST_CASE("pairing is a symmetric bicharacter") {
    GradingGroup V(0, {2, 2});
    // (-1)^(dot product) at cyclotomic order 4
    CHECK(V.pairing({0, 1}, {0, 1}, 4) == Scalar::integer(-1));
    CHECK(V.pairing({0, 1}, {1, 0}, 4).is_one());
    CHECK(V.pairing({1, 1}, {1, 1}, 4).is_one());
    for (const auto& g : V.enumerate())
        for (const auto& h : V.enumerate()) {
            CHECK(V.pairing(g, h, 4) == V.pairing(h, g, 4));
            for (const auto& k : V.enumerate())
                CHECK(V.pairing(V.add(g, k), h, 4) ==
                      V.pairing(g, h, 4) * V.pairing(k, h, 4));
        }

    GradingGroup C4(0, {4});
    CHECK(C4.pairing({1}, {1}, 4) == Scalar::zeta(4));
    CHECK(C4.pairing({1}, {2}, 4) == Scalar::integer(-1));
    CHECK(C4.pairing({2}, {3}, 8) == Scalar::integer(-1));
    CHECK_THROWS_AS(GradingGroup(0, {3}).pairing({1}, {1}, 4), std::domain_error);
}

TEST_CASE("json serialization round trips") {
    GradingGroup G(2, {2, 4});
    GradingGroup back = GradingGroup::from_json(G.to_json());
    CHECK(G == back);
    GradingGroup parsed =
        GradingGroup::from_json(nlohmann::json::parse(R"({"free_rank":0,"torsion":[2,2]})"));
    CHECK(parsed == GradingGroup(0, {2, 2}));
    CHECK(parsed.describe() == "Z/2 x Z/2");
    CHECK(GradingGroup(2, {3}).describe() == "Z x Z x Z/3");
    CHECK_THROWS_AS(GradingGroup::from_json(nlohmann::json::parse(R"({"torsion":[0]})")),
                    std::domain_error);
}

}
