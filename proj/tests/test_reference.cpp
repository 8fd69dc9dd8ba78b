#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gmatch/generate.hpp"
#include "gmatch/reference.hpp"
#include "support/naive_oracle.hpp"

using namespace gmatch;

namespace {

WeightedGraph p4_232() { return new_graph(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 2}}); }

} // namespace

TEST_CASE("candidate picks the heaviest live neighbor") {
    auto g = new_graph(4, {{0, 1, 5}, {0, 2, 3}, {0, 3, 5}});
    CHECK(candidate(g, 0, {1, 2}) == NodeId{1});
    CHECK(candidate(g, 0, {2}) == NodeId{2});
    CHECK(candidate(g, 0, {}) == std::nullopt);
    // (0,1) and (0,3) tie on weight; (0,1) is first in the edge order.
    CHECK(candidate(g, 0, {1, 3}) == NodeId{1});
    CHECK(candidate(g, 0, {2, 3}) == NodeId{3});
    CHECK_THROWS_AS(candidate(g, 1, {2}), std::invalid_argument);
}

TEST_CASE("fixtures checked against the enumeration oracle") {
    auto p4 = p4_232();
    CHECK(testing::count_matchings(p4) == 5);
    CHECK(testing::naive_max_weight(p4) == Weight(4));

    auto triangle = new_graph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    CHECK(testing::naive_max_weight(triangle) == Weight(3));
}

TEST_CASE("sequential_greedy examples") {
    auto single = sequential_greedy(new_graph(2, {{0, 1, 7}}));
    CHECK(single == make_matching({{0, 1, 7}}));
    CHECK(single.total_weight == Weight(7));

    auto p4 = sequential_greedy(p4_232());
    CHECK(p4 == make_matching({{1, 2, 3}}));
    CHECK(matching_weight(p4) == Weight(3));
    CHECK(p4.total_weight / optimal_matching(p4_232()).total_weight == Weight(3, 4));

    auto triangle = new_graph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    CHECK(sequential_greedy(triangle) == make_matching({{0, 2, 3}}));
    CHECK(optimal_matching(triangle).total_weight == Weight(3));

    CHECK(sequential_greedy(new_graph(3, {})).empty());
}

TEST_CASE("optimal_matching examples") {
    auto p4 = optimal_matching(p4_232());
    CHECK(p4 == make_matching({{0, 1, 2}, {2, 3, 2}}));
    CHECK(p4.total_weight == Weight(4));
    CHECK(optimal_matching(new_graph(5, {})).total_weight == Weight(0));
    CHECK(optimal_matching(WeightedGraph{}).empty());
    CHECK(optimal_matching(new_graph(2, {{0, 1, 7}})).total_weight == Weight(7));
}

TEST_CASE("optimal_matching refuses graphs above the limit") {
    auto big = generate({GraphKind::path, 21}, 1, WeightPolicy::distinct());
    CHECK_THROWS_AS(optimal_matching(big), OracleLimitError);
    CHECK_THROWS_AS(optimal_matching(p4_232(), 3), OracleLimitError);
    CHECK(optimal_matching(big, 21).size() == 10);
    auto huge = generate({GraphKind::path, 30}, 1, WeightPolicy::distinct());
    CHECK_THROWS_AS(optimal_matching(huge, 100), OracleLimitError);
}

TEST_CASE("is_valid_matching and matching_weight") {
    auto p4 = p4_232();
    CHECK(is_valid_matching(p4, Matching{}));
    CHECK_FALSE(is_valid_matching(p4, make_matching({{0, 1, 2}, {1, 2, 3}})));
    CHECK(is_valid_matching(p4, make_matching({{0, 1, 2}, {2, 3, 2}})));
    CHECK_FALSE(is_valid_matching(p4, make_matching({{0, 2, 2}})));
    CHECK_FALSE(is_valid_matching(p4, make_matching({{0, 1, 9}})));
    CHECK_FALSE(is_valid_matching(p4, make_matching({{0, 7, 1}})));

    CHECK(matching_weight(Matching{}) == Weight(0));
    CHECK(matching_weight(make_matching({{0, 1, 2}, {2, 3, 3}})) == Weight(5));
}

TEST_CASE("properties over random graphs") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 400; ++i) {
        auto g = testing::random_graph(rng, 10);
        auto greedy = sequential_greedy(g);
        auto best = optimal_matching(g);
        CHECK(is_valid_matching(g, greedy));
        CHECK(is_valid_matching(g, best));
        CHECK(best.total_weight == testing::naive_max_weight(g));
        CHECK(Weight(2) * greedy.total_weight >= best.total_weight);
        CHECK(greedy.total_weight <= best.total_weight);
        // The edge order is strict even with repeated weights, so the choice
        // of locally heaviest edge never changes the result.
        CHECK(sequential_greedy(g, GreedyRule::last_locally_heaviest) == greedy);
    }
}

TEST_CASE("greedy matching is maximal") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        auto g = testing::random_graph(rng, 14);
        auto m = sequential_greedy(g);
        std::vector<bool> covered(g.vertex_count(), false);
        for (const auto& e : m.edges) covered[e.u] = covered[e.v] = true;
        for (const auto& e : g.edges()) CHECK((covered[e.u] || covered[e.v]));
    }
}
