#include <gtest/gtest.h>

#include <random>

#include "tecc/matching.hpp"

using namespace tecc;
using oracle::Snapshot;

TEST(Enumerator, SmallCounts) {
    EXPECT_EQ(enumerate_perfect_matchings({2, {{0, 1}}}).count, 1u);
    EXPECT_EQ(enumerate_perfect_matchings({4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}).count, 2u);
    EXPECT_EQ(enumerate_perfect_matchings({4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}).count, 3u);
    EXPECT_EQ(enumerate_perfect_matchings({3, {{0, 1}, {1, 2}}}).count, 0u);
    EXPECT_EQ(enumerate_perfect_matchings({2, {{0, 1}, {0, 1}}}).count, 2u);
}

TEST(Matching, K2) {
    const auto v = unique_perfect_matching({2, {{0, 1}}});
    EXPECT_TRUE(v.unique);
    EXPECT_EQ(v.matching, (std::vector<std::uint32_t>{0}));
}

TEST(Matching, P4OuterEdges) {
    const auto v = unique_perfect_matching({4, {{0, 1}, {1, 2}, {2, 3}}});
    EXPECT_TRUE(v.unique);
    EXPECT_EQ(v.matching, (std::vector<std::uint32_t>{0, 2}));
}

TEST(Matching, C4NotUnique) {
    const auto v = unique_perfect_matching({4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}});
    EXPECT_FALSE(v.unique);
    EXPECT_EQ(v.detail, MatchingDetail::BridgelessPart);
}

TEST(Matching, K4NotUnique) {
    EXPECT_FALSE(unique_perfect_matching({4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}).unique);
}

TEST(Matching, BarbellOddSides) {
    // Two triangles joined by a bridge: the bridge is forced.
    const Snapshot g{6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}};
    const auto v = unique_perfect_matching(g);
    EXPECT_EQ(enumerate_perfect_matchings(g).count, 1u);
    EXPECT_TRUE(v.unique);
    EXPECT_EQ(v.matching, (std::vector<std::uint32_t>{0, 3, 5}));
}

TEST(Matching, OddAndDoubled) {
    EXPECT_EQ(unique_perfect_matching({3, {{0, 1}, {1, 2}}}).detail, MatchingDetail::OddComponent);
    EXPECT_FALSE(unique_perfect_matching({2, {{0, 1}, {1, 0}}}).unique);
    EXPECT_FALSE(unique_perfect_matching({1, {}}).unique);
}

TEST(Matching, AgreesWithEnumerator) {
    std::mt19937 rng(2024);
    for (int t = 0; t < 400; ++t) {
        Snapshot g{1 + static_cast<std::uint32_t>(rng() % 10), {}};
        const std::uint32_t m = g.n < 2 ? 0 : rng() % (2 * g.n + 1);
        for (std::uint32_t k = 0; k < m; ++k) {
            std::uint32_t u = rng() % g.n, v = rng() % (g.n - 1);
            if (v >= u) ++v;
            g.edges.emplace_back(u, v);
        }
        const auto want = enumerate_perfect_matchings(g);
        const auto got = unique_perfect_matching(g);
        ASSERT_EQ(got.unique, want.count == 1) << "trial " << t;
        if (got.unique) ASSERT_EQ(got.matching, want.first) << "trial " << t;
    }
}
