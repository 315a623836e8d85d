#include <gtest/gtest.h>

#include <random>

#include "tecc/oracle.hpp"

using namespace tecc;
using namespace tecc::oracle;

namespace {

// Three triangles chained by bridges 2-3 and 5-6, a pendant 9 on 8, and a
// parallel copy of 6-7.
Snapshot chain() {
    return {10, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {5, 6}, {6, 7}, {7, 8}, {8, 6}, {8, 9}, {7, 6}}};
}

std::vector<std::size_t> true_indices(const std::vector<bool>& b) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k]) out.push_back(k);
    return out;
}

}  // namespace

TEST(Oracle, TreeIsAllBridges) {
    Snapshot g{5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}};
    EXPECT_EQ(true_indices(bridges(g)), (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Oracle, CycleHasNoBridges) {
    Snapshot g{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    EXPECT_TRUE(true_indices(bridges(g)).empty());
    const auto c = two_ecc(g);
    for (auto x : c) EXPECT_EQ(x, c[0]);
}

TEST(Oracle, BarbellConnectorOnly) {
    Snapshot g{6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}};
    EXPECT_EQ(true_indices(bridges(g)), (std::vector<std::size_t>{3}));
    EXPECT_EQ(true_indices(bridges_by_definition(g)), (std::vector<std::size_t>{3}));
}

TEST(Oracle, ChainFrozen) {
    const auto g = chain();
    EXPECT_EQ(true_indices(bridges(g)), (std::vector<std::size_t>{3, 7, 11}));
    const auto c = two_ecc(g);
    EXPECT_EQ(c[0], c[2]);
    EXPECT_EQ(c[3], c[5]);
    EXPECT_EQ(c[6], c[7]);
    EXPECT_NE(c[2], c[3]);
    EXPECT_NE(c[8], c[9]);
    EXPECT_TRUE(is_two_edge_connected(g, 6, 8));
    EXPECT_FALSE(is_two_edge_connected(g, 0, 9));
    const auto comp = components(g);
    for (auto x : comp) EXPECT_EQ(x, comp[0]);
}

TEST(Oracle, PathSingletons) {
    Snapshot g{4, {{0, 1}, {1, 2}, {2, 3}}};
    const auto c = two_ecc(g);
    for (std::uint32_t v = 1; v < 4; ++v) EXPECT_NE(c[v], c[0]);
}

TEST(Oracle, LowPointMatchesDefinition) {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
        Snapshot g{2 + static_cast<std::uint32_t>(rng() % 9), {}};
        const std::uint32_t m = rng() % 33;
        for (std::uint32_t k = 0; k < m; ++k) {
            std::uint32_t u = rng() % g.n, v = rng() % (g.n - 1);
            if (v >= u) ++v;
            g.edges.emplace_back(u, v);
        }
        ASSERT_EQ(bridges(g), bridges_by_definition(g)) << "trial " << t;
    }
}

TEST(Oracle, SizeInvariant) {
    // All edges at level 0: bound n, trivially true.
    EXPECT_TRUE(check_size_invariant(4, {{0, 1}, {1, 2}, {2, 0}}, {0, 0, 0}));
    // Two parallel edges at lmax = 2 form a class of 2 > floor(4/4).
    EXPECT_FALSE(check_size_invariant(4, {{0, 1}, {0, 1}}, {2, 2}));
    EXPECT_TRUE(check_size_invariant(4, {{0, 1}, {0, 1}}, {2, 1}));
    // Triangle at level 1 exceeds floor(4/2) = 2.
    EXPECT_FALSE(check_size_invariant(4, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, 1}));
}

TEST(CoverSimulator, ReplayAndQueries) {
    CoverSimulator s(5, 2);
    s.link(0, 1, 10);
    s.link(1, 2, 11);
    s.link(2, 3, 12);
    s.link(1, 4, 13);
    for (const auto& [k, l] : s.levels()) EXPECT_EQ(l, -1);
    s.cover(0, 3, 1);
    EXPECT_EQ(s.level(10), 1);
    EXPECT_EQ(s.level(12), 1);
    EXPECT_EQ(s.level(13), -1);
    EXPECT_EQ(s.cover_level(0), -1);
    EXPECT_EQ(s.cover_level(0, 3), 1);
    EXPECT_EQ(s.cover_level(2, 2), 2);
    s.uncover(1, 3, 0);  // levels above 0 are kept
    EXPECT_EQ(s.level(11), 1);
    s.uncover(1, 3, 1);
    EXPECT_EQ(s.level(11), -1);
    EXPECT_EQ(s.level(10), 1);
    EXPECT_EQ(s.meet(4, 0, 3), 1u);
    EXPECT_EQ(s.dist(0, 3), 3u);
    // Only 0 and 1 are joined at level 1; 0's own count is 2 with v = w = 0.
    EXPECT_EQ(s.find_size(0, 0, 1), 2u);
    EXPECT_EQ(s.find_size(0, 0, -1), 5u);
}

TEST(CoverSimulator, DefinedCoverLevels) {
    CoverSimulator s(4, 2);
    s.link(0, 1, 0);
    s.link(1, 2, 1);
    s.link(2, 3, 2);
    const auto c = s.defined_cover_levels({{0, 2, 0}, {1, 3, 1}});
    EXPECT_EQ(c.at(0), 0);
    EXPECT_EQ(c.at(1), 1);
    EXPECT_EQ(c.at(2), 1);
}
