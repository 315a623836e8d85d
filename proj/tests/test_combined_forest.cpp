#include <gtest/gtest.h>

#include <map>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "forest_checks.hpp"
#include "tecc/combined_forest.hpp"
#include "tecc/oracle.hpp"

namespace {

using tecc::CombinedForest;
using tecc::EdgeHandle;
using tecc::LabelHandle;
using tecc::Level;
using tecc::oracle::CoverSimulator;
using tecc::testing_support::cluster_errors;
using tecc::testing_support::label_masks;

struct Harness {
    std::uint32_t n;
    CombinedForest f;
    CoverSimulator sim;
    std::map<std::uint32_t, EdgeHandle> edges;
    std::vector<LabelHandle> labels;
    std::uint32_t next_key = 0;
    explicit Harness(std::uint32_t n_) : n(n_), f(n_), sim(n_, f.lmax()) {}

    ::testing::AssertionResult check_queries(std::mt19937& rng) {
        const auto masks = label_masks(f);
        for (std::uint32_t v = 0; v < n; ++v) {
            auto cl = f.cover_level(v);
            if (cl.level != sim.cover_level(v)) return ::testing::AssertionFailure() << "cover_level(" << v << ")";
            if (cl.edge != tecc::kNilEdge && sim.level(cl.edge) != cl.level)
                return ::testing::AssertionFailure() << "min_covered_edge(" << v << ")";
            for (std::uint32_t w = 0; w < n; ++w) {
                const bool conn = sim.connected(v, w);
                if (f.connected(v, w) != conn) return ::testing::AssertionFailure() << "connected";
                auto q = f.cover_level(v, w);
                if (q.has_value() != conn) return ::testing::AssertionFailure() << "cover_level pair conn";
                if (!conn) continue;
                if (q->level != *sim.cover_level(v, w))
                    return ::testing::AssertionFailure() << "cover_level(" << v << "," << w << ") = " << q->level
                                                         << " want " << *sim.cover_level(v, w);
                for (Level i = -1; i <= f.lmax(); ++i) {
                    auto got = f.find_size(v, w, i);
                    auto want = sim.find_size(v, w, i);
                    if (got != want)
                        return ::testing::AssertionFailure()
                               << "find_size(" << v << "," << w << "," << i << ") = " << got << " want " << want;
                }
                Level i = static_cast<Level>(rng() % static_cast<unsigned>(f.lmax() + 1));
                auto before = f.payload_digest();
                auto got = f.find_first_label(v, w, i);
                if (f.payload_digest() != before) return ::testing::AssertionFailure() << "find_first_label not restorative";
                auto want = sim.first_label_distance(v, w, i, masks);
                if (got.has_value() != want.has_value())
                    return ::testing::AssertionFailure() << "find_first_label(" << v << "," << w << "," << i
                                                         << ") existence " << got.has_value();
                if (got) {
                    const std::uint32_t u = f.labels().vertex(*got);
                    if (f.labels().level(*got) != i) return ::testing::AssertionFailure() << "label level";
                    if (!sim.label_qualifies(u, v, w, i)) return ::testing::AssertionFailure() << "label does not qualify";
                    if (sim.dist(v, sim.meet(u, v, w)) != *want)
                        return ::testing::AssertionFailure() << "find_first_label(" << v << "," << w << "," << i
                                                             << ") not nearest";
                }
            }
        }
        return ::testing::AssertionSuccess();
    }

    bool trace = false;
    void step(std::mt19937& rng) {
        const std::uint32_t u = rng() % n, v = rng() % n;
        const int kind = static_cast<int>(rng() % 12);
        const Level lv = static_cast<Level>(rng() % static_cast<unsigned>(f.lmax()));
        if (trace) printf("op kind=%d u=%u v=%u lv=%d\n", kind, u, v, lv);
        if (kind < 3) {
            if (u == v || sim.connected(u, v)) return;
            edges[next_key] = f.link(u, v, next_key);
            sim.link(u, v, next_key);
            ++next_key;
        } else if (kind < 4) {
            if (edges.empty()) return;
            auto it = edges.begin();
            std::advance(it, static_cast<long>(rng() % edges.size()));
            f.cut(it->second);
            sim.cut(it->first);
            edges.erase(it);
        } else if (kind < 7) {
            if (u == v || !sim.connected(u, v)) return;
            f.cover(u, v, lv);
            sim.cover(u, v, lv);
        } else if (kind < 9) {
            if (u == v || !sim.connected(u, v)) return;
            f.uncover(u, v, lv);
            sim.uncover(u, v, lv);
        } else if (kind < 11) {
            labels.push_back(f.add_label(u, lv, labels.size()));
        } else {
            if (labels.empty()) return;
            const std::size_t k = rng() % labels.size();
            f.remove_label(labels[k]);
            labels.erase(labels.begin() + static_cast<long>(k));
        }
    }
};

void run(std::uint32_t seed, std::uint32_t n, int ops, bool clusters) {
    std::mt19937 rng(seed);
    Harness h(n);
    h.trace = getenv("TECC_TRACE") != nullptr;
    for (int op = 0; op < ops; ++op) {
        h.step(rng);
        if (clusters) ASSERT_EQ(cluster_errors(h.f, h.sim), "") << "seed " << seed << " op " << op;
        std::mt19937 qrng(seed * 7919u + static_cast<std::uint32_t>(op));
        ASSERT_TRUE(h.check_queries(qrng)) << "seed " << seed << " op " << op;
    }
}

}  // namespace

TEST(CombinedForest, IsolatedVertex) {
    CombinedForest f(4);
    EXPECT_EQ(f.cover_level(2).level, f.lmax());
    EXPECT_EQ(f.cover_level(2).edge, tecc::kNilEdge);
    EXPECT_EQ(f.find_size(2, 2, -1), 1u);
    EXPECT_EQ(f.find_size(2, 2, 0), 1u);
    EXPECT_FALSE(f.find_first_label(2, 2, 0).has_value());
    EXPECT_THROW(f.find_size(0, 1, 0), std::invalid_argument);
}

TEST(CombinedForest, CoverExamples) {
    CombinedForest f(8);
    f.link(0, 1, 0);
    f.link(1, 2, 1);
    EXPECT_EQ(f.cover_level(0).level, -1);
    f.cover(0, 1, 2);
    f.cover(0, 2, 1);
    EXPECT_EQ(f.cover_level(0, 2)->level, 1);
    EXPECT_EQ(f.cover_level(0, 1)->level, 2);
    EXPECT_EQ(f.cover_level(1, 2)->edge, 1u);
    f.uncover(0, 2, 1);
    EXPECT_EQ(f.cover_level(0, 1)->level, 2);
    EXPECT_EQ(f.cover_level(1, 2)->level, -1);
    f.uncover(0, 1, 2);
    EXPECT_EQ(f.cover_level(0, 1)->level, -1);
    EXPECT_THROW(f.uncover(0, 1, f.lmax()), std::out_of_range);
    EXPECT_EQ(f.cover_level(3, 3)->level, f.lmax());
}

TEST(CombinedForest, FindSizeExamples) {
    // Path a-b-c. Without covers only a and c count at level 0 for (a,c):
    // their meet is themselves. With cover(a,c,0) every vertex counts.
    CombinedForest f(3);
    f.link(0, 1, 0);
    f.link(1, 2, 1);
    EXPECT_EQ(f.find_size(0, 0, -1), 3u);
    EXPECT_EQ(f.find_size(0, 2, 0), 3u);  // b lies on the path: its meet is b itself
    EXPECT_EQ(f.find_size(0, 0, 0), 1u);
    f.cover(0, 2, 0);
    EXPECT_EQ(f.find_size(0, 0, 0), 3u);
}

TEST(CombinedForest, LabelsNearest) {
    // Path 0-1-2-3-4 with hanging 5 at 1 and 6 at 3; query from 0 to 4.
    CombinedForest f(7);
    f.link(0, 1, 0);
    f.link(1, 2, 1);
    f.link(2, 3, 2);
    f.link(3, 4, 3);
    f.link(1, 5, 4);
    f.link(3, 6, 5);
    f.cover(5, 1, 1);
    f.cover(6, 3, 1);
    auto far = f.add_label(6, 1, 60);
    auto near = f.add_label(5, 1, 50);
    auto got = f.find_first_label(0, 4, 1);
    ASSERT_TRUE(got);
    EXPECT_EQ(*got, near);
    EXPECT_EQ(f.labels().payload(*got), 50u);
    got = f.find_first_label(4, 0, 1);
    ASSERT_TRUE(got);
    EXPECT_EQ(*got, far);
    EXPECT_FALSE(f.find_first_label(0, 4, 0).has_value());
    f.uncover(5, 1, 1);
    got = f.find_first_label(0, 4, 1);
    ASSERT_TRUE(got);
    EXPECT_EQ(*got, far);
    f.remove_label(far);
    EXPECT_FALSE(f.find_first_label(0, 4, 1).has_value());
    EXPECT_THROW(f.remove_label(far), std::invalid_argument);
}

TEST(CombinedForest, RandomSlowSmall) {
    for (std::uint32_t s = 0; s < 60; ++s) {
        run(s, 9, 120, true);
        if (::testing::Test::HasFatalFailure()) return;
    }
}

TEST(CombinedForest, RandomSlowMedium) {
    for (std::uint32_t s = 0; s < 4; ++s) {
        run(500 + s, 20, 250, true);
        if (::testing::Test::HasFatalFailure()) return;
    }
}
