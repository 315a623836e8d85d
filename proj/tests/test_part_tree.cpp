#include <gtest/gtest.h>

#include <map>
#include <random>

#include "tecc/part_tree.hpp"

namespace {

using tecc::PartArena;
using tecc::PartSum;
using tecc::PartTree;

struct Entry {
    std::vector<std::int32_t> part, diag;
    std::uint64_t pinc = 0, dinc = 0;
};
using Model = std::map<int, Entry>;

PartTree build(PartArena& ar, const Model& m) {
    PartTree t;
    for (const auto& [k, e] : m)
        t = ar.concat(std::move(t), ar.single(k, e.part.data(), e.diag.data(), e.pinc, e.dinc));
    return t;
}

Model dump(const PartArena& ar, const PartTree& t) {
    Model m;
    const int w = ar.width();
    ar.for_each(t, [&](const tecc::PartNode& n) {
        Entry e;
        e.part.assign(n.data(), n.data() + w);
        e.diag.assign(n.data() + w, n.data() + 2 * w);
        e.pinc = n.pinc;
        e.dinc = n.dinc;
        m[n.key] = e;
    });
    return m;
}

bool same(const Model& a, const Model& b) {
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second.part != ib->second.part || ia->second.diag != ib->second.diag) return false;
        if (ia->second.pinc != ib->second.pinc || ia->second.dinc != ib->second.dinc) return false;
    }
    return true;
}

Model random_model(std::mt19937& rng, int width, int maxkey) {
    Model m;
    std::uniform_int_distribution<int> val(0, 9);
    for (int k = -1; k <= maxkey; ++k) {
        if (rng() % 2) continue;
        Entry e;
        for (int i = 0; i < width; ++i) {
            e.part.push_back(val(rng));
            e.diag.push_back(val(rng));
        }
        e.pinc = rng() & 0xff;
        e.dinc = rng() & 0xff;
        m[k] = e;
    }
    return m;
}

}  // namespace

TEST(PartTree, BuildAndDump) {
    PartArena ar(4);
    std::mt19937 rng(1);
    for (int it = 0; it < 200; ++it) {
        Model m = random_model(rng, 4, 40);
        PartTree t = build(ar, m);
        EXPECT_TRUE(ar.validate(t));
        EXPECT_TRUE(same(m, dump(ar, t)));
        EXPECT_LE(ar.height(t), 8);
    }
    EXPECT_EQ(ar.live_nodes(), 0u);
}

TEST(PartTree, SplitJoinPersistence) {
    PartArena ar(3);
    std::mt19937 rng(7);
    for (int it = 0; it < 300; ++it) {
        Model m = random_model(rng, 3, 50);
        PartTree t = build(ar, m);
        PartTree keep = t;
        const int key = static_cast<int>(rng() % 54) - 2;
        auto [lo, hi] = ar.split(t, key);
        Model ml, mh;
        for (const auto& [k, e] : m) (k < key ? ml : mh)[k] = e;
        EXPECT_TRUE(ar.validate(lo));
        EXPECT_TRUE(ar.validate(hi));
        EXPECT_TRUE(same(ml, dump(ar, lo)));
        EXPECT_TRUE(same(mh, dump(ar, hi)));
        // The original version is untouched.
        EXPECT_TRUE(same(m, dump(ar, keep)));
        EXPECT_TRUE(ar.validate(keep));
        PartTree back = ar.concat(lo, hi);
        EXPECT_TRUE(same(m, dump(ar, back)));
        EXPECT_TRUE(ar.validate(back));
    }
    EXPECT_EQ(ar.live_nodes(), 0u);
}

TEST(PartTree, JoinWithMiddle) {
    PartArena ar(2);
    std::int32_t p[2] = {3, 4}, d[2] = {1, 0};
    PartTree a = ar.single(0, p, d, 1, 0);
    PartTree b = ar.single(5, p, d, 2, 0);
    PartTree m = ar.single(2, p, d, 4, 8);
    PartTree t = ar.join(a, m, b);
    EXPECT_EQ(ar.count(t), 3u);
    EXPECT_TRUE(ar.validate(t));
    EXPECT_THROW(ar.concat(t, a), std::invalid_argument);
    PartSum s(2);
    ar.add_range(t, 1, 5, s);
    EXPECT_EQ(s.part[0], 6);
    EXPECT_EQ(s.diag[0], 2);
    EXPECT_EQ(s.pinc, 6u);
    EXPECT_EQ(s.dinc, 8u);
}

TEST(PartTree, RangeSums) {
    PartArena ar(5);
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
        Model m = random_model(rng, 5, 30);
        PartTree t = build(ar, m);
        for (int q = 0; q < 20; ++q) {
            int lo = static_cast<int>(rng() % 34) - 2, hi = static_cast<int>(rng() % 34) - 2;
            PartSum s(5);
            ar.add_range(t, lo, hi, s);
            PartSum want(5);
            for (const auto& [k, e] : m) {
                if (k < lo || k > hi) continue;
                for (int i = 0; i < 5; ++i) {
                    want.part[i] += e.part[i];
                    want.diag[i] += e.diag[i];
                }
                want.pinc |= e.pinc;
                want.dinc |= e.dinc;
            }
            EXPECT_EQ(s.part, want.part);
            EXPECT_EQ(s.diag, want.diag);
            EXPECT_EQ(s.pinc, want.pinc);
            EXPECT_EQ(s.dinc, want.dinc);
        }
    }
}
