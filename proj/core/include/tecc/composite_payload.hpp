#pragma once

#include <cstdint>
#include <functional>

#include "tecc/levels.hpp"
#include "tecc/part_tree.hpp"
#include "tecc/top_tree.hpp"

namespace tecc {

inline constexpr std::uint32_t kNilEdge = ~0u;

// Payload shared by the cover-level, size and label-incidence structures.
struct CompositeData {
    std::int8_t cover = -1;
    std::int8_t gcover = -1;
    std::int8_t cminus = -1;
    std::int8_t cplus = -1;
    std::uint32_t minpath = kNilEdge;
    std::uint32_t minglob = kNilEdge;
    // Part tree seen from bnd[k]. Point clusters use tree[0] only.
    PartTree tree[2];
};

using CompositeCluster = Cluster<CompositeData>;

enum class MergeShape { Compress, PointPoint, PathPoint, Rake };

// Shape of a composite from its children's boundary counts.
inline MergeShape merge_shape(const CompositeCluster& c, const CompositeCluster& a, const CompositeCluster& b) {
    if (a.is_path() && b.is_path()) return MergeShape::Compress;
    if (!a.is_path() && !b.is_path()) return MergeShape::PointPoint;
    return c.is_path() ? MergeShape::PathPoint : MergeShape::Rake;
}

// Sums of a cluster's part tree at one boundary after applying its own
// pending lazy cover values.
struct CleanSums {
    PartSum all;         // part/diag sums over every part, inc bits included
    std::vector<std::int32_t> ext;  // sum of diag over clean parts
    std::uint64_t ext_inc = 0;      // OR of diag incidence over clean parts
    explicit CleanSums(int w) : all(w), ext(w, 0) {}
};

class CompositePolicy {
public:
    using Data = CompositeData;
    using C = CompositeCluster;
    // Returns the label-level bit mask of a vertex.
    using LabelMaskFn = std::function<std::uint64_t(std::uint32_t)>;

    CompositePolicy(std::uint32_t n, LabelMaskFn label_mask);

    const LevelSpace& levels() const { return levels_; }
    PartArena& arena() { return arena_; }
    const PartArena& arena() const { return arena_; }
    int width() const { return levels_.width(); }

    void create_edge(C& c);
    void create_vertex(C& c);
    void destroy(C& c);
    void merge(C& c, const C& a, const C& b);
    void split(C& c, C& a, C& b);

    // Recomputes a vertex leaf from the current label mask.
    void refresh_vertex(C& c) { create_vertex(c); }

    // Part tree of x at boundary slot k with x's pending lazy values applied.
    PartTree clean_tree(const C& x, int slot);
    // Total part sums (size vector and incidence) of a cluster.
    void size_of(const C& x, PartSum& out) const;
    // Sums of the clean tree at boundary slot k: full sums plus the masked
    // ("reachable from the boundary") diag sums.
    void clean_sums(const C& x, int slot, CleanSums& out) const;
    // Bit i of the masked incidence seen from boundary slot k.
    std::uint64_t ext_inc(const C& x, int slot) const;
    std::uint64_t inc(const C& x) const { return x.data.tree[0].empty() ? 0 : x.data.tree[0].root()->pinc_sum; }

    // Applies split-time lazy propagation from parent data p onto child d
    // when d is a path child.
    static void push_lazy(const Data& p, Data& d);
    static bool path_child(const C& c, const C& x) { return c.is_path() && x.is_path(); }

    std::uint64_t merges() const { return merges_; }

private:
    PartTree along(const C& x, std::uint32_t xv, const C& y, std::uint32_t c);
    void mask_add(std::int32_t* dst, const std::int32_t* src, Level k) const;

    LevelSpace levels_;
    PartArena arena_;
    LabelMaskFn label_mask_;
    PartTree zero_;
    std::vector<std::int32_t> buf_a_, buf_b_, ones_;
    std::uint64_t merges_ = 0;
};

}  // namespace tecc
