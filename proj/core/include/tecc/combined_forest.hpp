#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tecc/composite_payload.hpp"
#include "tecc/label_store.hpp"
#include "tecc/levels.hpp"
#include "tecc/top_tree.hpp"

namespace tecc {

// Calls per operation of the forest interface.
struct ForestCounters {
    std::uint64_t link = 0, cut = 0, connected = 0;
    std::uint64_t cover = 0, uncover = 0, cover_level = 0;
    std::uint64_t add_label = 0, remove_label = 0;
    std::uint64_t find_first_label = 0, find_size = 0;
};

struct CoverQuery {
    Level level = 0;
    std::uint32_t edge = kNilEdge;  // witness edge key, kNilEdge if none
};

// One part of a cluster's part tree after pending lazy values are applied.
struct CleanPart {
    std::vector<std::int64_t> part, diag;
    std::uint64_t pinc = 0, dinc = 0;
};

// Dynamic forest with cover levels, per-level sizes and user labels on one
// top tree. Every vertex carries a label cluster from construction on.
class CombinedForest {
public:
    using Tree = TopTree<CompositePolicy>;

    explicit CombinedForest(std::uint32_t n);
    CombinedForest(const CombinedForest&) = delete;
    CombinedForest& operator=(const CombinedForest&) = delete;

    std::uint32_t size() const { return n_; }
    Level lmax() const { return policy_.levels().lmax(); }

    // Tree edge (u,v) with user key; its cover level starts at -1.
    EdgeHandle link(std::uint32_t u, std::uint32_t v, std::uint32_t key);
    void cut(EdgeHandle e);
    bool connected(std::uint32_t u, std::uint32_t v);

    void cover(std::uint32_t v, std::uint32_t w, Level i);
    void uncover(std::uint32_t v, std::uint32_t w, Level i);
    // Minimum cover level of the tree of v, with a witness edge.
    CoverQuery cover_level(std::uint32_t v);
    // Minimum cover level on the path v..w; nullopt if not connected.
    std::optional<CoverQuery> cover_level(std::uint32_t v, std::uint32_t w);

    LabelHandle add_label(std::uint32_t v, Level i, std::uint64_t payload);
    void remove_label(LabelHandle h);
    const LabelStore& labels() const { return labels_; }

    // A level-i label at u with CoverLevel(u, meet(u,v,w)) >= i and minimal
    // distance from v to that meet; nullopt if none. Throws if v, w are
    // disconnected.
    std::optional<LabelHandle> find_first_label(std::uint32_t v, std::uint32_t w, Level i);
    // Number of u with CoverLevel(u, meet(u,v,w)) >= i, for -1 <= i <= lmax.
    std::uint32_t find_size(std::uint32_t v, std::uint32_t w, Level i);

    const ForestCounters& counters() const { return counters_; }
    void reset_counters() { counters_ = {}; }
    Tree& tree() { return tree_; }
    const Tree& tree() const { return tree_; }
    CompositePolicy& policy() { return policy_; }
    const CompositePolicy& policy() const { return policy_; }

    // Hash of every cluster's payload with all pending lazy values pushed
    // down virtually. Witness edges are excluded.
    std::uint64_t payload_digest() const;

    // Visits every cluster with its effective cover data: the stored values
    // after virtually pushing every ancestor's pending lazy values.
    void visit_effective(const std::function<void(const CompositeCluster&, const CompositeData&)>& fn) const;
    // Nonzero parts of the tree at boundary slot k under effective data eff.
    std::map<Level, CleanPart> clean_parts(const CompositeCluster& c, int slot, const CompositeData& eff) const;

private:
    CompositeCluster* expose_pair(std::uint32_t v, std::uint32_t w);

    std::uint32_t n_;
    LabelStore labels_;
    CompositePolicy policy_;
    Tree tree_;
    ForestCounters counters_;
};

}  // namespace tecc
