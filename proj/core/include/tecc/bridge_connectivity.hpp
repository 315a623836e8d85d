#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tecc/combined_forest.hpp"

namespace tecc {

// Graph edges are named by insertion index; ids are never reused.
using EdgeId = std::uint32_t;

struct GraphEdge {
    std::uint32_t u = 0, v = 0;
    Level level = 0;
    bool tree = false;
    bool alive = false;
    LabelHandle label1, label2;  // at u and v, nontree edges only
    EdgeHandle handle;           // tree edges only
    std::uint32_t slot = 0;      // position in the endpoint-pair bucket
};

struct BridgeCounters {
    std::uint64_t inserts = 0, deletes = 0, swaps = 0;
    std::uint64_t recover_phases = 0, promotions = 0;
};

// Receives the forest calls that change cover levels, in order.
class ForestTrace {
public:
    virtual ~ForestTrace() = default;
    virtual void on_link(std::uint32_t u, std::uint32_t v, EdgeId e) = 0;
    virtual void on_cut(EdgeId e) = 0;
    virtual void on_cover(std::uint32_t v, std::uint32_t w, Level i) = 0;
    virtual void on_uncover(std::uint32_t v, std::uint32_t w, Level i) = 0;
};

// Fully dynamic 2-edge connectivity on a fixed vertex set. Tree edges sit at
// level lmax; every nontree edge carries a label at each endpoint on its level.
class BridgeConnectivity {
public:
    explicit BridgeConnectivity(std::uint32_t n);

    std::uint32_t vertex_count() const { return forest_.size(); }
    Level lmax() const { return forest_.lmax(); }

    // Throws std::invalid_argument on a self-loop, std::out_of_range on bad vertices.
    EdgeId insert(std::uint32_t u, std::uint32_t v);
    // Throws std::invalid_argument on a dead or unknown id.
    void erase(EdgeId e);
    // Some live edge between u and v.
    std::optional<EdgeId> find_edge(std::uint32_t u, std::uint32_t v) const;

    bool connected(std::uint32_t u, std::uint32_t v);
    bool two_edge_connected(std::uint32_t u, std::uint32_t v);
    // Some bridge in the component of v.
    std::optional<EdgeId> find_bridge(std::uint32_t v);
    // A bridge separating v and w. Throws std::invalid_argument if disconnected.
    std::optional<EdgeId> find_bridge(std::uint32_t v, std::uint32_t w);
    std::uint32_t size(std::uint32_t v);
    std::uint32_t two_size(std::uint32_t v);

    bool alive(EdgeId e) const { return e < edges_.size() && edges_[e].alive; }
    const GraphEdge& edge(EdgeId e) const { return edges_.at(e); }
    std::size_t edge_capacity() const { return edges_.size(); }
    std::size_t live_edges() const { return live_; }
    std::vector<EdgeId> live_ids() const;

    CombinedForest& forest() { return forest_; }
    const CombinedForest& forest() const { return forest_; }
    const BridgeCounters& counters() const { return counters_; }
    void reset_counters() {
        counters_ = {};
        forest_.reset_counters();
    }
    void set_trace(ForestTrace* t) { trace_ = t; }

private:
    void check_vertex(std::uint32_t v) const;
    void link(EdgeId e);
    void cut(EdgeId e);
    void cover(std::uint32_t v, std::uint32_t w, Level i);
    void uncover(std::uint32_t v, std::uint32_t w, Level i);
    void add_labels(EdgeId e, Level i);
    void remove_labels(EdgeId e);

    void swap(EdgeId e);
    std::optional<EdgeId> find_replacement(std::uint32_t v, std::uint32_t w, Level i);
    void recover(std::uint32_t v, std::uint32_t w, Level i);
    std::optional<EdgeId> recover_phase(std::uint32_t v, std::uint32_t w, Level i, std::uint32_t s);

    static std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) {
        if (u > v) std::swap(u, v);
        return (std::uint64_t{u} << 32) | v;
    }

    CombinedForest forest_;
    std::vector<GraphEdge> edges_;
    std::unordered_map<std::uint64_t, std::vector<EdgeId>> by_pair_;
    std::size_t live_ = 0;
    BridgeCounters counters_;
    ForestTrace* trace_ = nullptr;
};

}  // namespace tecc
