#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "tecc/levels.hpp"

// Brute-force references. Everything here is recomputed from scratch and
// favors obviousness over speed.
namespace tecc::oracle {

struct Snapshot {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // multigraph, index = edge id
};

// Per-edge bridge flags (low-point DFS).
std::vector<bool> bridges(const Snapshot& g);
// Same by deleting each edge and testing connectivity.
std::vector<bool> bridges_by_definition(const Snapshot& g);
// Connected-component id per vertex.
std::vector<std::uint32_t> components(const Snapshot& g);
// 2-edge-connected class id per vertex (components after removing bridges).
std::vector<std::uint32_t> two_ecc(const Snapshot& g);
bool is_two_edge_connected(const Snapshot& g, std::uint32_t v, std::uint32_t w);

// Every 2-edge-connected component of the subgraph of edges with level >= i
// has at most floor(n / 2^i) vertices, for all i in 0..lmax.
bool check_size_invariant(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                          const std::vector<Level>& levels);

// Literal replay of Cover/Uncover on an explicit forest.
class CoverSimulator {
public:
    CoverSimulator(std::uint32_t n, Level lmax) : n_(n), lmax_(lmax), adj_(n) {}

    std::uint32_t size() const { return n_; }
    Level lmax() const { return lmax_; }

    void link(std::uint32_t u, std::uint32_t v, std::uint32_t key);
    void cut(std::uint32_t key);
    bool has_edge(std::uint32_t key) const { return ends_.count(key) != 0; }
    std::pair<std::uint32_t, std::uint32_t> ends(std::uint32_t key) const { return ends_.at(key); }
    const std::map<std::uint32_t, Level>& levels() const { return c_; }
    Level level(std::uint32_t key) const { return c_.at(key); }

    // Tree path as edge keys from v to w; nullopt if disconnected.
    std::optional<std::vector<std::uint32_t>> path(std::uint32_t v, std::uint32_t w) const;
    std::optional<std::vector<std::uint32_t>> path_vertices(std::uint32_t v, std::uint32_t w) const;
    bool connected(std::uint32_t v, std::uint32_t w) const { return path(v, w).has_value(); }
    std::vector<std::uint32_t> component(std::uint32_t v) const;

    void cover(std::uint32_t v, std::uint32_t w, Level i);
    void uncover(std::uint32_t v, std::uint32_t w, Level i);

    // Minimum over the path (lmax for v == w); nullopt if disconnected.
    std::optional<Level> cover_level(std::uint32_t v, std::uint32_t w) const;
    // Minimum over the tree of v (lmax if no edges).
    Level cover_level(std::uint32_t v) const;

    std::uint32_t meet(std::uint32_t u, std::uint32_t v, std::uint32_t w) const;
    std::uint32_t dist(std::uint32_t u, std::uint32_t v) const;
    // |{u : CoverLevel(u, meet(u,v,w)) >= i}|.
    std::uint32_t find_size(std::uint32_t v, std::uint32_t w, Level i) const;
    // Smallest dist(v, meet(u,v,w)) over labelled vertices u (label levels
    // given per vertex as bit masks in LevelSpace::bit form) with a level-i
    // label and CoverLevel(u, meet) >= i. nullopt if none qualifies.
    std::optional<std::uint32_t> first_label_distance(std::uint32_t v, std::uint32_t w, Level i,
                                                      const std::vector<std::uint64_t>& label_masks) const;
    // Whether u qualifies for find_first_label(v, w, i) at that distance.
    bool label_qualifies(std::uint32_t u, std::uint32_t v, std::uint32_t w, Level i) const;

    // c(e) per tree edge from its definition: the maximum level of a nontree
    // edge whose tree path contains e, or -1. Nontree edges as (u, v, level).
    std::map<std::uint32_t, Level> defined_cover_levels(
        const std::vector<std::tuple<std::uint32_t, std::uint32_t, Level>>& nontree) const;

private:
    std::uint32_t n_;
    Level lmax_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj_;  // (neighbor, key)
    std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> ends_;
    std::map<std::uint32_t, Level> c_;
};

// Payload of a cluster recomputed from its definition.
struct ExpectedPart {
    std::vector<std::int64_t> part;  // indexed by level + 1
    std::uint64_t inc = 0;
};
struct ExpectedCluster {
    Level cover = 0;
    Level gcover = 0;
    // Per boundary slot: nonzero parts by key.
    std::vector<std::map<Level, ExpectedPart>> parts;
};

// bnd: the 1 or 2 boundary vertices; edges: keys of edges in the cluster;
// vertices: vertices whose label cluster lies in the cluster.
ExpectedCluster eval_cluster_from_scratch(const CoverSimulator& sim, const std::vector<std::uint32_t>& bnd,
                                          const std::vector<std::uint32_t>& edges,
                                          const std::vector<std::uint32_t>& vertices,
                                          const std::vector<std::uint64_t>& label_masks);

}  // namespace tecc::oracle
