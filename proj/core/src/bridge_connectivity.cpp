#include "tecc/bridge_connectivity.hpp"

#include <stdexcept>

#include "tecc/counters.hpp"

namespace tecc {

BridgeConnectivity::BridgeConnectivity(std::uint32_t n) : forest_(n) {}

void BridgeConnectivity::check_vertex(std::uint32_t v) const {
    if (v >= forest_.size()) throw std::out_of_range("vertex out of range");
}

std::vector<EdgeId> BridgeConnectivity::live_ids() const {
    std::vector<EdgeId> out;
    out.reserve(live_);
    for (EdgeId e = 0; e < edges_.size(); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

std::optional<EdgeId> BridgeConnectivity::find_edge(std::uint32_t u, std::uint32_t v) const {
    auto it = by_pair_.find(pair_key(u, v));
    if (it == by_pair_.end() || it->second.empty()) return std::nullopt;
    return it->second.back();
}

// Forest wrappers that also feed the trace.

void BridgeConnectivity::link(EdgeId e) {
    GraphEdge& g = edges_[e];
    g.handle = forest_.link(g.u, g.v, e);
    g.tree = true;
    g.level = lmax();
    if (trace_) trace_->on_link(g.u, g.v, e);
}

void BridgeConnectivity::cut(EdgeId e) {
    GraphEdge& g = edges_[e];
    forest_.cut(g.handle);
    g.handle = {};
    g.tree = false;
    if (trace_) trace_->on_cut(e);
}

void BridgeConnectivity::cover(std::uint32_t v, std::uint32_t w, Level i) {
    forest_.cover(v, w, i);
    if (trace_) trace_->on_cover(v, w, i);
}

void BridgeConnectivity::uncover(std::uint32_t v, std::uint32_t w, Level i) {
    forest_.uncover(v, w, i);
    if (trace_) trace_->on_uncover(v, w, i);
}

void BridgeConnectivity::add_labels(EdgeId e, Level i) {
    GraphEdge& g = edges_[e];
    g.label1 = forest_.add_label(g.u, i, e);
    g.label2 = forest_.add_label(g.v, i, e);
    g.level = i;
}

void BridgeConnectivity::remove_labels(EdgeId e) {
    GraphEdge& g = edges_[e];
    forest_.remove_label(g.label1);
    forest_.remove_label(g.label2);
    g.label1 = g.label2 = {};
}

// Queries.

bool BridgeConnectivity::connected(std::uint32_t u, std::uint32_t v) {
    check_vertex(u);
    check_vertex(v);
    return forest_.connected(u, v);
}

bool BridgeConnectivity::two_edge_connected(std::uint32_t u, std::uint32_t v) {
    check_vertex(u);
    check_vertex(v);
    return forest_.connected(u, v) && forest_.cover_level(u, v)->level >= 0;
}

std::optional<EdgeId> BridgeConnectivity::find_bridge(std::uint32_t v) {
    check_vertex(v);
    const CoverQuery q = forest_.cover_level(v);
    if (q.level == -1) return q.edge;
    return std::nullopt;
}

std::optional<EdgeId> BridgeConnectivity::find_bridge(std::uint32_t v, std::uint32_t w) {
    check_vertex(v);
    check_vertex(w);
    const auto q = forest_.cover_level(v, w);
    if (!q) throw std::invalid_argument("vertices are not connected");
    if (q->level == -1) return q->edge;
    return std::nullopt;
}

std::uint32_t BridgeConnectivity::size(std::uint32_t v) {
    check_vertex(v);
    return forest_.find_size(v, v, -1);
}

std::uint32_t BridgeConnectivity::two_size(std::uint32_t v) {
    check_vertex(v);
    return forest_.find_size(v, v, 0);
}

// Updates.

EdgeId BridgeConnectivity::insert(std::uint32_t u, std::uint32_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not supported");
    TECC_COUNT(counters_.inserts);
    const auto e = static_cast<EdgeId>(edges_.size());
    GraphEdge& g = edges_.emplace_back();
    g.u = u;
    g.v = v;
    g.alive = true;
    auto& bucket = by_pair_[pair_key(u, v)];
    g.slot = static_cast<std::uint32_t>(bucket.size());
    bucket.push_back(e);
    ++live_;

    if (!forest_.connected(u, v)) {
        link(e);
    } else {
        add_labels(e, 0);
        cover(u, v, 0);
    }
    return e;
}

void BridgeConnectivity::erase(EdgeId e) {
    if (!alive(e)) throw std::invalid_argument("stale or unknown edge id");
    TECC_COUNT(counters_.deletes);
    const std::uint32_t v = edges_[e].u, w = edges_[e].v;

    Level alpha = edges_[e].level;
    bool removed = false;
    if (alpha == lmax() && edges_[e].tree) {
        alpha = forest_.cover_level(v, w)->level;
        if (alpha == -1) {
            cut(e);
            removed = true;
        } else {
            swap(e);
        }
    }
    if (!removed) {
        remove_labels(e);
        uncover(v, w, alpha);
        for (Level i = alpha; i >= 0; --i) recover(w, v, i);
    }

    GraphEdge& g = edges_[e];
    auto& bucket = by_pair_[pair_key(g.u, g.v)];
    const EdgeId moved = bucket.back();
    bucket[g.slot] = moved;
    edges_[moved].slot = g.slot;
    bucket.pop_back();
    if (bucket.empty()) by_pair_.erase(pair_key(g.u, g.v));
    g.alive = false;
    --live_;
}

// Replaces tree edge e by a nontree edge covering it; e becomes a nontree edge
// at its former cover level.
void BridgeConnectivity::swap(EdgeId e) {
    TECC_COUNT(counters_.swaps);
    const std::uint32_t v = edges_[e].u, w = edges_[e].v;
    const Level alpha = forest_.cover_level(v, w)->level;
    cut(e);
    const auto rep = find_replacement(v, w, alpha);
    if (!rep) throw std::logic_error("covered tree edge without replacement");
    const EdgeId r = *rep;
    remove_labels(r);
    link(r);
    add_labels(e, alpha);
    cover(v, w, alpha);
}

std::optional<EdgeId> BridgeConnectivity::find_replacement(std::uint32_t v, std::uint32_t w, Level i) {
    const std::uint32_t sv = forest_.find_size(v, v, i);
    const std::uint32_t sw = forest_.find_size(w, w, i);
    if (sv <= sw) return recover_phase(v, v, i, sv);
    return recover_phase(w, w, i, sw);
}

void BridgeConnectivity::recover(std::uint32_t v, std::uint32_t w, Level i) {
    const std::uint32_t s = forest_.find_size(v, w, i) / 2;
    recover_phase(v, w, i, s);
    recover_phase(w, v, i, s);
}

std::optional<EdgeId> BridgeConnectivity::recover_phase(std::uint32_t v, std::uint32_t w, Level i,
                                                        std::uint32_t s) {
    TECC_COUNT(counters_.recover_phases);
    for (auto l = forest_.find_first_label(v, w, i); l; l = forest_.find_first_label(v, w, i)) {
        const auto e = static_cast<EdgeId>(forest_.labels().payload(*l));
        const std::uint32_t q = edges_[e].u, r = edges_[e].v;
        if (!forest_.connected(q, r)) return e;
        if (forest_.find_size(q, r, i + 1) <= s) {
            TECC_COUNT(counters_.promotions);
            remove_labels(e);
            add_labels(e, i + 1);
            cover(q, r, i + 1);
        } else {
            cover(q, r, i);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace tecc
