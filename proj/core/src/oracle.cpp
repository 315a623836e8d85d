#include "tecc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace tecc::oracle {

namespace {

using Adj = std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>;  // (neighbor, edge id)

Adj adjacency(const Snapshot& g, const std::vector<bool>* skip = nullptr) {
    Adj adj(g.n);
    for (std::uint32_t id = 0; id < g.edges.size(); ++id) {
        if (skip && (*skip)[id]) continue;
        auto [u, v] = g.edges[id];
        adj[u].push_back({v, id});
        adj[v].push_back({u, id});
    }
    return adj;
}

std::vector<std::uint32_t> label_components(const Adj& adj) {
    const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
    std::vector<std::uint32_t> comp(n, ~0u);
    std::uint32_t next = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (comp[s] != ~0u) continue;
        std::vector<std::uint32_t> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            std::uint32_t u = stack.back();
            stack.pop_back();
            for (auto [v, id] : adj[u])
                if (comp[v] == ~0u) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

}  // namespace

std::vector<bool> bridges(const Snapshot& g) {
    Adj adj = adjacency(g);
    std::vector<bool> out(g.edges.size(), false);
    std::vector<std::uint32_t> disc(g.n, 0), low(g.n, 0);
    std::uint32_t timer = 0;
    struct Frame {
        std::uint32_t v, parent_edge, next;
    };
    for (std::uint32_t s = 0; s < g.n; ++s) {
        if (disc[s]) continue;
        std::vector<Frame> st{{s, ~0u, 0}};
        disc[s] = low[s] = ++timer;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.next < adj[f.v].size()) {
                auto [to, id] = adj[f.v][f.next++];
                if (id == f.parent_edge) continue;
                if (disc[to]) {
                    low[f.v] = std::min(low[f.v], disc[to]);
                } else {
                    disc[to] = low[to] = ++timer;
                    st.push_back({to, id, 0});
                }
            } else {
                const Frame done = f;
                st.pop_back();
                if (!st.empty()) {
                    Frame& p = st.back();
                    low[p.v] = std::min(low[p.v], low[done.v]);
                    if (low[done.v] > disc[p.v]) out[done.parent_edge] = true;
                }
            }
        }
    }
    return out;
}

std::vector<bool> bridges_by_definition(const Snapshot& g) {
    std::vector<bool> out(g.edges.size(), false);
    const auto base = components(g);
    std::vector<bool> skip(g.edges.size(), false);
    for (std::size_t id = 0; id < g.edges.size(); ++id) {
        skip[id] = true;
        auto comp = label_components(adjacency(g, &skip));
        out[id] = comp[g.edges[id].first] != comp[g.edges[id].second];
        skip[id] = false;
    }
    (void)base;
    return out;
}

std::vector<std::uint32_t> components(const Snapshot& g) { return label_components(adjacency(g)); }

std::vector<std::uint32_t> two_ecc(const Snapshot& g) {
    auto br = bridges(g);
    return label_components(adjacency(g, &br));
}

bool is_two_edge_connected(const Snapshot& g, std::uint32_t v, std::uint32_t w) {
    auto c = two_ecc(g);
    return c.at(v) == c.at(w);
}

bool check_size_invariant(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                          const std::vector<Level>& levels) {
    const Level lmax = floor_log2(n);
    for (Level i = 0; i <= lmax; ++i) {
        Snapshot g{n, {}};
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (levels[k] >= i) g.edges.push_back(edges[k]);
        auto cls = two_ecc(g);
        std::vector<std::uint32_t> cnt(n, 0);
        for (auto c : cls) ++cnt[c];
        const std::uint32_t bound = n >> i;
        for (auto c : cnt)
            if (c > bound) return false;
    }
    return true;
}

// ---- cover simulator --------------------------------------------------------

void CoverSimulator::link(std::uint32_t u, std::uint32_t v, std::uint32_t key) {
    if (connected(u, v)) throw std::logic_error("simulator: link inside a tree");
    adj_[u].push_back({v, key});
    adj_[v].push_back({u, key});
    ends_[key] = {u, v};
    c_[key] = -1;
}

void CoverSimulator::cut(std::uint32_t key) {
    auto [u, v] = ends_.at(key);
    auto drop = [&](std::uint32_t x) {
        auto& a = adj_[x];
        a.erase(std::find_if(a.begin(), a.end(), [&](auto& p) { return p.second == key; }));
    };
    drop(u);
    drop(v);
    ends_.erase(key);
    c_.erase(key);
}

std::optional<std::vector<std::uint32_t>> CoverSimulator::path(std::uint32_t v, std::uint32_t w) const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> par(n_, {~0u, ~0u});
    std::vector<bool> seen(n_, false);
    std::queue<std::uint32_t> q;
    q.push(v);
    seen[v] = true;
    while (!q.empty()) {
        std::uint32_t u = q.front();
        q.pop();
        for (auto [x, key] : adj_[u])
            if (!seen[x]) {
                seen[x] = true;
                par[x] = {u, key};
                q.push(x);
            }
    }
    if (!seen[w]) return std::nullopt;
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = w; x != v; x = par[x].first) out.push_back(par[x].second);
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<std::vector<std::uint32_t>> CoverSimulator::path_vertices(std::uint32_t v, std::uint32_t w) const {
    auto p = path(v, w);
    if (!p) return std::nullopt;
    std::vector<std::uint32_t> out{v};
    std::uint32_t cur = v;
    for (auto key : *p) {
        auto [a, b] = ends_.at(key);
        cur = cur == a ? b : a;
        out.push_back(cur);
    }
    return out;
}

std::vector<std::uint32_t> CoverSimulator::component(std::uint32_t v) const {
    std::vector<std::uint32_t> out;
    std::vector<bool> seen(n_, false);
    std::vector<std::uint32_t> st{v};
    seen[v] = true;
    while (!st.empty()) {
        std::uint32_t u = st.back();
        st.pop_back();
        out.push_back(u);
        for (auto [x, key] : adj_[u])
            if (!seen[x]) {
                seen[x] = true;
                st.push_back(x);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void CoverSimulator::cover(std::uint32_t v, std::uint32_t w, Level i) {
    const auto p = path(v, w).value();
    for (auto key : p) c_[key] = std::max(c_[key], i);
}

void CoverSimulator::uncover(std::uint32_t v, std::uint32_t w, Level i) {
    const auto p = path(v, w).value();
    for (auto key : p)
        if (c_[key] <= i) c_[key] = -1;
}

std::optional<Level> CoverSimulator::cover_level(std::uint32_t v, std::uint32_t w) const {
    auto p = path(v, w);
    if (!p) return std::nullopt;
    Level m = lmax_;
    for (auto key : *p) m = std::min(m, c_.at(key));
    return m;
}

Level CoverSimulator::cover_level(std::uint32_t v) const {
    Level m = lmax_;
    for (auto u : component(v))
        for (auto [x, key] : adj_[u]) m = std::min(m, c_.at(key));
    return m;
}

std::uint32_t CoverSimulator::meet(std::uint32_t u, std::uint32_t v, std::uint32_t w) const {
    auto a = path_vertices(u, v).value();
    auto b = path_vertices(v, w).value();
    auto c = path_vertices(u, w).value();
    std::set<std::uint32_t> sb(b.begin(), b.end()), sc(c.begin(), c.end());
    for (auto x : a)
        if (sb.count(x) && sc.count(x)) return x;
    throw std::logic_error("simulator: no meet vertex");
}

std::uint32_t CoverSimulator::dist(std::uint32_t u, std::uint32_t v) const {
    return static_cast<std::uint32_t>(path(u, v).value().size());
}

std::uint32_t CoverSimulator::find_size(std::uint32_t v, std::uint32_t w, Level i) const {
    std::uint32_t cnt = 0;
    for (auto u : component(v))
        if (*cover_level(u, meet(u, v, w)) >= i) ++cnt;
    return cnt;
}

bool CoverSimulator::label_qualifies(std::uint32_t u, std::uint32_t v, std::uint32_t w, Level i) const {
    if (!connected(u, v)) return false;
    return *cover_level(u, meet(u, v, w)) >= i;
}

std::optional<std::uint32_t> CoverSimulator::first_label_distance(std::uint32_t v, std::uint32_t w, Level i,
                                                                  const std::vector<std::uint64_t>& masks) const {
    std::optional<std::uint32_t> best;
    for (auto u : component(v)) {
        if (!(masks[u] & LevelSpace::bit(i))) continue;
        const std::uint32_t m = meet(u, v, w);
        if (*cover_level(u, m) < i) continue;
        const std::uint32_t d = dist(v, m);
        if (!best || d < *best) best = d;
    }
    return best;
}

// ---- from-scratch cluster evaluation -----------------------------------------

std::map<std::uint32_t, Level> CoverSimulator::defined_cover_levels(
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, Level>>& nontree) const {
    std::map<std::uint32_t, Level> c;
    for (const auto& [key, ends] : ends_) c[key] = -1;
    for (const auto& [u, v, l] : nontree) {
        const auto p = path(u, v);
        if (!p) throw std::logic_error("nontree edge spans two trees");
        for (auto key : *p) c[key] = std::max(c[key], l);
    }
    return c;
}

ExpectedCluster eval_cluster_from_scratch(const CoverSimulator& sim, const std::vector<std::uint32_t>& bnd,
                                          const std::vector<std::uint32_t>& edges,
                                          const std::vector<std::uint32_t>& vertices,
                                          const std::vector<std::uint64_t>& label_masks) {
    const Level lmax = sim.lmax();
    const int width = lmax + 2;
    // Local adjacency restricted to the cluster's edges.
    std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;
    for (auto key : edges) {
        auto [a, b] = sim.ends(key);
        adj[a].push_back({b, key});
        adj[b].push_back({a, key});
    }
    // Cluster path and its edges.
    std::vector<std::uint32_t> pi{bnd[0]};
    std::set<std::uint32_t> pi_edges;
    if (bnd.size() == 2) {
        std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> par;
        std::queue<std::uint32_t> q;
        q.push(bnd[0]);
        par[bnd[0]] = {bnd[0], ~0u};
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto [x, key] : adj[u])
                if (!par.count(x)) {
                    par[x] = {u, key};
                    q.push(x);
                }
        }
        if (!par.count(bnd[1])) throw std::logic_error("cluster path disconnected");
        std::vector<std::uint32_t> rev;
        for (std::uint32_t x = bnd[1]; x != bnd[0]; x = par[x].first) {
            rev.push_back(x);
            pi_edges.insert(par[x].second);
        }
        pi.insert(pi.end(), rev.rbegin(), rev.rend());
    }
    ExpectedCluster out;
    out.cover = lmax;
    out.gcover = lmax;
    for (auto key : edges) {
        const Level c = sim.level(key);
        if (pi_edges.count(key))
            out.cover = std::min(out.cover, c);
        else
            out.gcover = std::min(out.gcover, c);
    }
    // Attach point and coverage of every vertex with a label cluster.
    std::set<std::uint32_t> on_pi(pi.begin(), pi.end());
    std::map<std::uint32_t, std::pair<std::uint32_t, Level>> attach;  // vertex -> (pi vertex, min cover)
    for (auto m : pi) {
        std::vector<std::pair<std::uint32_t, Level>> st{{m, lmax}};
        attach[m] = {m, lmax};
        while (!st.empty()) {
            auto [u, cov] = st.back();
            st.pop_back();
            for (auto [x, key] : adj[u]) {
                if (on_pi.count(x) || attach.count(x)) continue;
                const Level c2 = std::min(cov, sim.level(key));
                attach[x] = {m, c2};
                st.push_back({x, c2});
            }
        }
    }
    std::map<std::uint32_t, ExpectedPart> point;
    for (auto m : pi) point[m].part.assign(width, 0);
    for (auto u : vertices) {
        auto [m, cov] = attach.at(u);
        ExpectedPart& p = point[m];
        for (Level j = -1; j <= lmax; ++j)
            if (cov >= j) ++p.part[LevelSpace::index(j)];
        p.inc |= label_masks[u] & LevelSpace::mask(cov);
    }
    for (std::size_t s = 0; s < bnd.size(); ++s) {
        std::map<Level, ExpectedPart> parts;
        std::vector<std::uint32_t> order = pi;
        if (s == 1) std::reverse(order.begin(), order.end());
        Level key = lmax;
        for (std::size_t idx = 0; idx < order.size(); ++idx) {
            if (idx > 0) {
                auto e = sim.path(order[idx - 1], order[idx]).value();
                key = std::min(key, sim.level(e.at(0)));
            }
            const ExpectedPart& p = point[order[idx]];
            bool zero = p.inc == 0;
            for (auto x : p.part) zero = zero && x == 0;
            if (zero) continue;
            ExpectedPart& q = parts[key];
            q.part.resize(width, 0);
            for (int j = 0; j < width; ++j) q.part[j] += p.part[j];
            q.inc |= p.inc;
        }
        out.parts.push_back(std::move(parts));
    }
    return out;
}

}  // namespace tecc::oracle
