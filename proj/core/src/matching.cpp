#include "tecc/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "tecc/bridge_connectivity.hpp"

namespace tecc {

MatchingVerdict unique_perfect_matching(const oracle::Snapshot& g) {
    const std::uint32_t n = g.n;
    BridgeConnectivity bc(n);
    std::vector<std::uint32_t> input_of;  // structure edge id -> input index
    std::vector<std::vector<EdgeId>> incident(n);
    for (std::uint32_t k = 0; k < g.edges.size(); ++k) {
        const auto [u, v] = g.edges[k];
        if (u == v) continue;  // never part of a matching
        const EdgeId e = bc.insert(u, v);
        if (e != input_of.size()) throw std::logic_error("matching: unexpected edge id");
        input_of.push_back(k);
        incident[u].push_back(e);
        incident[v].push_back(e);
    }

    MatchingVerdict out;
    std::vector<bool> matched(n, false);
    auto fail = [&](MatchingDetail d) {
        out.unique = false;
        out.detail = d;
        out.matching.clear();
        return out;
    };
    for (std::uint32_t v = 0; v < n; ++v) {
        while (!matched[v]) {
            const std::uint32_t s = bc.size(v);
            if (s % 2 == 1) return fail(MatchingDetail::OddComponent);
            const auto b = bc.find_bridge(v);
            if (!b) return fail(MatchingDetail::BridgelessPart);
            const std::uint32_t x = bc.edge(*b).u, y = bc.edge(*b).v;
            bc.erase(*b);
            if (bc.size(x) % 2 == 1) {
                out.matching.push_back(input_of[*b]);
                matched[x] = matched[y] = true;
                for (std::uint32_t z : {x, y})
                    for (EdgeId e : incident[z])
                        if (bc.alive(e)) bc.erase(e);
            }
        }
    }
    std::sort(out.matching.begin(), out.matching.end());
    out.unique = true;
    return out;
}

namespace {

struct Enumerator {
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;  // (neighbor, edge)
    std::vector<bool> used;
    std::vector<std::uint32_t> chosen;
    MatchingCount result;

    void run() {
        std::uint32_t v = 0;
        while (v < used.size() && used[v]) ++v;
        if (v == used.size()) {
            if (result.count++ == 0) result.first = chosen;
            return;
        }
        used[v] = true;
        for (auto [w, e] : adj[v]) {
            if (used[w]) continue;
            used[w] = true;
            chosen.push_back(e);
            run();
            chosen.pop_back();
            used[w] = false;
        }
        used[v] = false;
    }
};

}  // namespace

MatchingCount enumerate_perfect_matchings(const oracle::Snapshot& g) {
    if (g.n > 16) throw std::invalid_argument("enumerator is limited to 16 vertices");
    Enumerator en;
    en.adj.resize(g.n);
    en.used.assign(g.n, false);
    for (std::uint32_t k = 0; k < g.edges.size(); ++k) {
        const auto [u, v] = g.edges[k];
        if (u == v) continue;
        en.adj[u].push_back({v, k});
        en.adj[v].push_back({u, k});
    }
    en.run();
    std::sort(en.result.first.begin(), en.result.first.end());
    return en.result;
}

}  // namespace tecc
