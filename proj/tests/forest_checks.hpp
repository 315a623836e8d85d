#pragma once

// Shared slow checks of a CombinedForest against the literal cover simulator.

#include <string>
#include <vector>

#include "tecc/combined_forest.hpp"
#include "tecc/oracle.hpp"

namespace tecc::testing_support {

inline std::vector<std::uint64_t> label_masks(const CombinedForest& f) {
    std::vector<std::uint64_t> m(f.size());
    for (std::uint32_t v = 0; v < f.size(); ++v) m[v] = f.labels().mask(v);
    return m;
}

// Every cluster against its definition, plus the lazy invariant. Returns an
// empty string on success.
inline std::string cluster_errors(const CombinedForest& f, const oracle::CoverSimulator& sim) {
    const auto masks = label_masks(f);
    const int w = f.policy().width();
    std::string err;
    f.visit_effective([&](const CompositeCluster& c, const CompositeData& eff) {
        if (!err.empty()) return;
        if (!(eff.cover >= eff.cplus)) err = "lazy invariant cover >= cover+ broken";
        if (eff.cover <= eff.cminus && eff.cover != eff.cplus) err = "lazy invariant cover <= cover- => cover = cover+ broken";
        if (!c.is_path() && (eff.cover != f.lmax() || c.data.minpath != kNilEdge)) err = "point cluster with path cover";
        std::vector<std::uint32_t> edges, verts;
        CombinedForest::Tree::walk(&c, [&](const CompositeCluster& x, int) {
            if (x.kind == ClusterKind::Edge) edges.push_back(x.key);
            if (x.kind == ClusterKind::Vertex) verts.push_back(x.key);
        });
        std::vector<std::uint32_t> bnd{c.bnd[0]};
        if (c.is_path()) bnd.push_back(c.bnd[1]);
        auto want = oracle::eval_cluster_from_scratch(sim, bnd, edges, verts, masks);
        if (c.is_path() && want.cover != eff.cover) err = "cover mismatch";
        if (want.gcover != eff.gcover) err = "globalcover mismatch";
        if (c.is_path() && eff.minpath != kNilEdge && sim.level(eff.minpath) != eff.cover)
            err = "minpath witness does not attain cover";
        if (eff.minglob != kNilEdge && sim.level(eff.minglob) != eff.gcover)
            err = "minglob witness does not attain globalcover";
        for (int s = 0; s < c.nb; ++s) {
            auto got = f.clean_parts(c, s, eff);
            if (f.policy().arena().count(c.data.tree[s]) > static_cast<std::size_t>(f.lmax() + 2))
                err = "too many part keys";
            const auto& exp = want.parts[s];
            if (got.size() != exp.size()) {
                err = "part count mismatch at slot " + std::to_string(s) + " bnd " + std::to_string(c.bnd[0]) +
                      (c.is_path() ? "," + std::to_string(c.bnd[1]) : "") + " kind " +
                      std::to_string(static_cast<int>(c.kind)) + " eff(" + std::to_string(eff.cover) + "," +
                      std::to_string(eff.cminus) + "," + std::to_string(eff.cplus) + ") got:";
                for (auto& [k, p] : got) {
                    err += " [" + std::to_string(k) + ":";
                    for (auto x : p.part) err += " " + std::to_string(x);
                    err += "]";
                }
                err += " want:";
                for (auto& [k, p] : exp) {
                    err += " [" + std::to_string(k) + ":";
                    for (auto x : p.part) err += " " + std::to_string(x);
                    err += "]";
                }
                if (c.kind == ClusterKind::Composite) {
                    for (auto* ch : {c.child[0], c.child[1]}) {
                        err += " | child bnd " + std::to_string(ch->bnd[0]) +
                               (ch->is_path() ? "," + std::to_string(ch->bnd[1]) : "") + " cover " +
                               std::to_string(ch->data.cover) + " lazy " + std::to_string(ch->data.cminus) + "," +
                               std::to_string(ch->data.cplus);
                    }
                }
                return;
            }
            for (auto& [key, p] : got) {
                auto it = exp.find(key);
                if (it == exp.end()) {
                    err = "unexpected part key " + std::to_string(key);
                    return;
                }
                for (int i = 0; i < w; ++i) {
                    if (p.part[i] != it->second.part[i]) err = "partsize mismatch";
                    const std::int64_t d = i <= LevelSpace::index(key) ? p.part[i] : 0;
                    if (p.diag[i] != d) err = "diagsize != M(key) partsize";
                }
                if (p.pinc != it->second.inc) err = "partincident mismatch";
                if (p.dinc != (p.pinc & LevelSpace::mask(key))) err = "diagincident mismatch";
            }
        }
    });
    return err;
}

}  // namespace tecc::testing_support
