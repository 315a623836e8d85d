#include "tecc/combined_forest.hpp"
#include "tecc/counters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tecc {

CombinedForest::CombinedForest(std::uint32_t n)
    : n_(n),
      labels_(n, floor_log2(n == 0 ? 1 : n) + 1),
      policy_(n, [this](std::uint32_t v) { return labels_.mask(v); }),
      tree_(n, policy_) {
    for (std::uint32_t v = 0; v < n; ++v) tree_.ensure_leaf(v);
}

EdgeHandle CombinedForest::link(std::uint32_t u, std::uint32_t v, std::uint32_t key) {
    TECC_COUNT(counters_.link);
    return tree_.link(u, v, key);
}

void CombinedForest::cut(EdgeHandle e) {
    TECC_COUNT(counters_.cut);
    tree_.cut(e);
}

bool CombinedForest::connected(std::uint32_t u, std::uint32_t v) {
    TECC_COUNT(counters_.connected);
    return tree_.connected(u, v);
}

CompositeCluster* CombinedForest::expose_pair(std::uint32_t v, std::uint32_t w) {
    CompositeCluster* r = v == w ? tree_.expose(v) : tree_.expose(v, w);
    if (!r) throw std::invalid_argument("vertices are not connected");
    return r;
}

void CombinedForest::cover(std::uint32_t v, std::uint32_t w, Level i) {
    TECC_COUNT(counters_.cover);
    if (i < 0 || i >= lmax()) throw std::out_of_range("cover level out of range");
    if (v == w) return;
    CompositeData& d = expose_pair(v, w)->data;
    const auto li = static_cast<std::int8_t>(i);
    d.cover = std::max(d.cover, li);
    d.cplus = std::max(d.cplus, li);
}

void CombinedForest::uncover(std::uint32_t v, std::uint32_t w, Level i) {
    TECC_COUNT(counters_.uncover);
    if (i < 0 || i >= lmax()) throw std::out_of_range("uncover level out of range");
    if (v == w) return;
    CompositeData& d = expose_pair(v, w)->data;
    if (d.cover <= i) {
        d.cover = d.cplus = -1;
        d.cminus = std::max(d.cminus, static_cast<std::int8_t>(i));
    }
}

CoverQuery CombinedForest::cover_level(std::uint32_t v) {
    TECC_COUNT(counters_.cover_level);
    const CompositeCluster* r = tree_.expose(v);
    return {r->data.gcover, r->data.minglob};
}

std::optional<CoverQuery> CombinedForest::cover_level(std::uint32_t v, std::uint32_t w) {
    TECC_COUNT(counters_.cover_level);
    if (v == w) {
        if (v >= n_) throw std::out_of_range("vertex id out of range");
        return CoverQuery{lmax(), kNilEdge};
    }
    const CompositeCluster* r = tree_.expose(v, w);
    if (!r) return std::nullopt;
    return CoverQuery{r->data.cover, r->data.minpath};
}

LabelHandle CombinedForest::add_label(std::uint32_t v, Level i, std::uint64_t payload) {
    TECC_COUNT(counters_.add_label);
    LabelHandle h = labels_.add(v, i, payload);
    tree_.update_vertex(v, [this](CompositeCluster& leaf) { policy_.refresh_vertex(leaf); });
    return h;
}

void CombinedForest::remove_label(LabelHandle h) {
    TECC_COUNT(counters_.remove_label);
    const std::uint32_t v = labels_.vertex(h);
    labels_.remove(h);
    tree_.update_vertex(v, [this](CompositeCluster& leaf) { policy_.refresh_vertex(leaf); });
}

std::uint32_t CombinedForest::find_size(std::uint32_t v, std::uint32_t w, Level i) {
    TECC_COUNT(counters_.find_size);
    if (i < -1 || i > lmax()) throw std::out_of_range("size level out of range");
    const CompositeCluster* r = expose_pair(v, w);
    const PartNode* t = r->data.tree[0].root();
    return static_cast<std::uint32_t>(t->data()[2 * policy_.width() + LevelSpace::index(i)]);
}

std::optional<LabelHandle> CombinedForest::find_first_label(std::uint32_t v, std::uint32_t w, Level i) {
    TECC_COUNT(counters_.find_first_label);
    if (i < 0 || i > lmax()) throw std::out_of_range("label level out of range");
    using C = CompositeCluster;
    C* k = expose_pair(v, w);
    const std::uint64_t bit = LevelSpace::bit(i);
    auto inc = [&](const C* x) { return (policy_.inc(*x) & bit) != 0; };
    auto ext = [&](const C* x, std::uint32_t at) { return (policy_.ext_inc(*x, x->slot_of(at)) & bit) != 0; };

    // Path mode: k lies on the v..w path, x is its end nearer to v.
    // Hanging mode: everything of k hangs off x.
    bool path_mode = k->is_path();
    std::uint32_t x = v;
    if (path_mode ? !inc(k) : !ext(k, x)) return std::nullopt;

    std::optional<LabelHandle> found;
    while (k->kind == ClusterKind::Composite) {
        C* a = k->child[0];
        C* b = k->child[1];
        const MergeShape shape = merge_shape(*k, *a, *b);
        std::uint32_t common = a->bnd[0];
        if (!b->has_boundary(common)) common = a->bnd[1];
        tree_.split_root(k);
        C* path = a->is_path() ? a : b;
        C* point = a->is_path() ? b : a;
        C* next = nullptr;
        if (path_mode) {
            if (shape == MergeShape::Compress) {
                C* nearc = a->has_boundary(x) ? a : b;
                C* farc = nearc == a ? b : a;
                if (inc(nearc)) {
                    next = nearc;
                } else if (inc(farc)) {
                    next = farc;
                    x = common;
                }
            } else {
                const std::uint32_t at = point->bnd[0];
                if (x == at) {
                    if (inc(point)) {
                        next = point;
                        path_mode = false;
                    } else if (inc(path)) {
                        next = path;
                    }
                } else if (inc(path)) {
                    next = path;
                } else if (inc(point)) {
                    next = point;
                    path_mode = false;
                    x = at;
                }
            }
        } else {
            switch (shape) {
                case MergeShape::PointPoint:
                    next = inc(a) ? a : (inc(b) ? b : nullptr);
                    break;
                case MergeShape::Rake:
                    if (ext(path, x)) {
                        next = path;
                    } else if (path->data.cover >= i && inc(point)) {
                        next = point;
                        x = common;
                    }
                    break;
                case MergeShape::Compress: {
                    C* nearc = a->has_boundary(x) ? a : b;
                    C* farc = nearc == a ? b : a;
                    if (ext(nearc, x)) {
                        next = nearc;
                    } else if (nearc->data.cover >= i && ext(farc, common)) {
                        next = farc;
                        x = common;
                    }
                    break;
                }
                case MergeShape::PathPoint: {
                    const std::uint32_t at = point->bnd[0];
                    if (x == at) {
                        next = inc(point) ? point : (ext(path, x) ? path : nullptr);
                    } else if (ext(path, x)) {
                        next = path;
                    } else if (path->data.cover >= i && inc(point)) {
                        next = point;
                        x = at;
                    }
                    break;
                }
            }
        }
        if (!next) {
            tree_.restore();
            throw std::logic_error("find_first_label: descent lost the label");
        }
        k = next;
    }
    if (k->kind == ClusterKind::Vertex) found = labels_.head(k->key, i);
    tree_.restore();
    if (!found) throw std::logic_error("find_first_label: reached an empty bucket");
    return found;
}

namespace {

struct Hasher {
    std::uint64_t h = 1469598103934665603ull;
    void add(std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    }
};

CompositeData cover_fields(const CompositeData& src) {
    CompositeData d;
    d.cover = src.cover;
    d.gcover = src.gcover;
    d.cminus = src.cminus;
    d.cplus = src.cplus;
    d.minpath = src.minpath;
    d.minglob = src.minglob;
    return d;
}

void visit(const CompositeCluster& c, const CompositeData& eff,
           const std::function<void(const CompositeCluster&, const CompositeData&)>& fn) {
    fn(c, eff);
    if (c.kind != ClusterKind::Composite) return;
    for (const CompositeCluster* ch : {c.child[0], c.child[1]}) {
        CompositeData d = cover_fields(ch->data);
        if (CompositePolicy::path_child(c, *ch)) CompositePolicy::push_lazy(eff, d);
        visit(*ch, d, fn);
    }
}

}  // namespace

void CombinedForest::visit_effective(
    const std::function<void(const CompositeCluster&, const CompositeData&)>& fn) const {
    for (const CompositeCluster* t : tree_.tops()) visit(*t, cover_fields(t->data), fn);
}

std::map<Level, CleanPart> CombinedForest::clean_parts(const CompositeCluster& c, int slot,
                                                       const CompositeData& eff) const {
    const int w = policy_.width();
    const Level l = std::max(eff.cminus, eff.cplus);
    std::map<Level, CleanPart> parts;
    policy_.arena().for_each(c.data.tree[slot], [&](const PartNode& n) {
        const bool folded = l != -1 && n.key <= l;
        const Level key = folded ? eff.cplus : n.key;
        CleanPart& p = parts[key];
        p.part.resize(w, 0);
        p.diag.resize(w, 0);
        for (int i = 0; i < w; ++i) p.part[i] += n.data()[i];
        p.pinc |= n.pinc;
        if (!folded) {
            for (int i = 0; i < w; ++i) p.diag[i] += n.data()[w + i];
            p.dinc |= n.dinc;
        }
    });
    for (auto it = parts.begin(); it != parts.end();) {
        CleanPart& p = it->second;
        if (l != -1 && it->first == eff.cplus) {
            // The folded part is recomputed from its part sum.
            const std::uint64_t m = LevelSpace::mask(eff.cplus);
            std::fill(p.diag.begin(), p.diag.end(), 0);
            for (int i = 0; i < w && i <= LevelSpace::index(eff.cplus); ++i) p.diag[i] = p.part[i];
            p.dinc = p.pinc & m;
        }
        bool zero = p.pinc == 0;
        for (auto x : p.part) zero = zero && x == 0;
        it = zero ? parts.erase(it) : std::next(it);
    }
    return parts;
}

std::uint64_t CombinedForest::payload_digest() const {
    Hasher hs;
    visit_effective([&](const CompositeCluster& c, const CompositeData& eff) {
        hs.add(c.nb);
        hs.add(c.bnd[0]);
        hs.add(c.nb == 2 ? c.bnd[1] : c.bnd[0]);
        hs.add(static_cast<std::uint64_t>(eff.cover + 1));
        hs.add(static_cast<std::uint64_t>(eff.gcover + 1));
        for (int s = 0; s < c.nb; ++s) {
            for (const auto& [key, p] : clean_parts(c, s, eff)) {
                hs.add(static_cast<std::uint64_t>(key + 1));
                for (auto x : p.part) hs.add(static_cast<std::uint64_t>(x));
                for (auto x : p.diag) hs.add(static_cast<std::uint64_t>(x));
                hs.add(p.pinc);
                hs.add(p.dinc);
            }
        }
    });
    return hs.h;
}

}  // namespace tecc
