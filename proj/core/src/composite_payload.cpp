#include "tecc/composite_payload.hpp"

#include <algorithm>

namespace tecc {

namespace {

constexpr int kUnset = 127;

}  // namespace

CompositePolicy::CompositePolicy(std::uint32_t n, LabelMaskFn label_mask)
    : levels_(n),
      arena_(levels_.width()),
      label_mask_(std::move(label_mask)),
      buf_a_(levels_.width(), 0),
      buf_b_(levels_.width(), 0),
      ones_(levels_.width(), 1) {
    std::vector<std::int32_t> z(levels_.width(), 0);
    zero_ = arena_.single(levels_.lmax(), z.data(), z.data(), 0, 0);
}

void CompositePolicy::mask_add(std::int32_t* dst, const std::int32_t* src, Level k) const {
    const int keep = std::min(LevelSpace::index(k) + 1, width());
    for (int j = 0; j < keep; ++j) dst[j] += src[j];
}

void CompositePolicy::create_edge(C& c) {
    Data& d = c.data;
    d.cover = -1;
    d.minpath = c.key;
    d.gcover = static_cast<std::int8_t>(levels_.lmax());
    d.minglob = kNilEdge;
    d.cminus = d.cplus = -1;
    d.tree[0] = zero_;
    d.tree[1] = zero_;
}

void CompositePolicy::create_vertex(C& c) {
    Data& d = c.data;
    d.cover = d.gcover = static_cast<std::int8_t>(levels_.lmax());
    d.minpath = d.minglob = kNilEdge;
    d.cminus = d.cplus = -1;
    const std::uint64_t m = label_mask_ ? label_mask_(c.key) : 0;
    d.tree[0] = arena_.single(levels_.lmax(), ones_.data(), ones_.data(), m, m);
    d.tree[1].reset();
}

void CompositePolicy::destroy(C& c) {
    c.data.tree[0].reset();
    c.data.tree[1].reset();
}

void CompositePolicy::push_lazy(const Data& p, Data& d) {
    if (std::max(d.cover, d.cminus) <= p.cminus) d.cminus = p.cminus;
    if (d.cover <= std::max(p.cminus, p.cplus)) d.cover = d.cplus = p.cplus;
}

void CompositePolicy::split(C& c, C& a, C& b) {
    for (C* x : {&a, &b})
        if (path_child(c, *x)) push_lazy(c.data, x->data);
    c.data.tree[0].reset();
    c.data.tree[1].reset();
    c.data.cminus = c.data.cplus = -1;
}

PartTree CompositePolicy::clean_tree(const C& x, int slot) {
    const Data& d = x.data;
    const Level l = std::max(d.cminus, d.cplus);
    if (l == -1) return d.tree[slot];
    auto [lo, hi] = arena_.split(d.tree[slot], l + 1);
    if (lo.empty()) return hi;
    const PartNode* r = lo.root();
    const std::int32_t* ps = r->data() + 2 * width();
    std::fill(buf_b_.begin(), buf_b_.end(), 0);
    mask_add(buf_b_.data(), ps, d.cplus);
    PartTree node = arena_.single(d.cplus, ps, buf_b_.data(), r->pinc_sum, r->pinc_sum & LevelSpace::mask(d.cplus));
    return arena_.concat(std::move(node), std::move(hi));
}

void CompositePolicy::size_of(const C& x, PartSum& out) const {
    const PartTree& t = x.data.tree[0];
    if (t.empty()) return;
    const PartNode* r = t.root();
    const int w = width();
    for (int i = 0; i < w; ++i) out.part[i] += r->data()[2 * w + i];
    out.pinc |= r->pinc_sum;
}

void CompositePolicy::clean_sums(const C& x, int slot, CleanSums& out) const {
    const Data& d = x.data;
    const PartTree& t = d.tree[slot];
    const int w = width();
    out.all.clear();
    std::fill(out.ext.begin(), out.ext.end(), 0);
    out.ext_inc = 0;
    if (t.empty()) return;
    const PartNode* r = t.root();
    for (int i = 0; i < w; ++i) {
        out.all.part[i] = r->data()[2 * w + i];
        out.all.diag[i] = r->data()[3 * w + i];
    }
    out.all.pinc = r->pinc_sum;
    out.all.dinc = r->dinc_sum;
    const Level l = std::max(d.cminus, d.cplus);
    if (l == -1) {
        out.ext = out.all.diag;
        out.ext_inc = out.all.dinc;
        return;
    }
    PartSum lo(w), hi(w);
    arena_.add_range(t, -1, l, lo);
    arena_.add_range(t, l + 1, levels_.lmax(), hi);
    out.ext = hi.diag;
    mask_add(out.ext.data(), lo.part.data(), d.cplus);
    out.ext_inc = hi.dinc | (lo.pinc & LevelSpace::mask(d.cplus));
    // The collapsed part changes the diag total as well.
    for (int i = 0; i < w; ++i) out.all.diag[i] = out.ext[i];
    out.all.dinc = out.ext_inc;
}

std::uint64_t CompositePolicy::ext_inc(const C& x, int slot) const {
    const Data& d = x.data;
    const PartTree& t = d.tree[slot];
    if (t.empty()) return 0;
    const Level l = std::max(d.cminus, d.cplus);
    if (l == -1) return t.root()->dinc_sum;
    PartSum lo(width()), hi(width());
    arena_.add_range(t, -1, l, lo);
    arena_.add_range(t, l + 1, levels_.lmax(), hi);
    return hi.dinc | (lo.pinc & LevelSpace::mask(d.cplus));
}

// Part tree of the merged cluster seen from boundary xv of child x; y is the
// other child and c the vertex they share.
PartTree CompositePolicy::along(const C& x, std::uint32_t xv, const C& y, std::uint32_t c) {
    const int w = width();
    const Level k = x.is_path() ? x.data.cover : levels_.lmax();
    PartTree tx = x.is_path() ? clean_tree(x, x.slot_of(xv)) : x.data.tree[0];
    PartTree ty = y.is_path() ? clean_tree(y, y.slot_of(c)) : y.data.tree[0];
    auto [xlo, hix] = arena_.split(std::move(tx), k + 1);
    auto [lowy, yge] = arena_.split(std::move(ty), k);
    std::fill(buf_a_.begin(), buf_a_.end(), 0);
    std::fill(buf_b_.begin(), buf_b_.end(), 0);
    std::uint64_t pinc = 0, dinc = 0;
    if (const PartNode* nk = arena_.find(xlo, k)) {
        for (int i = 0; i < w; ++i) {
            buf_a_[i] = nk->data()[i];
            buf_b_[i] = nk->data()[w + i];
        }
        pinc = nk->pinc;
        dinc = nk->dinc;
    }
    if (!yge.empty()) {
        const PartNode* r = yge.root();
        const std::int32_t* ps = r->data() + 2 * w;
        for (int i = 0; i < w; ++i) buf_a_[i] += ps[i];
        mask_add(buf_b_.data(), ps, k);
        pinc |= r->pinc_sum;
        dinc |= r->pinc_sum & LevelSpace::mask(k);
    }
    PartTree mid = arena_.single(k, buf_a_.data(), buf_b_.data(), pinc, dinc);
    return arena_.join(std::move(lowy), std::move(mid), std::move(hix));
}

void CompositePolicy::merge(C& c, const C& a, const C& b) {
    ++merges_;
    Data& d = c.data;
    const MergeShape shape = merge_shape(c, a, b);
    int cover = kUnset, gcover = kUnset;
    std::uint32_t minpath = kNilEdge, minglob = kNilEdge;
    for (const C* x : {&a, &b}) {
        const Data& xd = x->data;
        if (shape != MergeShape::Rake) {
            if (xd.cover < cover && xd.minpath != kNilEdge) {
                cover = xd.cover;
                minpath = xd.minpath;
            }
            if (xd.gcover < gcover && xd.minglob != kNilEdge) {
                gcover = xd.gcover;
                minglob = xd.minglob;
            }
        } else {
            if (xd.cover < gcover && xd.minpath != kNilEdge) {
                gcover = xd.cover;
                minglob = xd.minpath;
            }
            if (xd.gcover < gcover && xd.minglob != kNilEdge) {
                gcover = xd.gcover;
                minglob = xd.minglob;
            }
        }
    }
    d.cover = static_cast<std::int8_t>(cover == kUnset ? levels_.lmax() : cover);
    d.gcover = static_cast<std::int8_t>(gcover == kUnset ? levels_.lmax() : gcover);
    d.minpath = minpath;
    d.minglob = minglob;
    d.cminus = d.cplus = -1;

    if (shape == MergeShape::Rake) {
        const C& p = a.is_path() ? a : b;
        const C& q = a.is_path() ? b : a;
        const int w = width();
        CleanSums s(w);
        clean_sums(p, p.slot_of(c.bnd[0]), s);
        const PartNode* qr = q.data.tree[0].root();
        mask_add(s.ext.data(), qr->data() + 2 * w, p.data.cover);
        const std::uint64_t inc = s.ext_inc | (qr->pinc_sum & LevelSpace::mask(p.data.cover));
        d.tree[0] = arena_.single(levels_.lmax(), s.ext.data(), s.ext.data(), inc, inc);
        d.tree[1].reset();
        return;
    }

    std::uint32_t common = a.bnd[0];
    if (!b.has_boundary(common)) common = a.bnd[1];
    for (int k = 0; k < c.nb; ++k) {
        const std::uint32_t xv = c.bnd[k];
        const C* x;
        if (shape == MergeShape::PathPoint && xv == common)
            x = a.is_path() ? &b : &a;
        else
            x = a.has_boundary(xv) ? &a : &b;
        const C* y = x == &a ? &b : &a;
        d.tree[k] = along(*x, xv, *y, common);
    }
    if (c.nb == 1) d.tree[1].reset();
}

}  // namespace tecc
