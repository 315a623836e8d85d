#include "tecc/part_tree.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace tecc {

namespace {

int h(const PartNode* n) { return n ? n->height : 0; }

void retain(PartNode* n) {
    if (n) ++n->rc;
}

constexpr std::size_t kBlockNodes = 256;

}  // namespace

PartArena::PartArena(int width) : width_(width) {
    std::size_t bytes = sizeof(PartNode) + 4 * sizeof(std::int32_t) * static_cast<std::size_t>(width);
    node_bytes_ = (bytes + alignof(PartNode) - 1) / alignof(PartNode) * alignof(PartNode);
}

PartArena::~PartArena() {
    for (void* b : blocks_) std::free(b);
}

PartNode* PartArena::alloc() {
    if (free_.empty()) {
        auto* block = static_cast<char*>(std::malloc(node_bytes_ * kBlockNodes));
        if (!block) throw std::bad_alloc();
        blocks_.push_back(block);
        for (std::size_t i = kBlockNodes; i-- > 0;)
            free_.push_back(reinterpret_cast<PartNode*>(block + i * node_bytes_));
    }
    PartNode* n = free_.back();
    free_.pop_back();
    n->arena = this;
    n->rc = 1;
    n->left = n->right = nullptr;
    ++live_;
    return n;
}

void PartArena::free_node(PartNode* n) {
    // Iterative release so long chains never recurse deeply.
    std::vector<PartNode*>& stack = scratch_;
    stack.assign(1, n);
    while (!stack.empty()) {
        PartNode* x = stack.back();
        stack.pop_back();
        for (PartNode* c : {x->left, x->right})
            if (c && --c->rc == 0) stack.push_back(c);
        free_.push_back(x);
        --live_;
    }
}

PartNode* PartArena::clone(const PartNode* n) {
    PartNode* c = alloc();
    c->key = n->key;
    c->height = n->height;
    c->left = n->left;
    c->right = n->right;
    retain(c->left);
    retain(c->right);
    c->pinc = n->pinc;
    c->dinc = n->dinc;
    c->pinc_sum = n->pinc_sum;
    c->dinc_sum = n->dinc_sum;
    std::memcpy(c->data(), n->data(), 4 * sizeof(std::int32_t) * static_cast<std::size_t>(width_));
    return c;
}

PartNode* PartArena::own(PartNode* n) {
    if (n->rc == 1) return n;
    PartNode* c = clone(n);
    --n->rc;
    return c;
}

void PartArena::update(PartNode* n) {
    const int w = width_;
    std::int32_t* d = n->data();
    std::int32_t* ps = d + 2 * w;
    std::int32_t* ds = d + 3 * w;
    std::memcpy(ps, d, 2 * sizeof(std::int32_t) * static_cast<std::size_t>(w));
    n->pinc_sum = n->pinc;
    n->dinc_sum = n->dinc;
    for (const PartNode* c : {n->left, n->right}) {
        if (!c) continue;
        const std::int32_t* cd = c->data();
        for (int i = 0; i < w; ++i) {
            ps[i] += cd[2 * w + i];
            ds[i] += cd[3 * w + i];
        }
        n->pinc_sum |= c->pinc_sum;
        n->dinc_sum |= c->dinc_sum;
    }
    n->height = static_cast<std::uint8_t>(1 + std::max(h(n->left), h(n->right)));
}

PartTree PartArena::single(int key, const std::int32_t* part, const std::int32_t* diag,
                           std::uint64_t pinc, std::uint64_t dinc) {
    PartNode* n = alloc();
    n->key = static_cast<std::int8_t>(key);
    std::memcpy(n->data(), part, sizeof(std::int32_t) * static_cast<std::size_t>(width_));
    std::memcpy(n->data() + width_, diag, sizeof(std::int32_t) * static_cast<std::size_t>(width_));
    n->pinc = pinc;
    n->dinc = dinc;
    update(n);
    return PartTree::adopt(n);
}

// Turns an owned reference into a childless node; the caller receives the
// former children through l and r.
PartNode* PartArena::make_single(PartNode* n) {
    if (n->rc == 1) {
        n->left = n->right = nullptr;
        update(n);
        return n;
    }
    PartNode* c = alloc();
    c->key = n->key;
    c->pinc = n->pinc;
    c->dinc = n->dinc;
    std::memcpy(c->data(), n->data(), 2 * sizeof(std::int32_t) * static_cast<std::size_t>(width_));
    --n->rc;
    update(c);
    return c;
}

PartNode* PartArena::rotate_left(PartNode* n) {
    PartNode* x = own(n->right);
    n->right = x->left;
    update(n);
    x->left = n;
    update(x);
    return x;
}

PartNode* PartArena::rotate_right(PartNode* n) {
    PartNode* x = own(n->left);
    n->left = x->right;
    update(n);
    x->right = n;
    update(x);
    return x;
}

PartNode* PartArena::join_right(PartNode* l, PartNode* m, PartNode* r) {
    l = own(l);
    PartNode* c = l->right;
    l->right = nullptr;
    if (h(c) <= h(r) + 1) {
        m->left = c;
        m->right = r;
        update(m);
        if (m->height <= h(l->left) + 1) {
            l->right = m;
            update(l);
            return l;
        }
        l->right = rotate_right(m);
        update(l);
        return rotate_left(l);
    }
    PartNode* t = join_right(c, m, r);
    l->right = t;
    update(l);
    if (t->height <= h(l->left) + 1) return l;
    return rotate_left(l);
}

PartNode* PartArena::join_left(PartNode* l, PartNode* m, PartNode* r) {
    r = own(r);
    PartNode* c = r->left;
    r->left = nullptr;
    if (h(c) <= h(l) + 1) {
        m->left = l;
        m->right = c;
        update(m);
        if (m->height <= h(r->right) + 1) {
            r->left = m;
            update(r);
            return r;
        }
        r->left = rotate_left(m);
        update(r);
        return rotate_right(r);
    }
    PartNode* t = join_left(l, m, c);
    r->left = t;
    update(r);
    if (t->height <= h(r->right) + 1) return r;
    return rotate_right(r);
}

PartNode* PartArena::join_nodes(PartNode* l, PartNode* m, PartNode* r) {
    if (h(l) > h(r) + 1) return join_right(l, m, r);
    if (h(r) > h(l) + 1) return join_left(l, m, r);
    m->left = l;
    m->right = r;
    update(m);
    return m;
}

std::pair<PartNode*, PartNode*> PartArena::split_nodes(PartNode* t, int key) {
    if (!t) return {nullptr, nullptr};
    PartNode* l = t->left;
    PartNode* r = t->right;
    if (t->rc != 1) {
        retain(l);
        retain(r);
    }
    PartNode* m = make_single(t);
    if (key <= m->key) {
        auto [a, b] = split_nodes(l, key);
        return {a, join_nodes(b, m, r)};
    }
    auto [a, b] = split_nodes(r, key);
    return {join_nodes(l, m, a), b};
}

PartNode* PartArena::split_first(PartNode* t, PartNode** first) {
    PartNode* l = t->left;
    PartNode* r = t->right;
    if (t->rc != 1) {
        retain(l);
        retain(r);
    }
    PartNode* m = make_single(t);
    if (!l) {
        *first = m;
        return r;
    }
    PartNode* rest = split_first(l, first);
    return join_nodes(rest, m, r);
}

std::pair<PartTree, PartTree> PartArena::split(PartTree t, int key) {
    auto [a, b] = split_nodes(t.detach(), key);
    return {PartTree::adopt(a), PartTree::adopt(b)};
}

PartTree PartArena::concat(PartTree a, PartTree b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const PartNode* amax = a.root();
    while (amax->right) amax = amax->right;
    const PartNode* bmin = b.root();
    while (bmin->left) bmin = bmin->left;
    if (amax->key >= bmin->key) throw std::invalid_argument("part trees overlap in key range");
    PartNode* m = nullptr;
    PartNode* rest = split_first(b.detach(), &m);
    return PartTree::adopt(join_nodes(a.detach(), m, rest));
}

PartTree PartArena::join(PartTree a, PartTree mid, PartTree b) {
    if (mid.empty()) return concat(std::move(a), std::move(b));
    PartNode* m = mid.detach();
    if (m->left || m->right) throw std::invalid_argument("join middle must be a single node");
    if (m->rc != 1) m = make_single(m);
    return PartTree::adopt(join_nodes(a.detach(), m, b.detach()));
}

void PartArena::add_node(const PartNode* n, bool subtree, PartSum& out) const {
    const int w = width_;
    const std::int32_t* d = n->data() + (subtree ? 2 * w : 0);
    for (int i = 0; i < w; ++i) {
        out.part[i] += d[i];
        out.diag[i] += d[w + i];
    }
    out.pinc |= subtree ? n->pinc_sum : n->pinc;
    out.dinc |= subtree ? n->dinc_sum : n->dinc;
}

void PartArena::add_ge(const PartNode* t, int lo, PartSum& out) const {
    while (t) {
        if (t->key >= lo) {
            add_node(t, false, out);
            if (t->right) add_node(t->right, true, out);
            t = t->left;
        } else {
            t = t->right;
        }
    }
}

void PartArena::add_le(const PartNode* t, int hi, PartSum& out) const {
    while (t) {
        if (t->key <= hi) {
            add_node(t, false, out);
            if (t->left) add_node(t->left, true, out);
            t = t->right;
        } else {
            t = t->left;
        }
    }
}

void PartArena::add_range(const PartTree& tree, int lo, int hi, PartSum& out) const {
    const PartNode* t = tree.root();
    if (lo > hi) return;
    while (t && (t->key < lo || t->key > hi)) t = t->key < lo ? t->right : t->left;
    if (!t) return;
    add_node(t, false, out);
    add_ge(t->left, lo, out);
    add_le(t->right, hi, out);
}

const PartNode* PartArena::find(const PartTree& tree, int key) const {
    const PartNode* t = tree.root();
    while (t && t->key != key) t = key < t->key ? t->left : t->right;
    return t;
}

void PartArena::for_each(const PartTree& tree, const std::function<void(const PartNode&)>& fn) const {
    std::vector<const PartNode*> stack;
    const PartNode* t = tree.root();
    while (t || !stack.empty()) {
        while (t) {
            stack.push_back(t);
            t = t->left;
        }
        t = stack.back();
        stack.pop_back();
        fn(*t);
        t = t->right;
    }
}

std::size_t PartArena::count(const PartTree& tree) const {
    std::size_t c = 0;
    for_each(tree, [&](const PartNode&) { ++c; });
    return c;
}

int PartArena::height(const PartTree& tree) const { return h(tree.root()); }

bool PartArena::validate(const PartTree& tree) const {
    const int w = width_;
    std::function<bool(const PartNode*, int, int)> rec = [&](const PartNode* n, int lo, int hi) -> bool {
        if (!n) return true;
        if (n->key <= lo || n->key >= hi) return false;
        if (!rec(n->left, lo, n->key) || !rec(n->right, n->key, hi)) return false;
        if (std::abs(h(n->left) - h(n->right)) > 1) return false;
        if (n->height != 1 + std::max(h(n->left), h(n->right))) return false;
        std::uint64_t ps = n->pinc, ds = n->dinc;
        for (int i = 0; i < w; ++i) {
            std::int64_t p = n->data()[i], d = n->data()[w + i];
            for (const PartNode* c : {n->left, n->right}) {
                if (!c) continue;
                p += c->data()[2 * w + i];
                d += c->data()[3 * w + i];
            }
            if (p != n->data()[2 * w + i] || d != n->data()[3 * w + i]) return false;
        }
        for (const PartNode* c : {n->left, n->right}) {
            if (!c) continue;
            ps |= c->pinc_sum;
            ds |= c->dinc_sum;
        }
        return ps == n->pinc_sum && ds == n->dinc_sum;
    };
    return rec(tree.root(), -1000, 1000);
}

}  // namespace tecc
