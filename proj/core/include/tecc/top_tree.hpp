#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tecc {

enum class ClusterKind : std::uint8_t { Edge, Vertex, Composite };

// A top-tree cluster. Path clusters have two boundary vertices (nb == 2),
// point clusters have one. Payload lives in data and is maintained only
// through the policy callbacks.
template <class Data>
struct Cluster {
    std::uint32_t bnd[2] = {0, 0};
    std::uint8_t nb = 0;
    ClusterKind kind = ClusterKind::Composite;
    bool valid = false;
    Cluster* child[2] = {nullptr, nullptr};
    Cluster* parent = nullptr;
    // Edge leaves: the key given to link. Vertex leaves: the vertex id.
    std::uint32_t key = 0;
    Data data{};

    bool is_path() const { return nb == 2; }
    bool is_leaf() const { return kind != ClusterKind::Composite; }
    bool has_boundary(std::uint32_t v) const { return bnd[0] == v || (nb == 2 && bnd[1] == v); }
    // The boundary vertex other than v (path clusters only).
    std::uint32_t other(std::uint32_t v) const { return bnd[0] == v ? bnd[1] : bnd[0]; }
    int slot_of(std::uint32_t v) const { return bnd[0] == v ? 0 : 1; }
};

struct EdgeHandle {
    std::uint32_t idx = ~0u;
    std::uint32_t gen = 0;
    bool valid() const { return idx != ~0u; }
    friend bool operator==(const EdgeHandle&, const EdgeHandle&) = default;
};

struct TopTreeStats {
    std::uint64_t merges = 0;
    std::uint64_t splits = 0;
    std::uint64_t creates = 0;
    std::uint64_t destroys = 0;
    std::uint64_t links = 0;
    std::uint64_t cuts = 0;
    std::uint64_t exposes = 0;
    std::uint64_t vertex_updates = 0;
};

// Self-adjusting top tree. Preferred paths of the forest (with every edge
// subdivided by an edge node) are kept in splay trees as in link-cut trees.
// Every splay node owns a few composite clusters built from its splay
// children, the vertices adjacent to it and the rake structures of those
// vertices. A rake structure S(v) is a complete binary tree of point
// clusters at v: the vertex leaf plus one cluster per light path hanging
// from v. Composite shapes never depend on path orientation, so everting a
// path only flips lazy reversal bits.
//
// Policy must provide:
//   using Data;
//   void create_edge(Cluster<Data>&);    // path leaf, key set
//   void create_vertex(Cluster<Data>&);  // point leaf, key = vertex
//   void destroy(Cluster<Data>&);
//   void merge(Cluster<Data>& c, const Cluster<Data>& a, const Cluster<Data>& b);
//   void split(Cluster<Data>& c, Cluster<Data>& a, Cluster<Data>& b);
template <class Policy>
class TopTree {
public:
    using Data = typename Policy::Data;
    using C = Cluster<Data>;

    TopTree(std::uint32_t n, Policy& policy) : n_(n), policy_(policy) {
        if (n == 0) throw std::invalid_argument("forest needs at least one vertex");
        rakes_.resize(n);
        for (std::uint32_t v = 0; v < n; ++v) {
            Node& x = nodes_.emplace_back();
            init_node(x, v, false);
            x.ends[0] = x.ends[1] = v;
        }
    }

    ~TopTree() {
        for (Node& x : nodes_) {
            if (x.is_edge && x.alive) policy_.destroy(x.leaf);
            if (!x.is_edge && rakes_[x.idx].has_leaf) policy_.destroy(x.leaf);
        }
    }

    TopTree(const TopTree&) = delete;
    TopTree& operator=(const TopTree&) = delete;

    std::uint32_t size() const { return n_; }
    const TopTreeStats& stats() const { return stats_; }
    void reset_stats() { stats_ = {}; }

    bool has_leaf(std::uint32_t v) const { return rakes_.at(v).has_leaf; }

    // Makes sure v has a vertex leaf so it can be exposed on its own.
    void ensure_leaf(std::uint32_t v) {
        check_vertex(v);
        Rake& r = rakes_[v];
        if (r.has_leaf) return;
        Node& x = nodes_[v];
        x.leaf.kind = ClusterKind::Vertex;
        x.leaf.nb = 1;
        x.leaf.bnd[0] = x.leaf.bnd[1] = v;
        x.leaf.key = v;
        x.leaf.parent = nullptr;
        policy_.create_vertex(x.leaf);
        x.leaf.valid = true;
        ++stats_.creates;
        r.has_leaf = true;
        rake_add(v, kLeafRef);
        // v could be inside a larger tree only if it had edges, which would
        // have created the leaf already; so v is an isolated root here.
        build_path(&x);
    }

    EdgeHandle link(std::uint32_t u, std::uint32_t v, std::uint32_t key) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("link: self-loop");
        ensure_leaf(u);
        ensure_leaf(v);
        if (connected(u, v)) throw std::logic_error("link: vertices already connected");
        ++stats_.links;
        Node* U = &nodes_[u];
        Node* V = &nodes_[v];
        evert(U);
        access(V);
        Node* e = alloc_edge();
        e->ends[0] = v;
        e->ends[1] = u;
        e->up = 0;
        e->leaf.kind = ClusterKind::Edge;
        e->leaf.nb = 2;
        e->leaf.bnd[0] = v;
        e->leaf.bnd[1] = u;
        e->leaf.key = key;
        e->leaf.parent = nullptr;
        policy_.create_edge(e->leaf);
        e->leaf.valid = true;
        ++stats_.creates;
        e->ch[1] = U;
        U->p = e;
        pull(e);
        e->p = V;
        rake_add(v, static_cast<std::int32_t>(e->idx));
        build_path(V);
        last_root_ = V;
        return {e->idx, e->gen};
    }

    void cut(EdgeHandle h) {
        Node* e = edge_node(h);
        ++stats_.cuts;
        const std::uint32_t a = e->ends[0], b = e->ends[1];
        Node* A = &nodes_[a];
        Node* B = &nodes_[b];
        evert(A);
        access(B);
        push(B);
        Node* l = B->ch[0];
        B->ch[0] = nullptr;
        pull(B);
        l->p = nullptr;
        splay(e);
        Node* a_side = e->ch[0];
        a_side->p = nullptr;
        e->ch[0] = nullptr;
        pull(e);
        split_above(&e->leaf);
        policy_.destroy(e->leaf);
        ++stats_.destroys;
        free_edge(e);
        build_path(A);
        build_path(B);
        last_root_ = B;
    }

    // True iff u and v are in the same tree. Walks parent pointers only.
    bool connected(std::uint32_t u, std::uint32_t v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return true;
        if (!rakes_[u].has_leaf || !rakes_[v].has_leaf) return false;
        return top_of(u) == top_of(v);
    }

    // Root cluster of the tree containing v, or nullptr for a bare vertex.
    const C* top_of(std::uint32_t v) const {
        check_vertex(v);
        if (!rakes_[v].has_leaf) return nullptr;
        const C* c = &nodes_[v].leaf;
        while (c->parent) c = c->parent;
        return c;
    }

    // Point-cluster root with boundary {v}; nullptr when v has no leaf and no edges.
    C* expose(std::uint32_t v) {
        check_vertex(v);
        ++stats_.exposes;
        if (!rakes_[v].has_leaf) return nullptr;
        Node* V = &nodes_[v];
        if (is_root(V) && !V->p && V->cnt == 1 && !V->dirty) {
            C* s = rake_root(v);
            if (s && s->valid && !s->parent) {
                last_root_ = V;
                return s;
            }
        }
        evert(V);
        access(V);
        last_root_ = V;
        return build_path(V);
    }

    // Path-cluster root with boundary {v, w}; nullptr when not connected.
    C* expose(std::uint32_t v, std::uint32_t w) {
        if (v == w) return expose(v);
        check_vertex(v);
        check_vertex(w);
        ++stats_.exposes;
        if (!rakes_[v].has_leaf || !rakes_[w].has_leaf) return nullptr;
        Node* V = &nodes_[v];
        Node* W = &nodes_[w];
        for (Node* x : {V, W}) {
            if (!x->p && is_root(x) && x->fin[1].valid && !x->fin[1].parent &&
                ((x->first == V && x->last == W) || (x->first == W && x->last == V))) {
                last_root_ = x;
                return &x->fin[1];
            }
        }
        evert(V);
        access(W);
        const bool conn = W->first == V;
        C* top = build_path(W);
        last_root_ = W;
        if (!conn) {
            build_path(V);
            return nullptr;
        }
        return top;
    }

    // Recomputes the vertex leaf of v through fn and re-merges its ancestors.
    template <class Fn>
    void update_vertex(std::uint32_t v, Fn&& fn) {
        check_vertex(v);
        ensure_leaf(v);
        ++stats_.vertex_updates;
        Node* V = &nodes_[v];
        access(V);
        split_above(&V->leaf);
        fn(V->leaf);
        build_path(V);
        last_root_ = V;
    }

    // Destructive descent support: split a current root composite. Children
    // become roots. restore() re-merges everything split since the last
    // expose.
    void split_root(C* c) {
        if (!c || !c->valid || c->parent || c->kind != ClusterKind::Composite)
            throw std::logic_error("split_root: not a composite root");
        split(c);
    }
    C* restore() { return last_root_ ? build_path(last_root_) : nullptr; }

    // All current tree roots (one per tree containing a leaf).
    std::vector<const C*> tops() const {
        std::vector<const C*> out;
        for (std::uint32_t v = 0; v < n_; ++v) {
            const C* t = top_of(v);
            if (t && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
        }
        return out;
    }

    // Depth-first walk over a cluster subtree; fn(cluster, depth).
    template <class Fn>
    static void walk(const C* c, Fn&& fn, int depth = 0) {
        if (!c) return;
        fn(*c, depth);
        if (c->kind == ClusterKind::Composite) {
            walk(c->child[0], fn, depth + 1);
            walk(c->child[1], fn, depth + 1);
        }
    }

    // Largest root-to-leaf distance over all trees.
    int height() const {
        int h = 0;
        for (const C* t : tops()) walk(t, [&](const C&, int d) { h = std::max(h, d); });
        return h;
    }

    bool edge_alive(EdgeHandle h) const {
        return h.idx >= n_ && h.idx < nodes_.size() && nodes_[h.idx].alive && nodes_[h.idx].gen == h.gen;
    }
    const C& edge_leaf(EdgeHandle h) const { return edge_node(h)->leaf; }
    const C& vertex_leaf(std::uint32_t v) const {
        check_vertex(v);
        return nodes_[v].leaf;
    }

private:
    static constexpr std::int32_t kLeafRef = -1;
    enum class Mode { Keep, Rake };

    struct Node {
        Node* ch[2] = {nullptr, nullptr};
        Node* p = nullptr;
        Node* first = nullptr;
        Node* last = nullptr;
        C* out = nullptr;
        std::uint32_t idx = 0;
        std::uint32_t gen = 0;
        std::uint32_t ends[2] = {0, 0};
        std::uint32_t cnt = 1;
        std::int32_t slot = -1;
        bool is_edge = false;
        bool rev = false;
        bool dirty = true;
        bool alive = true;
        std::uint8_t up = 0;
        C leaf;
        // Vertex nodes: comp[0] = near child + S(v), comp[1] = that + far child.
        // Edge nodes: comp[0], comp[1] = side clusters toward ends[0], ends[1];
        // comp[2] = side0 + edge, comp[3] = (.. + edge) + side1.
        C comp[4];
        // Light path root: fin[0] = path raked onto its head vertex.
        // Root path root: fin[0] = path + S(end a), fin[1] = fin[0] + S(end b).
        C fin[2];
    };

    struct Rake {
        std::vector<std::int32_t> slots;
        std::vector<std::unique_ptr<C>> inner;
        std::uint32_t k = 0;
        std::int32_t leaf_slot = -1;
        bool has_leaf = false;
    };

    void check_vertex(std::uint32_t v) const {
        if (v >= n_) throw std::out_of_range("vertex id out of range");
    }

    Node* edge_node(EdgeHandle h) {
        if (!edge_alive(h)) throw std::invalid_argument("stale or invalid edge handle");
        return &nodes_[h.idx];
    }
    const Node* edge_node(EdgeHandle h) const {
        if (!edge_alive(h)) throw std::invalid_argument("stale or invalid edge handle");
        return &nodes_[h.idx];
    }

    void init_node(Node& x, std::uint32_t idx, bool edge) {
        x.ch[0] = x.ch[1] = x.p = nullptr;
        x.first = x.last = &x;
        x.out = nullptr;
        x.idx = idx;
        x.cnt = 1;
        x.slot = -1;
        x.is_edge = edge;
        x.rev = false;
        x.dirty = true;
        x.alive = true;
        x.up = 0;
    }

    Node* alloc_edge() {
        Node* e;
        if (!free_edges_.empty()) {
            e = &nodes_[free_edges_.back()];
            free_edges_.pop_back();
        } else {
            e = &nodes_.emplace_back();
            e->idx = static_cast<std::uint32_t>(nodes_.size() - 1);
        }
        init_node(*e, e->idx, true);
        return e;
    }

    void free_edge(Node* e) {
        e->alive = false;
        ++e->gen;
        e->ch[0] = e->ch[1] = e->p = nullptr;
        e->out = nullptr;
        free_edges_.push_back(e->idx);
    }

    // ---- splay machinery -------------------------------------------------

    static bool is_root(const Node* x) { return !x->p || (x->p->ch[0] != x && x->p->ch[1] != x); }

    static void apply_rev(Node* x) {
        if (!x) return;
        std::swap(x->ch[0], x->ch[1]);
        std::swap(x->first, x->last);
        if (x->is_edge) x->up ^= 1;
        x->rev = !x->rev;
    }

    static void push(Node* x) {
        if (x->rev) {
            apply_rev(x->ch[0]);
            apply_rev(x->ch[1]);
            x->rev = false;
        }
    }

    static void pull(Node* x) {
        x->cnt = 1;
        x->first = x->last = x;
        if (x->ch[0]) {
            x->cnt += x->ch[0]->cnt;
            x->first = x->ch[0]->first;
        }
        if (x->ch[1]) {
            x->cnt += x->ch[1]->cnt;
            x->last = x->ch[1]->last;
        }
    }

    void rotate(Node* x) {
        Node* y = x->p;
        Node* z = y->p;
        const int dx = y->ch[1] == x;
        if (!is_root(y)) z->ch[z->ch[1] == y] = x;
        x->p = z;
        y->ch[dx] = x->ch[!dx];
        if (y->ch[dx]) y->ch[dx]->p = y;
        x->ch[!dx] = y;
        y->p = x;
        pull(y);
        pull(x);
    }

    // Splits every composite of x together with all of its ancestors.
    void touch(Node* x) {
        x->dirty = true;
        for (C* c : {&x->fin[1], &x->fin[0], &x->comp[3], &x->comp[2], &x->comp[1], &x->comp[0]})
            if (c->valid) split_up(c);
    }

    void splay(Node* x) {
        path_.clear();
        for (Node* y = x;; y = y->p) {
            path_.push_back(y);
            if (is_root(y)) break;
        }
        Node* root = path_.back();
        for (auto it = path_.rbegin(); it != path_.rend(); ++it) push(*it);
        for (auto it = path_.rbegin(); it != path_.rend(); ++it) touch(*it);
        const std::int32_t slot = root->slot;
        while (!is_root(x)) {
            Node* y = x->p;
            if (!is_root(y)) {
                Node* z = y->p;
                rotate((z->ch[0] == y) == (y->ch[0] == x) ? y : x);
            }
            rotate(x);
        }
        if (root != x && slot >= 0) {
            Rake& r = rakes_[x->p->idx];
            r.slots[slot] = static_cast<std::int32_t>(x->idx);
            x->slot = slot;
            root->slot = -1;
        }
    }

    void access(Node* w) {
        Node* last = nullptr;
        for (Node* y = w; y;) {
            splay(y);
            const std::uint32_t v = y->idx;
            Node* r = y->ch[1];
            if (r) rake_add(v, static_cast<std::int32_t>(r->idx));
            if (last) rake_remove(v, static_cast<std::int32_t>(last->idx));
            y->ch[1] = last;
            pull(y);
            last = y;
            y = y->p;
        }
        splay(w);
    }

    void evert(Node* v) {
        access(v);
        apply_rev(v);
    }

    // ---- cluster bookkeeping ---------------------------------------------

    void merge(C* c, C* a, C* b, Mode mode) {
        std::uint32_t common = 0;
        bool found = false;
        for (int i = 0; i < a->nb && !found; ++i)
            for (int j = 0; j < b->nb && !found; ++j)
                if (a->bnd[i] == b->bnd[j]) {
                    common = a->bnd[i];
                    found = true;
                }
        if (!found) throw std::logic_error("merge: clusters share no boundary vertex");
        if (a->nb == 2 && b->nb == 2) {
            c->nb = 2;
            c->bnd[0] = a->other(common);
            c->bnd[1] = b->other(common);
        } else if (a->nb == 1 && b->nb == 1) {
            c->nb = 1;
            c->bnd[0] = c->bnd[1] = common;
        } else {
            const C* path = a->nb == 2 ? a : b;
            if (mode == Mode::Keep) {
                c->nb = 2;
                c->bnd[0] = path->bnd[0];
                c->bnd[1] = path->bnd[1];
            } else {
                c->nb = 1;
                c->bnd[0] = c->bnd[1] = path->other(common);
            }
        }
        c->kind = ClusterKind::Composite;
        c->child[0] = a;
        c->child[1] = b;
        a->parent = c;
        b->parent = c;
        policy_.merge(*c, *a, *b);
        c->valid = true;
        ++stats_.merges;
    }

    void split(C* c) {
        C* a = c->child[0];
        C* b = c->child[1];
        policy_.split(*c, *a, *b);
        a->parent = nullptr;
        b->parent = nullptr;
        c->child[0] = c->child[1] = nullptr;
        c->valid = false;
        ++stats_.splits;
    }

    // Splits c and all of its ancestors, top-down.
    void split_up(C* c) {
        chain_.clear();
        for (C* x = c; x; x = x->parent) chain_.push_back(x);
        for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) split(*it);
    }

    void split_above(C* c) {
        if (c && c->parent) split_up(c->parent);
    }

    // ---- rake structures -------------------------------------------------

    C* item_cluster(std::uint32_t v, std::int32_t ref) {
        return ref == kLeafRef ? &nodes_[v].leaf : &nodes_[static_cast<std::uint32_t>(ref)].fin[0];
    }

    void set_slot(std::uint32_t v, std::int32_t ref, std::int32_t pos) {
        if (ref == kLeafRef)
            rakes_[v].leaf_slot = pos;
        else
            nodes_[static_cast<std::uint32_t>(ref)].slot = pos;
    }

    C* rake_root(std::uint32_t v) {
        Rake& r = rakes_[v];
        if (r.k == 0) return nullptr;
        if (r.k == 1) return item_cluster(v, r.slots[1]);
        return r.inner[1].get();
    }

    // Splits the rake composites above position pos and everything above S(v).
    void dissolve_rake_path(std::uint32_t v, std::uint32_t pos) {
        Rake& r = rakes_[v];
        if (r.k == 1) {
            split_above(item_cluster(v, r.slots[1]));
            return;
        }
        for (std::uint32_t q = pos / 2; q >= 1; q /= 2) {
            if (r.inner[q]->valid) {
                split_up(r.inner[q].get());
                return;
            }
        }
    }

    void rake_add(std::uint32_t v, std::int32_t ref) {
        Rake& r = rakes_[v];
        if (r.k == 0) {
            r.slots.assign(2, 0);
            r.slots[1] = ref;
            set_slot(v, ref, 1);
            r.k = 1;
            return;
        }
        const std::uint32_t k = r.k;
        dissolve_rake_path(v, k);
        r.slots.resize(2 * (k + 1));
        const std::int32_t moved = r.slots[k];
        r.slots[2 * k] = moved;
        set_slot(v, moved, static_cast<std::int32_t>(2 * k));
        r.slots[2 * k + 1] = ref;
        set_slot(v, ref, static_cast<std::int32_t>(2 * k + 1));
        if (r.inner.size() <= k) r.inner.resize(k + 1);
        if (!r.inner[k]) r.inner[k] = std::make_unique<C>();
        r.k = k + 1;
    }

    void rake_remove(std::uint32_t v, std::int32_t ref) {
        Rake& r = rakes_[v];
        const std::uint32_t pos = static_cast<std::uint32_t>(
            ref == kLeafRef ? r.leaf_slot : nodes_[static_cast<std::uint32_t>(ref)].slot);
        const std::uint32_t k = r.k;
        if (k == 1) {
            split_above(item_cluster(v, r.slots[1]));
            r.k = 0;
            r.slots.clear();
            set_slot(v, ref, -1);
            return;
        }
        dissolve_rake_path(v, pos);
        const std::uint32_t lastpos = 2 * k - 1;
        dissolve_rake_path(v, lastpos);
        if (pos != lastpos) {
            r.slots[pos] = r.slots[lastpos];
            set_slot(v, r.slots[pos], static_cast<std::int32_t>(pos));
        }
        const std::int32_t sib = r.slots[2 * k - 2];
        r.slots[k - 1] = sib;
        set_slot(v, sib, static_cast<std::int32_t>(k - 1));
        r.k = k - 1;
        r.slots.resize(2 * r.k);
        set_slot(v, ref, -1);
    }

    // ---- rebuilding --------------------------------------------------------

    C* build_rake(std::uint32_t v) {
        if (rakes_[v].k == 0) return nullptr;
        return build_pos(v, 1);
    }

    C* build_pos(std::uint32_t v, std::uint32_t q) {
        Rake& r = rakes_[v];
        if (q >= r.k) {
            const std::int32_t ref = r.slots[q];
            if (ref == kLeafRef) return &nodes_[v].leaf;
            return build_path(&nodes_[static_cast<std::uint32_t>(ref)]);
        }
        C* c = r.inner[q].get();
        if (c->valid) return c;
        C* a = build_pos(v, 2 * q);
        C* b = build_pos(v, 2 * q + 1);
        merge(c, a, b, Mode::Keep);
        return c;
    }

    // Returns the cluster of a whole preferred path whose splay root is x.
    C* build_path(Node* x) {
        if (!x->p) {
            if (x->fin[1].valid) return &x->fin[1];
            C* o = build_node(x);
            if (!o) return build_rake(x->first->idx);
            const std::uint32_t a = std::min(x->first->idx, x->last->idx);
            const std::uint32_t b = std::max(x->first->idx, x->last->idx);
            C* f0 = &x->fin[0];
            if (!f0->valid) merge(f0, o, build_rake(a), Mode::Keep);
            C* f1 = &x->fin[1];
            merge(f1, f0, build_rake(b), Mode::Keep);
            return f1;
        }
        C* f = &x->fin[0];
        if (f->valid) return f;
        C* o = build_node(x);
        merge(f, o, build_rake(x->last->idx), Mode::Rake);
        return f;
    }

    // Cluster of the splay subtree of x, excluding S() of end vertices.
    C* build_node(Node* x) {
        if (!x->dirty && (!x->out || x->out->valid)) return x->out;
        Node* c0 = x->ch[0];
        Node* c1 = x->ch[1];
        C* o0 = c0 ? build_node(c0) : nullptr;
        C* o1 = c1 ? build_node(c1) : nullptr;
        if (!x->is_edge) {
            if (c0 && c1) {
                const bool swap = c1->idx < c0->idx;
                C* oa = swap ? o1 : o0;
                C* ob = swap ? o0 : o1;
                C* y1 = &x->comp[0];
                if (!y1->valid) merge(y1, oa, build_rake(x->idx), Mode::Keep);
                C* y2 = &x->comp[1];
                if (!y2->valid) merge(y2, y1, ob, Mode::Keep);
                x->out = y2;
            } else {
                x->out = c0 ? o0 : o1;
            }
        } else {
            Node* adj[2];
            adj[x->up] = c0;
            adj[1 - x->up] = c1;
            C* side[2] = {nullptr, nullptr};
            for (int j = 0; j < 2; ++j) {
                Node* c = adj[j];
                if (!c || c->cnt == 1) continue;
                C* o = c == c0 ? o0 : o1;
                C* s = &x->comp[j];
                if (!s->valid) merge(s, o, build_rake(x->ends[j]), Mode::Keep);
                side[j] = s;
            }
            C* cur = &x->leaf;
            if (side[0]) {
                C* m = &x->comp[2];
                if (!m->valid) merge(m, side[0], cur, Mode::Keep);
                cur = m;
            }
            if (side[1]) {
                C* m = &x->comp[3];
                if (!m->valid) merge(m, cur, side[1], Mode::Keep);
                cur = m;
            }
            x->out = cur;
        }
        x->dirty = false;
        return x->out;
    }

    std::uint32_t n_;
    Policy& policy_;
    std::deque<Node> nodes_;
    std::vector<Rake> rakes_;
    std::vector<std::uint32_t> free_edges_;
    std::vector<Node*> path_;
    std::vector<C*> chain_;
    Node* last_root_ = nullptr;
    TopTreeStats stats_;
};

}  // namespace tecc
