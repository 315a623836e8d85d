#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace tecc {

class PartArena;

// Node of a persistent AVL tree keyed by level. Each node carries a part
// vector and its diagonal (masked) vector, both as integer counts and as
// incidence bits, together with subtree sums of all four.
struct PartNode {
    PartArena* arena;
    std::uint32_t rc;
    std::int8_t key;
    std::uint8_t height;
    PartNode* left;
    PartNode* right;
    std::uint64_t pinc, dinc, pinc_sum, dinc_sum;

    std::int32_t* data() { return reinterpret_cast<std::int32_t*>(this + 1); }
    const std::int32_t* data() const { return reinterpret_cast<const std::int32_t*>(this + 1); }
};

// Owning, reference-counted handle to an immutable tree root.
class PartTree {
public:
    PartTree() = default;
    PartTree(const PartTree& o) : n_(o.n_) { retain(); }
    PartTree(PartTree&& o) noexcept : n_(o.n_) { o.n_ = nullptr; }
    PartTree& operator=(const PartTree& o) {
        if (n_ != o.n_) {
            PartTree tmp(o);
            std::swap(n_, tmp.n_);
        }
        return *this;
    }
    PartTree& operator=(PartTree&& o) noexcept {
        std::swap(n_, o.n_);
        return *this;
    }
    ~PartTree() { release(); }

    bool empty() const { return n_ == nullptr; }
    const PartNode* root() const { return n_; }
    void reset() {
        release();
        n_ = nullptr;
    }

    // Takes over one reference to n.
    static PartTree adopt(PartNode* n) {
        PartTree t;
        t.n_ = n;
        return t;
    }
    PartNode* detach() {
        PartNode* n = n_;
        n_ = nullptr;
        return n;
    }

    bool operator==(const PartTree& o) const { return n_ == o.n_; }

private:
    void retain() {
        if (n_) ++n_->rc;
    }
    void release();
    PartNode* n_ = nullptr;
};

// Sums accumulated over a key range.
struct PartSum {
    std::vector<std::int32_t> part, diag;
    std::uint64_t pinc = 0, dinc = 0;
    explicit PartSum(int width = 0) : part(width, 0), diag(width, 0) {}
    void clear() {
        std::fill(part.begin(), part.end(), 0);
        std::fill(diag.begin(), diag.end(), 0);
        pinc = dinc = 0;
    }
};

// Allocator and algorithms for part trees whose vectors all have the same width.
class PartArena {
public:
    explicit PartArena(int width);
    ~PartArena();
    PartArena(const PartArena&) = delete;
    PartArena& operator=(const PartArena&) = delete;

    int width() const { return width_; }

    PartTree single(int key, const std::int32_t* part, const std::int32_t* diag,
                    std::uint64_t pinc, std::uint64_t dinc);

    // (keys < key, keys >= key)
    std::pair<PartTree, PartTree> split(PartTree t, int key);
    // Requires every key of a to be below every key of b.
    PartTree concat(PartTree a, PartTree b);
    // a ++ [single node] ++ b with a < key(mid) < b.
    PartTree join(PartTree a, PartTree mid, PartTree b);

    // Adds the sums over keys in [lo, hi] into out.
    void add_range(const PartTree& t, int lo, int hi, PartSum& out) const;
    const PartNode* find(const PartTree& t, int key) const;

    void for_each(const PartTree& t, const std::function<void(const PartNode&)>& fn) const;
    std::size_t count(const PartTree& t) const;
    int height(const PartTree& t) const;
    // Checks ordering, balance and subtree sums. Returns false on any violation.
    bool validate(const PartTree& t) const;

    std::size_t live_nodes() const { return live_; }

    void free_node(PartNode* n);

private:
    PartNode* alloc();
    PartNode* clone(const PartNode* n);
    PartNode* own(PartNode* n);
    void update(PartNode* n);
    PartNode* make_single(PartNode* n);
    PartNode* join_nodes(PartNode* l, PartNode* m, PartNode* r);
    PartNode* join_right(PartNode* l, PartNode* m, PartNode* r);
    PartNode* join_left(PartNode* l, PartNode* m, PartNode* r);
    PartNode* rotate_left(PartNode* n);
    PartNode* rotate_right(PartNode* n);
    std::pair<PartNode*, PartNode*> split_nodes(PartNode* t, int key);
    PartNode* split_first(PartNode* t, PartNode** first);
    void add_node(const PartNode* n, bool subtree, PartSum& out) const;
    void add_ge(const PartNode* t, int lo, PartSum& out) const;
    void add_le(const PartNode* t, int hi, PartSum& out) const;

    int width_;
    std::size_t node_bytes_;
    std::vector<PartNode*> free_;
    std::vector<PartNode*> scratch_;
    std::vector<void*> blocks_;
    std::size_t live_ = 0;
};

inline void PartTree::release() {
    if (n_ && --n_->rc == 0) n_->arena->free_node(n_);
}

}  // namespace tecc
