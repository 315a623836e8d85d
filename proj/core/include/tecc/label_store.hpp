#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tecc/levels.hpp"

namespace tecc {

struct LabelHandle {
    std::uint32_t idx = ~0u;
    std::uint32_t gen = 0;
    bool valid() const { return idx != ~0u; }
    friend bool operator==(const LabelHandle&, const LabelHandle&) = default;
};

// Per-vertex, per-level buckets of user labels. Buckets are intrusive doubly
// linked lists; a bit mask per vertex records which buckets are nonempty.
class LabelStore {
public:
    LabelStore(std::uint32_t n, int levels) : n_(n), levels_(levels) {
        if (levels > 62) throw std::invalid_argument("too many label levels");
        heads_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(levels), kNil);
        masks_.assign(n, 0);
    }

    LabelHandle add(std::uint32_t v, Level level, std::uint64_t payload) {
        if (v >= n_) throw std::out_of_range("label vertex out of range");
        if (level < 0 || level >= levels_) throw std::out_of_range("label level out of range");
        std::uint32_t id;
        if (!free_.empty()) {
            id = free_.back();
            free_.pop_back();
        } else {
            id = static_cast<std::uint32_t>(entries_.size());
            entries_.emplace_back();
        }
        Entry& e = entries_[id];
        e.vertex = v;
        e.level = level;
        e.payload = payload;
        e.alive = true;
        e.prev = kNil;
        std::uint32_t& head = heads_[slot(v, level)];
        e.next = head;
        if (head != kNil) entries_[head].prev = id;
        head = id;
        masks_[v] |= LevelSpace::bit(level);
        ++live_;
        return {id, e.gen};
    }

    void remove(LabelHandle h) {
        Entry& e = entry(h);
        std::uint32_t& head = heads_[slot(e.vertex, e.level)];
        if (e.prev != kNil)
            entries_[e.prev].next = e.next;
        else
            head = e.next;
        if (e.next != kNil) entries_[e.next].prev = e.prev;
        if (head == kNil) masks_[e.vertex] &= ~LevelSpace::bit(e.level);
        e.alive = false;
        ++e.gen;
        free_.push_back(h.idx);
        --live_;
    }

    bool alive(LabelHandle h) const {
        return h.idx < entries_.size() && entries_[h.idx].alive && entries_[h.idx].gen == h.gen;
    }

    // Bit LevelSpace::bit(i) is set iff v has a label at level i.
    std::uint64_t mask(std::uint32_t v) const { return masks_.at(v); }

    std::optional<LabelHandle> head(std::uint32_t v, Level level) const {
        const std::uint32_t id = heads_[slot(v, level)];
        if (id == kNil) return std::nullopt;
        return LabelHandle{id, entries_[id].gen};
    }

    std::uint64_t payload(LabelHandle h) const { return entry(h).payload; }
    std::uint32_t vertex(LabelHandle h) const { return entry(h).vertex; }
    Level level(LabelHandle h) const { return entry(h).level; }

    std::size_t live() const { return live_; }
    std::size_t bucket_size(std::uint32_t v, Level level) const {
        std::size_t c = 0;
        for (std::uint32_t id = heads_[slot(v, level)]; id != kNil; id = entries_[id].next) ++c;
        return c;
    }

private:
    static constexpr std::uint32_t kNil = ~0u;
    struct Entry {
        std::uint64_t payload = 0;
        std::uint32_t prev = kNil, next = kNil;
        std::uint32_t vertex = 0;
        std::uint32_t gen = 0;
        Level level = 0;
        bool alive = false;
    };

    std::size_t slot(std::uint32_t v, Level level) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(levels_) + static_cast<std::size_t>(level);
    }
    Entry& entry(LabelHandle h) {
        if (!alive(h)) throw std::invalid_argument("stale or invalid label handle");
        return entries_[h.idx];
    }
    const Entry& entry(LabelHandle h) const {
        if (!alive(h)) throw std::invalid_argument("stale or invalid label handle");
        return entries_[h.idx];
    }

    std::uint32_t n_;
    int levels_;
    std::vector<std::uint32_t> heads_;
    std::vector<std::uint64_t> masks_;
    std::vector<Entry> entries_;
    std::vector<std::uint32_t> free_;
    std::size_t live_ = 0;
};

}  // namespace tecc
