#pragma once

#include <cstdint>
#include <stdexcept>

namespace tecc {

// Levels range over -1..lmax. Vectors indexed by level store entry l at index l + 1.
using Level = int;

inline int floor_log2(std::uint64_t n) {
    int r = -1;
    while (n) {
        n >>= 1;
        ++r;
    }
    return r;
}

class LevelSpace {
public:
    explicit LevelSpace(std::uint32_t n) {
        if (n == 0) throw std::invalid_argument("vertex count must be positive");
        lmax_ = floor_log2(n);
        if (lmax_ + 2 > 64) throw std::invalid_argument("vertex count too large");
    }

    Level lmax() const { return lmax_; }
    // Number of vector entries: one per level -1..lmax.
    int width() const { return lmax_ + 2; }
    static int index(Level l) { return l + 1; }

    // Bit mask of M(k): entries with level <= k survive.
    static std::uint64_t mask(Level k) {
        int keep = k + 2;
        if (keep <= 0) return 0;
        if (keep >= 64) return ~std::uint64_t{0};
        return (std::uint64_t{1} << keep) - 1;
    }
    static std::uint64_t bit(Level l) { return std::uint64_t{1} << index(l); }

private:
    Level lmax_ = 0;
};

}  // namespace tecc
