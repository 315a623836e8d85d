#pragma once

#include <cstdint>
#include <vector>

#include "tecc/oracle.hpp"

namespace tecc {

enum class MatchingDetail {
    Unique,
    OddComponent,     // some component has odd size: no perfect matching
    BridgelessPart,   // a remaining component has no bridge: zero or several matchings
};

struct MatchingVerdict {
    bool unique = false;
    MatchingDetail detail = MatchingDetail::Unique;
    std::vector<std::uint32_t> matching;  // input edge indices, ascending; empty unless unique
};

// Unique perfect matching by repeated bridge deletion on the dynamic
// structure. Parallel edges are distinct, so a doubled edge is never unique.
MatchingVerdict unique_perfect_matching(const oracle::Snapshot& g);

struct MatchingCount {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> first;  // edge indices of the first matching found
};

// Exact count of perfect matchings by backtracking; n <= 16.
MatchingCount enumerate_perfect_matchings(const oracle::Snapshot& g);

}  // namespace tecc
