#pragma once

#include <cstdint>
#include <string>

#include "tecc/combined_forest.hpp"

namespace tecc::tools {

struct BenchRow {
    std::uint32_t n = 0;
    std::uint32_t ops = 0;
    std::uint64_t updates = 0;
    double wall_ms = 0;
    std::uint64_t merges = 0, splits = 0;
    ForestCounters calls;
};

// Runs random_workload(n, ops, seed) from an empty graph and collects counts.
BenchRow bench_once(std::uint32_t n, std::uint32_t ops, std::uint64_t seed, double query_fraction);

// Stable CSV schema; wall_ms and us_per_update are the only timing columns.
std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& r);

}  // namespace tecc::tools
