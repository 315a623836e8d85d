#include "bench.hpp"

#include <chrono>
#include <fmt/format.h>

#include "ops.hpp"

namespace tecc::tools {

BenchRow bench_once(std::uint32_t n, std::uint32_t ops, std::uint64_t seed, double query_fraction) {
    const auto work = random_workload({.n = n, .ops = ops, .seed = seed, .query_fraction = query_fraction});
    Session s(n);
    BenchRow r;
    r.n = n;
    r.ops = ops;
    const auto t0 = std::chrono::steady_clock::now();
    for (const Op& op : work) {
        s.apply(op);
        r.updates += !is_query(op.kind);
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const auto& st = s.structure().forest().tree().stats();
    r.merges = st.merges;
    r.splits = st.splits;
    r.calls = s.structure().forest().counters();
    return r;
}

std::string bench_csv_header() {
    return "n,ops,updates,wall_ms,us_per_update,merges,splits,merges_splits_per_update,"
           "link,cut,connected,cover,uncover,cover_level,add_label,remove_label,find_first_label,find_size";
}

std::string bench_csv_row(const BenchRow& r) {
    const double per = r.updates ? 1.0 / static_cast<double>(r.updates) : 0.0;
    const auto& c = r.calls;
    return fmt::format("{},{},{},{:.3f},{:.3f},{},{},{:.2f},{},{},{},{},{},{},{},{},{},{}", r.n, r.ops, r.updates,
                       r.wall_ms, r.wall_ms * 1000.0 * per, r.merges, r.splits,
                       static_cast<double>(r.merges + r.splits) * per, c.link, c.cut, c.connected, c.cover,
                       c.uncover, c.cover_level, c.add_label, c.remove_label, c.find_first_label, c.find_size);
}

}  // namespace tecc::tools
