#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tecc/bridge_connectivity.hpp"
#include "tecc/oracle.hpp"

namespace tecc::tools {

enum class OpKind { Insert, Delete, DeleteId, Conn, TwoConn, Bridge, Bridge2, Size, TwoSize };

struct Op {
    OpKind kind = OpKind::Conn;
    std::uint32_t a = 0, b = 0;
};

bool is_query(OpKind k);
std::string_view op_name(OpKind k);
int arity(OpKind k);
std::string format_op(const Op& op);

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

struct OpFile {
    std::uint32_t n = 0;
    std::vector<Op> ops;
    std::vector<std::size_t> lines;  // source line per op
};

// Header "n <count>", then one op per line. Blank lines and '#' comments are skipped.
OpFile parse_op_file(std::istream& in);
std::string format_op_file(const OpFile& f);

struct GraphFile {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};
// "n m" followed by m lines "u v".
GraphFile parse_graph_file(std::istream& in);

struct Answer {
    bool flag = false;
    std::uint32_t count = 0;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> edge;
    std::optional<EdgeId> edge_id;
    bool error = false;  // bridge2 on a disconnected pair
};

// "<op> <args> -> <answer>"
std::string format_answer(const Op& op, const Answer& a);

struct Step {
    std::optional<Answer> answer;  // queries only
    EdgeId edge = ~0u;             // edge inserted or deleted
};

// Replays ops on the dynamic structure. Edge ids equal insertion order.
class Session {
public:
    explicit Session(std::uint32_t n) : bc_(n) {}
    // Throws std::invalid_argument for a delete of a missing edge and
    // std::out_of_range for a vertex >= n.
    Step apply(const Op& op);
    BridgeConnectivity& structure() { return bc_; }

private:
    BridgeConnectivity bc_;
};

// Reference graph answering every query from scratch.
class Model {
public:
    explicit Model(std::uint32_t n) : n_(n) {}
    std::uint32_t size() const { return n_; }
    void insert(EdgeId id, std::uint32_t u, std::uint32_t v);
    void erase(EdgeId id);
    bool alive(EdgeId id) const { return id < ends_.size() && alive_[id]; }
    std::pair<std::uint32_t, std::uint32_t> ends(EdgeId id) const { return ends_.at(id); }
    oracle::Snapshot snapshot() const;
    std::vector<EdgeId> live_ids() const;

    // Cached per-state facts; invalidated by updates.
    const std::vector<std::uint32_t>& components();
    const std::vector<std::uint32_t>& classes();
    bool is_bridge(EdgeId id);

    // Description of the divergence, or nullopt if the answer is valid.
    std::optional<std::string> verify(const Op& op, const Answer& a);
    std::string dump() const;

private:
    void refresh();

    std::uint32_t n_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ends_;
    std::vector<bool> alive_;
    bool fresh_ = false;
    std::vector<std::uint32_t> comp_, cls_;
    std::vector<bool> bridge_;  // by edge id
    std::map<EdgeId, std::vector<std::uint32_t>> without_;  // components once a bridge is removed
};

struct WorkloadSpec {
    std::uint32_t n = 16;
    std::uint32_t ops = 100;
    std::uint64_t seed = 1;
    double query_fraction = 0.3;  // share of query ops
    double density = 1.5;         // target live edges per vertex
};

// Deterministic mixed workload. Deletes are issued by id and always valid.
std::vector<Op> random_workload(const WorkloadSpec& spec);

}  // namespace tecc::tools
