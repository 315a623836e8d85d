#include "ops.hpp"

#include <array>
#include <istream>
#include <random>
#include <sstream>

namespace tecc::tools {

namespace {

struct KindInfo {
    OpKind kind;
    std::string_view name;
    int arity;
};

constexpr std::array<KindInfo, 9> kKinds{{
    {OpKind::Insert, "insert", 2},
    {OpKind::Delete, "delete", 2},
    {OpKind::DeleteId, "delete-id", 1},
    {OpKind::Conn, "conn", 2},
    {OpKind::TwoConn, "2conn", 2},
    {OpKind::Bridge, "bridge", 1},
    {OpKind::Bridge2, "bridge2", 2},
    {OpKind::Size, "size", 1},
    {OpKind::TwoSize, "2size", 1},
}};

const KindInfo& info(OpKind k) { return kKinds[static_cast<std::size_t>(k)]; }

// Splits on whitespace, dropping a trailing '#' comment.
std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

std::uint32_t parse_uint(const std::string& s, std::size_t line) {
    if (s.empty() || s.size() > 10 || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, "expected a non-negative integer, got '" + s + "'");
    const unsigned long long v = std::stoull(s);
    if (v > 0xffffffffULL) throw ParseError(line, "integer out of range: " + s);
    return static_cast<std::uint32_t>(v);
}

}  // namespace

bool is_query(OpKind k) { return k != OpKind::Insert && k != OpKind::Delete && k != OpKind::DeleteId; }
std::string_view op_name(OpKind k) { return info(k).name; }
int arity(OpKind k) { return info(k).arity; }

std::string format_op(const Op& op) {
    std::string s(op_name(op.kind));
    s += ' ' + std::to_string(op.a);
    if (arity(op.kind) == 2) s += ' ' + std::to_string(op.b);
    return s;
}

OpFile parse_op_file(std::istream& in) {
    OpFile f;
    bool header = false;
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        const auto t = tokens(line);
        if (t.empty()) continue;
        if (!header) {
            if (t.size() != 2 || t[0] != "n") throw ParseError(no, "expected header 'n <count>'");
            f.n = parse_uint(t[1], no);
            if (f.n == 0) throw ParseError(no, "vertex count must be positive");
            header = true;
            continue;
        }
        const KindInfo* k = nullptr;
        for (const auto& ki : kKinds)
            if (ki.name == t[0]) k = &ki;
        if (!k) throw ParseError(no, "unknown op '" + t[0] + "'");
        if (static_cast<int>(t.size()) != k->arity + 1)
            throw ParseError(no, "'" + t[0] + "' takes " + std::to_string(k->arity) + " argument(s)");
        Op op{k->kind, parse_uint(t[1], no), k->arity == 2 ? parse_uint(t[2], no) : 0};
        if (op.kind != OpKind::DeleteId && (op.a >= f.n || (k->arity == 2 && op.b >= f.n)))
            throw ParseError(no, "vertex out of range");
        if (op.kind == OpKind::Insert && op.a == op.b) throw ParseError(no, "self-loops are not supported");
        f.ops.push_back(op);
        f.lines.push_back(no);
    }
    if (!header) throw ParseError(1, "missing header 'n <count>'");
    return f;
}

std::string format_op_file(const OpFile& f) {
    std::string s = "n " + std::to_string(f.n) + "\n";
    for (const auto& op : f.ops) s += format_op(op) + "\n";
    return s;
}

GraphFile parse_graph_file(std::istream& in) {
    GraphFile g;
    std::string line;
    std::size_t no = 0;
    bool header = false;
    std::uint32_t m = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto t = tokens(line);
        if (t.empty()) continue;
        if (t.size() != 2) throw ParseError(no, header ? "expected 'u v'" : "expected header 'n m'");
        const std::uint32_t x = parse_uint(t[0], no), y = parse_uint(t[1], no);
        if (!header) {
            if (x == 0) throw ParseError(no, "vertex count must be positive");
            g.n = x;
            m = y;
            header = true;
            continue;
        }
        if (x >= g.n || y >= g.n) throw ParseError(no, "vertex out of range");
        if (x == y) throw ParseError(no, "self-loops are not supported");
        if (g.edges.size() == m) throw ParseError(no, "more edges than announced");
        g.edges.emplace_back(x, y);
    }
    if (!header) throw ParseError(no == 0 ? 1 : no, "missing header 'n m'");
    if (g.edges.size() != m) throw ParseError(no, "fewer edges than announced");
    return g;
}

std::string format_answer(const Op& op, const Answer& a) {
    std::string s = format_op(op) + " -> ";
    switch (op.kind) {
    case OpKind::Conn:
    case OpKind::TwoConn:
        return s + (a.flag ? "true" : "false");
    case OpKind::Size:
    case OpKind::TwoSize:
        return s + std::to_string(a.count);
    case OpKind::Bridge:
    case OpKind::Bridge2:
        if (a.error) return s + "error: not connected";
        if (!a.edge) return s + "none";
        return s + std::to_string(a.edge->first) + ' ' + std::to_string(a.edge->second);
    default:
        return s + "ok";
    }
}

// ---- session ----------------------------------------------------------------

Step Session::apply(const Op& op) {
    Step st;
    auto flag = [](bool f) {
        Answer a;
        a.flag = f;
        return a;
    };
    auto count = [](std::uint32_t c) {
        Answer a;
        a.count = c;
        return a;
    };
    auto bridge_answer = [&](std::optional<EdgeId> e) {
        Answer a;
        if (e) {
            a.edge_id = *e;
            a.edge = std::pair{bc_.edge(*e).u, bc_.edge(*e).v};
        }
        return a;
    };
    switch (op.kind) {
    case OpKind::Insert:
        st.edge = bc_.insert(op.a, op.b);
        break;
    case OpKind::Delete: {
        const auto e = bc_.find_edge(op.a, op.b);
        if (!e) throw std::invalid_argument("no edge " + std::to_string(op.a) + " " + std::to_string(op.b));
        bc_.erase(*e);
        st.edge = *e;
        break;
    }
    case OpKind::DeleteId:
        if (!bc_.alive(op.a)) throw std::invalid_argument("no live edge with id " + std::to_string(op.a));
        bc_.erase(op.a);
        st.edge = op.a;
        break;
    case OpKind::Conn:
        st.answer = flag(bc_.connected(op.a, op.b));
        break;
    case OpKind::TwoConn:
        st.answer = flag(bc_.two_edge_connected(op.a, op.b));
        break;
    case OpKind::Bridge:
        st.answer = bridge_answer(bc_.find_bridge(op.a));
        break;
    case OpKind::Bridge2:
        if (!bc_.connected(op.a, op.b)) {
            st.answer = Answer{};
            st.answer->error = true;
        } else {
            st.answer = bridge_answer(bc_.find_bridge(op.a, op.b));
        }
        break;
    case OpKind::Size:
        st.answer = count(bc_.size(op.a));
        break;
    case OpKind::TwoSize:
        st.answer = count(bc_.two_size(op.a));
        break;
    }
    return st;
}

// ---- model ------------------------------------------------------------------

void Model::insert(EdgeId id, std::uint32_t u, std::uint32_t v) {
    if (id != ends_.size()) throw std::logic_error("model: edge ids must be dense");
    ends_.emplace_back(u, v);
    alive_.push_back(true);
    fresh_ = false;
}

void Model::erase(EdgeId id) {
    if (!alive(id)) throw std::logic_error("model: erase of a dead edge");
    alive_[id] = false;
    fresh_ = false;
}

std::vector<EdgeId> Model::live_ids() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < ends_.size(); ++e)
        if (alive_[e]) out.push_back(e);
    return out;
}

oracle::Snapshot Model::snapshot() const {
    oracle::Snapshot g{n_, {}};
    for (EdgeId e : live_ids()) g.edges.push_back(ends_[e]);
    return g;
}

void Model::refresh() {
    if (fresh_) return;
    const auto ids = live_ids();
    const auto g = snapshot();
    comp_ = oracle::components(g);
    cls_ = oracle::two_ecc(g);
    const auto br = oracle::bridges(g);
    bridge_.assign(ends_.size(), false);
    for (std::size_t k = 0; k < ids.size(); ++k) bridge_[ids[k]] = br[k];
    without_.clear();
    fresh_ = true;
}

const std::vector<std::uint32_t>& Model::components() {
    refresh();
    return comp_;
}

const std::vector<std::uint32_t>& Model::classes() {
    refresh();
    return cls_;
}

bool Model::is_bridge(EdgeId id) {
    refresh();
    return alive(id) && bridge_[id];
}

std::optional<std::string> Model::verify(const Op& op, const Answer& a) {
    refresh();
    const std::uint32_t u = op.a, v = op.b;
    auto count = [](const std::vector<std::uint32_t>& ids, std::uint32_t x) {
        std::uint32_t c = 0;
        for (auto y : ids) c += y == ids[x];
        return c;
    };
    auto expect = [&](const std::string& want) -> std::optional<std::string> {
        return "expected " + want + ", got " + format_answer(op, a);
    };
    switch (op.kind) {
    case OpKind::Conn:
        if (a.flag != (comp_[u] == comp_[v])) return expect(comp_[u] == comp_[v] ? "true" : "false");
        return std::nullopt;
    case OpKind::TwoConn:
        if (a.flag != (cls_[u] == cls_[v])) return expect(cls_[u] == cls_[v] ? "true" : "false");
        return std::nullopt;
    case OpKind::Size: {
        const auto c = count(comp_, u);
        if (a.count != c) return expect(std::to_string(c));
        return std::nullopt;
    }
    case OpKind::TwoSize: {
        const auto c = count(cls_, u);
        if (a.count != c) return expect(std::to_string(c));
        return std::nullopt;
    }
    case OpKind::Bridge: {
        bool any = false;
        for (EdgeId e : live_ids()) any = any || (bridge_[e] && comp_[ends_[e].first] == comp_[u]);
        if (!a.edge_id) {
            if (any) return expect("a bridge");
            return std::nullopt;
        }
        const EdgeId e = *a.edge_id;
        if (!alive(e) || !bridge_[e] || comp_[ends_[e].first] != comp_[u])
            return expect(any ? "a bridge in the component" : "none");
        return std::nullopt;
    }
    case OpKind::Bridge2: {
        if (comp_[u] != comp_[v]) {
            if (!a.error) return expect("error: not connected");
            return std::nullopt;
        }
        if (a.error) return expect("an answer for a connected pair");
        const bool sep = cls_[u] != cls_[v];
        if (!a.edge_id) {
            if (sep) return expect("a separating bridge");
            return std::nullopt;
        }
        const EdgeId e = *a.edge_id;
        if (!alive(e) || !bridge_[e]) return expect(sep ? "a separating bridge" : "none");
        // e separates u and v iff they fall apart once it is removed.
        auto it = without_.find(e);
        if (it == without_.end()) {
            oracle::Snapshot g{n_, {}};
            for (EdgeId f : live_ids())
                if (f != e) g.edges.push_back(ends_[f]);
            it = without_.emplace(e, oracle::components(g)).first;
        }
        const auto& c = it->second;
        if (c[u] == c[v]) return expect(sep ? "a separating bridge" : "none");
        return std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

std::string Model::dump() const {
    std::string s = "n " + std::to_string(n_) + "\n";
    for (EdgeId e : live_ids())
        s += "  edge " + std::to_string(e) + ": " + std::to_string(ends_[e].first) + " " +
             std::to_string(ends_[e].second) + "\n";
    return s;
}

// ---- workload ---------------------------------------------------------------

std::vector<Op> random_workload(const WorkloadSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    auto below = [&](std::uint64_t k) { return static_cast<std::uint32_t>(rng() % k); };
    auto chance = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
    const std::uint32_t n = spec.n;
    const auto target = static_cast<std::size_t>(spec.density * n);

    std::vector<EdgeId> live;  // ids of live edges
    EdgeId next = 0;
    std::vector<Op> ops;
    ops.reserve(spec.ops);
    constexpr OpKind kQueries[] = {OpKind::Conn,    OpKind::TwoConn, OpKind::Bridge,
                                   OpKind::Bridge2, OpKind::Size,    OpKind::TwoSize};
    while (ops.size() < spec.ops) {
        if (n >= 2 && !chance(spec.query_fraction)) {
            const bool ins = live.empty() || chance(live.size() < target ? 0.7 : 0.3);
            if (ins) {
                const std::uint32_t u = below(n);
                std::uint32_t v = below(n - 1);
                if (v >= u) ++v;
                ops.push_back({OpKind::Insert, u, v});
                live.push_back(next++);
            } else {
                const std::uint32_t k = below(live.size());
                ops.push_back({OpKind::DeleteId, live[k], 0});
                live[k] = live.back();
                live.pop_back();
            }
        } else {
            const OpKind q = kQueries[below(6)];
            ops.push_back({q, below(n), below(n)});
            if (arity(q) == 1) ops.back().b = 0;
        }
    }
    return ops;
}

}  // namespace tecc::tools
