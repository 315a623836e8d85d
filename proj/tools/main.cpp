// tecc: replay, cross-check and benchmark the dynamic 2-edge connectivity structure.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "bench.hpp"
#include "ops.hpp"
#include "tecc/matching.hpp"

namespace {

using namespace tecc;
using namespace tecc::tools;

constexpr int kOk = 0, kDivergence = 1, kUsage = 2;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

int cmd_run(const std::string& path) {
    auto in = open_input(path);
    const OpFile f = parse_op_file(in);
    Session s(f.n);
    for (std::size_t k = 0; k < f.ops.size(); ++k) {
        try {
            const Step st = s.apply(f.ops[k]);
            if (st.answer) std::cout << format_answer(f.ops[k], *st.answer) << '\n';
        } catch (const std::exception& e) {
            throw ParseError(f.lines[k], e.what());
        }
    }
    return kOk;
}

std::string state_dump(Session& s, Model& m) {
    std::ostringstream out;
    out << "model graph:\n" << m.dump() << "structure:\n";
    auto& bc = s.structure();
    for (EdgeId e : bc.live_ids()) {
        const auto& g = bc.edge(e);
        out << "  edge " << e << ": " << g.u << ' ' << g.v << (g.tree ? " tree" : " nontree") << " level "
            << g.level << '\n';
    }
    return out.str();
}

// Replays ops through the structure and the model; reports the first divergence.
// fault_at > 0 corrupts the answer of that (1-based) query before checking it.
int replay_checked(const OpFile& f, std::uint32_t audit_every, std::uint64_t fault_at) {
    Session s(f.n);
    Model m(f.n);
    auto diverge = [&](std::size_t k, const std::string& what) {
        std::cout << "divergence at op " << k << " (line " << f.lines[k] << "): " << format_op(f.ops[k]) << '\n'
                  << "  " << what << '\n'
                  << state_dump(s, m);
        return kDivergence;
    };
    std::size_t queries = 0;
    for (std::size_t k = 0; k < f.ops.size(); ++k) {
        const Op& op = f.ops[k];
        Step st;
        try {
            st = s.apply(op);
        } catch (const std::invalid_argument& e) {
            throw ParseError(f.lines[k], e.what());
        }
        if (op.kind == OpKind::Insert) m.insert(st.edge, op.a, op.b);
        if (op.kind == OpKind::Delete || op.kind == OpKind::DeleteId) m.erase(st.edge);
        if (st.answer) {
            ++queries;
            if (queries == fault_at) {
                st.answer->flag = !st.answer->flag;
                st.answer->count += 1;
                st.answer->error = !st.answer->error;
            }
            if (auto err = m.verify(op, *st.answer)) return diverge(k, *err);
        }
        if (audit_every && (k + 1) % audit_every == 0) {
            for (std::uint32_t u = 0; u < f.n; ++u)
                for (std::uint32_t v = 0; v < f.n; ++v)
                    for (OpKind q : {OpKind::Conn, OpKind::TwoConn, OpKind::Bridge, OpKind::Bridge2, OpKind::Size,
                                     OpKind::TwoSize}) {
                        if (arity(q) == 1 && v > 0) continue;
                        const Op qo{q, u, arity(q) == 1 ? 0 : v};
                        if (auto err = m.verify(qo, *s.apply(qo).answer))
                            return diverge(k, "audit " + format_op(qo) + ": " + *err);
                    }
        }
    }
    std::cout << "pass: " << f.ops.size() << " ops, " << queries << " queries checked\n";
    return kOk;
}

OpFile random_file(const std::vector<std::string>& kv, double query_fraction) {
    std::map<std::string, std::uint64_t> p{{"n", 16}, {"ops", 1000}, {"seed", 1}};
    for (const auto& t : kv) {
        const auto eq = t.find('=');
        if (eq == std::string::npos || !p.count(t.substr(0, eq)))
            throw CLI::ValidationError("--random", "expected n=.. ops=.. seed=.., got '" + t + "'");
        try {
            p[t.substr(0, eq)] = std::stoull(t.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--random", "bad number in '" + t + "'");
        }
    }
    if (p["n"] == 0 || p["n"] > (1u << 30)) throw CLI::ValidationError("--random", "n out of range");
    OpFile f;
    f.n = static_cast<std::uint32_t>(p["n"]);
    f.ops = random_workload({.n = f.n,
                             .ops = static_cast<std::uint32_t>(p["ops"]),
                             .seed = p["seed"],
                             .query_fraction = query_fraction});
    for (std::size_t k = 0; k < f.ops.size(); ++k) f.lines.push_back(k + 1);
    return f;
}

int cmd_matching(const std::string& path) {
    auto in = open_input(path);
    const GraphFile gf = parse_graph_file(in);
    const oracle::Snapshot g{gf.n, gf.edges};
    const MatchingVerdict v = unique_perfect_matching(g);
    if (!v.unique) {
        std::cout << "not-unique\n";
        return kOk;
    }
    std::cout << "unique\n";
    for (auto k : v.matching) std::cout << g.edges[k].first << ' ' << g.edges[k].second << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fully dynamic 2-edge connectivity"};
    app.require_subcommand(1);

    std::string run_file;
    auto* run = app.add_subcommand("run", "Replay an op file and print query answers");
    run->add_option("file", run_file, "Op file")->required();

    std::string check_file;
    std::vector<std::string> random_kv;
    double check_qf = 0.3;
    std::uint32_t audit = 0;
    std::uint64_t fault_at = 0;
    auto* check = app.add_subcommand("check", "Replay against the brute-force oracle");
    auto* cf = check->add_option("file", check_file, "Op file");
    auto* cr = check->add_option("--random", random_kv, "Generated workload: n=.. ops=.. seed=..")->expected(1, 3);
    check->add_option("--query-fraction", check_qf, "Share of query ops in a generated workload")
        ->check(CLI::Range(0.0, 1.0));
    check->add_option("--audit", audit, "Check every query on every pair each K ops (0: off)");
    check->add_option("--inject-fault", fault_at, "Corrupt the K-th query answer (negative test)");
    cf->excludes(cr);

    std::uint32_t min_log = 6, max_log = 13, ops_per_n = 8;
    std::uint64_t bench_seed = 1;
    double bench_qf = 0.0;
    auto* bench = app.add_subcommand("bench", "Doubling benchmark; CSV on standard output");
    bench->add_option("--min-log", min_log, "Smallest n as a power of two")->check(CLI::Range(1, 24));
    bench->add_option("--max-log", max_log, "Largest n as a power of two")->check(CLI::Range(1, 24));
    bench->add_option("--ops-per-n", ops_per_n, "Workload length per vertex");
    bench->add_option("--seed", bench_seed, "Workload seed");
    bench->add_option("--query-fraction", bench_qf, "Share of query ops")->check(CLI::Range(0.0, 1.0));

    std::string graph_file;
    auto* matching = app.add_subcommand("matching", "Decide whether a graph has a unique perfect matching");
    matching->add_option("file", graph_file, "Graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*run) return cmd_run(run_file);
        if (*check) {
            if (!random_kv.empty()) return replay_checked(random_file(random_kv, check_qf), audit, fault_at);
            if (check_file.empty()) throw CLI::ValidationError("check", "give an op file or --random");
            auto in = open_input(check_file);
            return replay_checked(parse_op_file(in), audit, fault_at);
        }
        if (*bench) {
            std::cout << bench_csv_header() << '\n';
            if (ops_per_n == 0) return kOk;
            for (std::uint32_t l = min_log; l <= max_log; ++l) {
                const std::uint32_t n = 1u << l;
                std::cout << bench_csv_row(bench_once(n, ops_per_n * n, bench_seed, bench_qf)) << '\n';
            }
            return kOk;
        }
        if (*matching) return cmd_matching(graph_file);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
