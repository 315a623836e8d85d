#include <gtest/gtest.h>

#include <sstream>

#include "bench.hpp"
#include "ops.hpp"

using namespace tecc;
using namespace tecc::tools;

namespace {

OpFile parse(const std::string& text) {
    std::istringstream in(text);
    return parse_op_file(in);
}

std::vector<std::string> run(const std::string& text) {
    const OpFile f = parse(text);
    Session s(f.n);
    std::vector<std::string> out;
    for (const Op& op : f.ops) {
        const Step st = s.apply(op);
        if (st.answer) out.push_back(format_answer(op, *st.answer));
    }
    return out;
}

}  // namespace

TEST(OpFile, ParsesGrammar) {
    const auto f = parse("# comment\nn 4\ninsert 0 1\ndelete 1 0\ndelete-id 7\nconn 0 1\n2conn 1 2\n"
                         "bridge 3\nbridge2 0 3\nsize 2  # trailing\n2size 1\n");
    EXPECT_EQ(f.n, 4u);
    ASSERT_EQ(f.ops.size(), 9u);
    EXPECT_EQ(f.ops[2].kind, OpKind::DeleteId);
    EXPECT_EQ(f.ops[2].a, 7u);
    EXPECT_EQ(f.lines[0], 3u);
    EXPECT_EQ(format_op_file(f).substr(0, 16), "n 4\ninsert 0 1\nd");
}

TEST(OpFile, ReportsLineNumbers) {
    auto line_of = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return std::size_t{0};
    };
    EXPECT_EQ(line_of("insert 0 1\n"), 1u);
    EXPECT_EQ(line_of("n 3\ninsert 0 1\nfrobnicate 1\n"), 3u);
    EXPECT_EQ(line_of("n 3\n\ninsert 0 3\n"), 3u);
    EXPECT_EQ(line_of("n 3\nconn 0\n"), 2u);
    EXPECT_EQ(line_of("n 3\ninsert 1 1\n"), 2u);
    EXPECT_EQ(line_of("n 3\nsize -1\n"), 2u);
    EXPECT_EQ(line_of("n 0\n"), 1u);
}

TEST(GraphFile, Parses) {
    std::istringstream ok("4 3\n0 1\n1 2\n2 3\n");
    const auto g = parse_graph_file(ok);
    EXPECT_EQ(g.n, 4u);
    EXPECT_EQ(g.edges.size(), 3u);
    std::istringstream short_file("4 3\n0 1\n");
    EXPECT_THROW(parse_graph_file(short_file), ParseError);
    std::istringstream bad("2 1\n0 2\n");
    EXPECT_THROW(parse_graph_file(bad), ParseError);
}

TEST(Session, DocumentedExamples) {
    const auto path = run("n 3\ninsert 0 1\ninsert 1 2\nbridge 0\n2conn 0 2\n");
    ASSERT_EQ(path.size(), 2u);
    EXPECT_TRUE(path[0] == "bridge 0 -> 0 1" || path[0] == "bridge 0 -> 1 2") << path[0];
    EXPECT_EQ(path[1], "2conn 0 2 -> false");
    const auto tri = run("n 3\ninsert 0 1\ninsert 1 2\ninsert 2 0\n2size 0\nbridge 1\nsize 2\n");
    EXPECT_EQ(tri, (std::vector<std::string>{"2size 0 -> 3", "bridge 1 -> none", "size 2 -> 3"}));
    const auto disc = run("n 4\ninsert 0 1\nbridge2 0 3\nconn 0 3\n");
    EXPECT_EQ(disc, (std::vector<std::string>{"bridge2 0 3 -> error: not connected", "conn 0 3 -> false"}));
}

TEST(Session, DeleteForms) {
    Session s(3);
    s.apply({OpKind::Insert, 0, 1});
    s.apply({OpKind::Insert, 1, 0});
    EXPECT_EQ(s.apply({OpKind::DeleteId, 0, 0}).edge, 0u);
    EXPECT_THROW(s.apply({OpKind::DeleteId, 0, 0}), std::invalid_argument);
    EXPECT_EQ(s.apply({OpKind::Delete, 0, 1}).edge, 1u);
    EXPECT_THROW(s.apply({OpKind::Delete, 0, 1}), std::invalid_argument);
}

TEST(Model, FlagsWrongAnswers) {
    Model m(3);
    m.insert(0, 0, 1);
    m.insert(1, 1, 2);
    Answer yes;
    yes.flag = true;
    EXPECT_FALSE(m.verify({OpKind::Conn, 0, 2}, yes));
    EXPECT_TRUE(m.verify({OpKind::TwoConn, 0, 2}, yes));
    Answer none;
    EXPECT_TRUE(m.verify({OpKind::Bridge, 0, 0}, none));
    Answer wrong;
    wrong.edge_id = 1;
    wrong.edge = std::pair{1u, 2u};
    EXPECT_TRUE(m.verify({OpKind::Bridge2, 0, 1}, wrong));  // 1-2 does not separate 0 and 1
    EXPECT_FALSE(m.verify({OpKind::Bridge2, 1, 2}, wrong));
}

TEST(Workload, DeterministicAndValid) {
    const WorkloadSpec spec{.n = 20, .ops = 500, .seed = 99};
    const auto a = random_workload(spec), b = random_workload(spec);
    ASSERT_EQ(a.size(), 500u);
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].kind, b[k].kind);
        EXPECT_EQ(a[k].a, b[k].a);
        EXPECT_EQ(a[k].b, b[k].b);
    }
    Session s(20);
    for (const Op& op : a) EXPECT_NO_THROW(s.apply(op));
    const auto c = random_workload({.n = 20, .ops = 500, .seed = 100});
    bool differ = false;
    for (std::size_t k = 0; k < a.size(); ++k) differ = differ || a[k].kind != c[k].kind || a[k].a != c[k].a;
    EXPECT_TRUE(differ);
}

TEST(Bench, CsvStableApartFromTime) {
    auto strip_time = [](const std::string& row) {
        std::vector<std::string> cols;
        std::stringstream ss(row);
        for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
        cols[3] = cols[4] = "";
        return cols;
    };
    const auto r1 = bench_csv_row(bench_once(64, 512, 3, 0.0));
    const auto r2 = bench_csv_row(bench_once(64, 512, 3, 0.0));
    EXPECT_EQ(strip_time(r1), strip_time(r2));
    EXPECT_EQ(strip_time(r1).size(), strip_time(bench_csv_header()).size());
    EXPECT_EQ(bench_csv_header().substr(0, 17), "n,ops,updates,wal");
}
