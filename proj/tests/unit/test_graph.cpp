#include "oracle.hpp"

#include <djg/errors.hpp>
#include <djg/graph.hpp>
#include <djg/graph_io.hpp>

#include <doctest.h>

#include <sstream>

using namespace djg;

namespace {
    auto as_set(const KSubset & s) -> oracle::Set
    {
        auto e = s.elements();
        return { e.begin(), e.end() };
    }
}

TEST_CASE("host sizes match brute-force construction")
{
    for (int k = 1; k <= 3; ++k)
        for (int n = 2 * k + 1; n <= 8; ++n) {
            auto g = build_graph(n, k);
            auto h = oracle::doubled_johnson(n, k);
            CHECK(g->vertex_count() == h.vertices.size());
            CHECK(g->edge_count() == h.graph.edge_count());
            CHECK(g->lower_count() == oracle::choose(n, k));
            CHECK(g->upper_count() == oracle::choose(n, k + 1));
            CHECK(g->is_doubled_odd() == (n == 2 * k + 1));
        }
}

TEST_CASE("adjacency is containment")
{
    auto g = build_graph(6, 2);
    auto h = oracle::doubled_johnson(6, 2);
    for (VertexId a = 0; a < g->vertex_count(); ++a)
        for (VertexId b = 0; b < g->vertex_count(); ++b) {
            auto sa = as_set(g->vertex(a)), sb = as_set(g->vertex(b));
            bool contained = (sa.size() + 1 == sb.size() && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
                    || (sb.size() + 1 == sa.size() && std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()));
            CHECK(g->adjacent(a, b) == contained);
        }
}

TEST_CASE("edge and incidence layout")
{
    auto g = build_graph(7, 3);
    for (EdgeId e = 0; e < g->edge_count(); ++e) {
        auto [lo, up] = g->edge(e);
        CHECK(g->part(lo) == Part::lower);
        CHECK(g->part(up) == Part::upper);
        CHECK(g->find_edge(lo, up) == e);
        CHECK(g->find_edge(up, lo) == e);
        CHECK(g->other_end(e, lo) == up);
        if (e > 0) {
            auto prev = g->edge(e - 1);
            CHECK((prev.lower < lo || (prev.lower == lo && prev.upper < up)));
        }
    }
    for (VertexId v = 0; v < g->vertex_count(); ++v)
        CHECK(g->degree(v) == (g->part(v) == Part::lower ? 7 - 3 : 3 + 1));
    CHECK_FALSE(g->find_edge(0, 1));
    CHECK_THROWS_AS(g->other_end(0, 2), DomainError);
}

TEST_CASE("vertex lookup")
{
    auto g = build_graph(5, 2);
    auto x = KSubset::parse("{2,4}", 5);
    auto id = g->vertex_id(x);
    CHECK(g->vertex(id) == x);
    CHECK_FALSE(g->find_vertex(KSubset::parse("{1}", 5)));
    CHECK_THROWS_AS(g->vertex_id(KSubset::parse("{1,2,3,4}", 5)), DomainError);
}

TEST_CASE("distance matches BFS")
{
    auto g = build_graph(5, 2);
    auto h = oracle::doubled_johnson(5, 2);
    CHECK(distance(*g, KSubset::parse("{1,2}", 5), KSubset::parse("{3,4,5}", 5)) == 5);
    for (VertexId a = 0; a < g->vertex_count(); ++a)
        for (VertexId b = 0; b < g->vertex_count(); ++b)
            CHECK(distance(*g, g->vertex(a), g->vertex(b)) == oracle::bfs_distance(h.graph, static_cast<int>(a), static_cast<int>(b)));
    CHECK_THROWS_AS(distance(*g, KSubset::parse("{1}", 5), KSubset::parse("{1,2}", 5)), DomainError);
}

TEST_CASE("host parameters are validated")
{
    CHECK_THROWS_AS(build_graph(4, 2), DomainError);
    CHECK_THROWS_AS(build_graph(5, 0), DomainError);
    CHECK_THROWS_AS(build_graph(64, 2), DomainError);
    CHECK_THROWS_AS(build_graph(40, 10), ResourceError);
    CHECK_THROWS_AS(build_graph(9, 2, GraphLimits{ 100 }), ResourceError);
}

TEST_CASE("edge subgraph editing and hex round trip")
{
    auto g = build_graph(5, 2);
    auto s = EdgeSubgraph::empty(g);
    CHECK(s.edge_count() == 0);
    CHECK(s.to_hex() == "00000000");
    s.insert(0);
    s.insert(5);
    s.insert(29);
    CHECK(s.edge_count() == 3);
    CHECK(s.to_hex() == "20000021");
    CHECK(EdgeSubgraph::from_hex(g, s.to_hex()) == s);
    CHECK(EdgeSubgraph::from_hex(g, "20000021") == s);
    s.erase(5);
    CHECK_FALSE(s.contains(5));
    CHECK(s.degree(g->edge(0).lower) == 1);
    CHECK(EdgeSubgraph::full(g).to_hex() == "3fffffff");
    CHECK_THROWS_AS(EdgeSubgraph::from_hex(g, "zz"), ParseError);
    CHECK_THROWS_AS(EdgeSubgraph::from_hex(g, "7fffffff"), ParseError);
    CHECK_THROWS_AS(EdgeSubgraph(g, EdgeMask(3)), DomainError);
}

TEST_CASE("subgraph adjacency needs the edge selected")
{
    auto g = build_graph(5, 2);
    auto s = EdgeSubgraph::empty(g);
    auto [a, b] = g->edge(7);
    CHECK_FALSE(s.adjacent(a, b));
    s.insert(7);
    CHECK(s.adjacent(a, b));
    CHECK(s.adjacent(b, a));
}

TEST_CASE("cycle-free lower bound is a forest of size C(n,k+1)")
{
    for (auto [n, k] : std::vector<std::pair<int, int>>{ { 3, 1 }, { 5, 2 }, { 6, 2 }, { 7, 3 }, { 8, 3 } }) {
        auto g = build_graph(n, k);
        auto s = cycle_free_lower_bound(g);
        CHECK(s.edge_count() == oracle::choose(n, k + 1));
        std::vector<std::pair<int, int>> edges;
        for (auto e : s.edges())
            edges.emplace_back(g->edge(e).lower, g->edge(e).upper);
        CHECK(oracle::is_forest(g->vertex_count(), edges));
        for (VertexId w = static_cast<VertexId>(g->lower_count()); w < g->vertex_count(); ++w)
            CHECK(s.degree(w) == 1);
    }
    auto g = build_graph(5, 2);
    auto bad = [] (const DoubledJohnsonGraph &, VertexId) -> EdgeId { return 0; };
    CHECK_THROWS_AS(cycle_free_lower_bound(g, bad), DomainError);
}

TEST_CASE("edge list round trip")
{
    auto g = build_graph(5, 2);
    auto s = cycle_free_lower_bound(g);
    std::stringstream buffer;
    write_edge_list(buffer, s);
    auto back = read_edge_list(buffer);
    CHECK(back.host().n() == 5);
    CHECK(back.host().k() == 2);
    CHECK(back.mask() == s.mask());

    std::stringstream full;
    write_edge_list(full, g);
    CHECK(read_edge_list(full).edge_count() == 30);
}

TEST_CASE("malformed edge lists are rejected")
{
    auto reject = [] (const std::string & text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    };
    reject("");
    reject("5 2 10 9 1\n{1,2} {1,2,3}\n");
    reject("5 2 10 10 2\n{1,2} {1,2,3}\n");
    reject("5 2 10 10 1\n{1,2} {3,4,5}\n");
    reject("5 2 10 10 2\n{1,2} {1,2,3}\n{1,2} {1,2,3}\n");
    reject("5 2 10 10 1\n{1,2}\n");
    reject("4 2 6 4 0\n");
    reject("5 2 10 10 1 extra\n{1,2} {1,2,3}\n");
}
