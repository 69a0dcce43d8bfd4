#include "oracle.hpp"

#include <djg/aux_graphs.hpp>
#include <djg/errors.hpp>
#include <djg/extremal.hpp>
#include <djg/random.hpp>

#include <doctest.h>

using namespace djg;

TEST_CASE("H_x of full hosts")
{
    // sizes frozen from a brute-force construction
    auto g5 = build_graph(5, 2);
    auto full5 = EdgeSubgraph::full(g5);
    auto lower = build_hx(full5, g5->vertex_id(KSubset::parse("{1,2}", 5)));
    CHECK(lower.vertices.size() == 6);
    CHECK(lower.edge_count() == 6);
    auto upper = build_hx(full5, g5->vertex_id(KSubset::parse("{1,2,3}", 5)));
    CHECK(upper.vertices.size() == 6);
    CHECK(upper.edge_count() == 6);

    auto g7 = build_graph(7, 3);
    auto h7 = build_hx(EdgeSubgraph::full(g7), g7->vertex_id(KSubset::parse("{1,2,3}", 7)));
    CHECK(h7.vertices.size() == 12);
    CHECK(h7.edge_count() == 18);
}

TEST_CASE("H_x vertices are exactly the vertices at distance two")
{
    auto g = build_graph(6, 2);
    auto full = EdgeSubgraph::full(g);
    for (VertexId x = 0; x < g->vertex_count(); ++x) {
        auto h = build_hx(full, x);
        std::vector<VertexId> expected;
        for (VertexId y = 0; y < g->vertex_count(); ++y)
            if (distance(*g, g->vertex(x), g->vertex(y)) == 2)
                expected.push_back(y);
        CHECK(h.vertices == expected);
        CHECK(h.vertices.size() == expected_hx_size(*g, g->part(x)));
        for (auto & e : h.edges) {
            CHECK(e.a < e.b);
            CHECK_FALSE(g->adjacent(x, e.witness));
            CHECK(full.adjacent(h.vertices[e.a], e.witness));
            CHECK(full.adjacent(h.vertices[e.b], e.witness));
        }
    }
}

TEST_CASE("H_gamma vertices and edges")
{
    auto g = build_graph(6, 2);
    auto full = EdgeSubgraph::full(g);
    auto gammas = all_gammas(*g);
    CHECK(gammas.size() == 6);
    for (auto & gamma : gammas) {
        auto h = build_hgamma(full, gamma);
        CHECK(h.vertices.size() == 5);
        for (auto v : h.vertices)
            CHECK(gamma.is_subset_of(g->vertex(v)));
        // in the full host every pair is joined through their union
        CHECK(h.edge_count() == 10);
        for (auto & e : h.edges)
            CHECK(g->vertex(e.witness) == g->vertex(h.vertices[e.a]).union_with(g->vertex(h.vertices[e.b])));
    }
    CHECK(all_gammas(*build_graph(3, 1)).size() == 1);
    CHECK_THROWS_AS(build_hgamma(full, KSubset::parse("{1,2}", 6)), DomainError);
}

TEST_CASE("edge-sum identities hold on random subgraphs")
{
    for (auto [n, k] : std::vector<std::pair<int, int>>{ { 5, 2 }, { 6, 2 }, { 7, 3 }, { 7, 2 } }) {
        auto g = build_graph(n, k);
        for (auto & s : random_corpus(g, 17, 20)) {
            CHECK(check_hx_identity(s, Part::lower).holds());
            CHECK(check_hx_identity(s, Part::upper).holds());
            CHECK(check_hgamma_identity(s).holds());
        }
    }
}

TEST_CASE("identity sides on the full host")
{
    auto g = build_graph(5, 2);
    auto full = EdgeSubgraph::full(g);
    auto lower = check_hx_identity(full, Part::lower);
    CHECK(lower.lhs == 10 * 6);
    CHECK(lower.rhs == 2 * 30);
    CHECK(check_hgamma_identity(full).lhs == 30);
}

TEST_CASE("lifting an auxiliary cycle doubles its length")
{
    auto g = build_graph(6, 2);
    auto full = EdgeSubgraph::full(g);
    auto h = build_hgamma(full, KSubset::parse("{1}", 6));
    auto adjacency = h.adjacency();
    for (int m = 3; m <= 5; ++m) {
        std::uint64_t lifted = 0;
        for_each_cycle(adjacency, m, [&] (std::span<const std::uint32_t> c) {
            auto host = lift_cycle(h, c);
            CHECK(host.length() == 2 * m);
            CHECK(is_cycle_of(full, host));
            ++lifted;
            return true;
        });
        CHECK(lifted > 0);
    }
    std::vector<std::uint32_t> bogus{ 0, 0, 1 };
    CHECK_THROWS_AS(lift_cycle(h, bogus), DomainError);
}

TEST_CASE("C_8-free subgraphs give C_4-free auxiliary graphs")
{
    auto g = build_graph(5, 2);
    auto s = exact_extremal(g, 8).witness;
    for (auto & gamma : all_gammas(*g))
        CHECK_FALSE(find_any_cycle(build_hgamma(s, gamma).adjacency(), 4));
    for (VertexId x = 0; x < g->vertex_count(); ++x)
        CHECK_FALSE(find_any_cycle(build_hx(s, x).adjacency(), 4));
}

TEST_CASE("witness lookup and local indices")
{
    auto g = build_graph(5, 2);
    auto h = build_hgamma(EdgeSubgraph::full(g), KSubset::parse("{2}", 5));
    auto & e = h.edges.front();
    CHECK(h.witness(e.a, e.b) == e.witness);
    CHECK(h.witness(e.b, e.a) == e.witness);
    CHECK(h.local_index(h.vertices[2]) == 2u);
    CHECK_FALSE(h.local_index(g->vertex_id(KSubset::parse("{1,3}", 5))));
}
