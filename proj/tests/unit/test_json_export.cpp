#include <djg/json_export.hpp>
#include <djg/subset.hpp>

#include <doctest.h>

using namespace djg;

TEST_CASE("search results carry the documented fields")
{
    auto g = build_graph(5, 2);
    auto r = exact_extremal(g, 6);
    auto j = search_to_json(r);
    CHECK(j["n"] == 5);
    CHECK(j["k"] == 2);
    CHECK(j["forbidden_length"] == 6);
    CHECK(j["value"] == 25);
    CHECK(j["exact"] == true);
    CHECK(j["lower_bound"] == 10);
    CHECK(j["upper_bound"] == 25);
    CHECK(j.contains("nodes"));
    auto hex = j["witness_edge_mask_hex"].get<std::string>();
    CHECK(EdgeSubgraph::from_hex(g, hex) == r.witness);

    auto r8 = exact_extremal(g, 8);
    CHECK(search_to_json(r8)["upper_bound"].is_null());
}

TEST_CASE("chi vectors list every class")
{
    auto g = build_graph(5, 2);
    auto s = EdgeSubgraph::full(g);
    s.erase(0);
    auto j = chi_to_json(chi_vector(s));
    CHECK(j["n_c6"] == 20);
    REQUIRE(j["classes"].size() == 13);
    auto & full = j["classes"][class_table().full_class()];
    CHECK(full["count"] == 16);
    CHECK(full["ratio_num"] == 4);
    CHECK(full["ratio_den"] == 5);
    CHECK(full["edge_count"] == 6);
}

TEST_CASE("cycle counts and cycles")
{
    Json j = count_cycles(EdgeSubgraph::full(build_graph(5, 2)), 6);
    CHECK(j.dump() == R"({"length":6,"count":20,"truncated":false})");
    Json c = Cycle{ { 0, 10, 1, 11, 2, 12 } };
    CHECK(c.dump() == "[0,10,1,11,2,12]");
}

TEST_CASE("auxiliary graphs as adjacency lists")
{
    auto g = build_graph(5, 2);
    auto h = build_hx(EdgeSubgraph::full(g), g->vertex_id(KSubset::parse("{1,2}", 5)));
    auto j = aux_to_json(h);
    CHECK(j["kind"] == "H_x");
    CHECK(j["center"] == "{1,2}");
    CHECK(j["vertex_count"] == 6);
    CHECK(j["edge_count"] == 6);
    std::size_t degree_sum = 0;
    for (auto & v : j["adjacency"])
        degree_sum += v["neighbours"].size();
    CHECK(degree_sum == 12);
    CHECK(j["adjacency"][0]["neighbours"][0].contains("witness"));
}

TEST_CASE("reports")
{
    Json lemma = LemmaReport{ "bound", 5, 0, false };
    CHECK(lemma.dump() == R"({"lemma":"bound","instances_checked":5,"violations":0,"truncated":false})");
    Json identity = IdentityCheck{ "sum", 4, 4 };
    CHECK(identity["holds"] == true);
    Json bound = make_bound_report(5, 2, 6);
    CHECK(bound["lower_bound"] == 10);
    CHECK(bound["search_value"].is_null());
    CHECK(bound["bounds"][1]["exact_ratio"] == "5/6");
    Json crossover = crossover_check(11);
    CHECK(crossover["balanced_stronger"] == false);
    CHECK(crossover["unbalanced_exponent"] == "-1/20");
}

TEST_CASE("subgraph export")
{
    auto g = build_graph(3, 1);
    auto j = subgraph_to_json(EdgeSubgraph::full(g));
    CHECK(j["vertex_count"] == 6);
    CHECK(j["edges"].size() == 6);
    CHECK(j["edges"][0][0] == "{1}");
    CHECK(j["edges"][0][1] == "{1,2}");
    CHECK(j["edge_mask_hex"] == "3f");
}
