#include <djg/json_export.hpp>
#include <djg/subset.hpp>

namespace djg {

auto to_json(Json & j, const KSubset & s) -> void
{
    j = s.to_string();
}

auto to_json(Json & j, const Rational & r) -> void
{
    j = Json{ { "num", r.numerator() }, { "den", r.denominator() } };
}

auto to_json(Json & j, const Cycle & c) -> void
{
    j = c.vertices;
}

auto to_json(Json & j, const CycleCount & c) -> void
{
    j = Json{ { "length", c.length }, { "count", c.count }, { "truncated", c.truncated } };
}

auto to_json(Json & j, const EdgeIdentityReport & r) -> void
{
    j = Json{
        { "identity", "edge_ratio" },
        { "edge_ratio", to_string(r.edge_ratio) },
        { "weighted_chi", to_string(r.weighted_chi) },
        { "holds", r.holds() },
    };
}

auto to_json(Json & j, const InequalityReport & r) -> void
{
    j = Json{
        { "inequality", r.which == CountingInequality::c8 ? "C8" : "C10" },
        { "bound", r.bound },
        { "weighted", r.weighted },
        { "chi_full", r.chi_full },
        { "chi_five", r.chi_five },
        { "chi_path_of_four", r.chi_path_of_four },
        { "slack", r.slack() },
        { "holds", r.holds() },
    };
}

auto to_json(Json & j, const IdentityCheck & c) -> void
{
    j = Json{ { "identity", c.name }, { "lhs", c.lhs }, { "rhs", c.rhs }, { "holds", c.holds() } };
}

auto to_json(Json & j, const LemmaReport & r) -> void
{
    j = Json{
        { "lemma", r.lemma },
        { "instances_checked", r.instances_checked },
        { "violations", r.violations },
        { "truncated", r.truncated },
    };
}

auto to_json(Json & j, const TheoremBound & b) -> void
{
    j = Json{ { "source", b.source }, { "formula", b.formula } };
    j["value"] = b.value ? Json(*b.value) : Json(nullptr);
    j["ratio"] = b.ratio ? Json(*b.ratio) : Json(nullptr);
    j["exact_ratio"] = b.exact_ratio ? Json(to_string(*b.exact_ratio)) : Json(nullptr);
    j["exponent"] = b.exponent ? Json(to_string(*b.exponent)) : Json(nullptr);
    j["constant_dependent"] = b.constant_dependent;
    j["asymptotic"] = b.asymptotic;
}

auto to_json(Json & j, const CrossoverReport & r) -> void
{
    j = Json{
        { "l", r.l },
        { "balanced_exponent", to_string(r.balanced_exponent) },
        { "unbalanced_exponent", to_string(r.unbalanced_exponent) },
        { "balanced_stronger", r.balanced_stronger },
        { "below_threshold", r.below_threshold },
    };
}

auto to_json(Json & j, const BoundReport & r) -> void
{
    j = Json{
        { "n", r.n },
        { "k", r.k },
        { "forbidden_length", r.length },
        { "host_edges", r.host_edges },
        { "lower_bound", r.lower_bound },
        { "bounds", r.bounds },
    };
    j["search_value"] = r.search_value ? Json(*r.search_value) : Json(nullptr);
    j["search_exact"] = r.search_exact;
    j["consistent"] = r.consistent;
    j["issues"] = r.issues;
}

auto to_json(Json & j, const RamseyReport & r) -> void
{
    Json trials = Json::array();
    for (auto & t : r.trials) {
        Json classes = Json::array();
        for (auto & c : t.classes) {
            Json entry{ { "color", c.color }, { "edges", c.edges } };
            entry["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
            classes.push_back(entry);
        }
        trials.push_back(Json{ { "monochromatic", t.monochromatic() }, { "classes", classes } });
    }
    j = Json{
        { "colors", r.colors },
        { "length", r.length },
        { "strategy", strategy_name(r.strategy) },
        { "monochromatic_trials", r.monochromatic_trials() },
        { "trials", trials },
    };
}

auto chi_to_json(const ChiVector & chi) -> Json
{
    auto & table = class_table();
    Json classes = Json::array();
    for (auto & c : table.classes()) {
        auto ratio = chi.ratio(c.id);
        classes.push_back(Json{
            { "class_id", c.id },
            { "iso_class", c.iso_class },
            { "shape", c.shape },
            { "edge_count", c.edge_count },
            { "count", chi.count_of(c.id) },
            { "ratio_num", ratio.numerator() },
            { "ratio_den", ratio.denominator() },
        });
    }
    return Json{ { "n_c6", chi.n_c6 }, { "classes", classes } };
}

auto aux_to_json(const AuxGraph & aux) -> Json
{
    auto & g = aux.source.host();
    Json vertices = Json::array();
    std::vector<Json> neighbours(aux.vertices.size(), Json::array());
    for (auto & e : aux.edges) {
        neighbours[e.a].push_back(Json{ { "vertex", g.vertex(aux.vertices[e.b]) }, { "witness", g.vertex(e.witness) } });
        neighbours[e.b].push_back(Json{ { "vertex", g.vertex(aux.vertices[e.a]) }, { "witness", g.vertex(e.witness) } });
    }
    for (std::size_t i = 0; i < aux.vertices.size(); ++i)
        vertices.push_back(Json{ { "vertex", g.vertex(aux.vertices[i]) }, { "neighbours", neighbours[i] } });
    return Json{
        { "vertex_count", aux.vertices.size() },
        { "edge_count", aux.edge_count() },
        { "adjacency", vertices },
    };
}

auto aux_to_json(const AuxGraphHx & aux) -> Json
{
    Json j{ { "kind", "H_x" }, { "center", aux.source.host().vertex(aux.center) } };
    j.update(aux_to_json(static_cast<const AuxGraph &>(aux)));
    return j;
}

auto aux_to_json(const AuxGraphHgamma & aux) -> Json
{
    Json j{ { "kind", "H_gamma" }, { "gamma", aux.gamma } };
    j.update(aux_to_json(static_cast<const AuxGraph &>(aux)));
    return j;
}

auto search_to_json(const SearchResult & r) -> Json
{
    auto & g = r.witness.host();
    Json j{
        { "n", g.n() },
        { "k", g.k() },
        { "forbidden_length", r.forbidden_length },
        { "value", r.value },
        { "exact", r.exact },
        { "lower_bound", binomial(g.n(), g.k() + 1) },
    };
    if (r.forbidden_length == 6 && g.is_doubled_odd())
        j["upper_bound"] = g.edge_count() * 5 / 6;
    else
        j["upper_bound"] = nullptr;
    j["witness_edge_mask_hex"] = r.witness.to_hex();
    j["nodes"] = r.nodes_explored;
    j["budget_hit"] = r.budget_hit;
    j["method"] = r.method;
    return j;
}

auto subgraph_to_json(const EdgeSubgraph & s) -> Json
{
    auto & g = s.host();
    Json vertices = Json::array();
    for (auto & v : g.vertices())
        vertices.push_back(v.to_string());
    Json edges = Json::array();
    for (auto e : s.edges()) {
        auto & edge = g.edge(e);
        edges.push_back(Json::array({ g.vertex(edge.lower).to_string(), g.vertex(edge.upper).to_string() }));
    }
    return Json{
        { "n", g.n() },
        { "k", g.k() },
        { "vertex_count", g.vertex_count() },
        { "edge_count", s.edge_count() },
        { "host_edge_count", g.edge_count() },
        { "edge_mask_hex", s.to_hex() },
        { "vertices", vertices },
        { "edges", edges },
    };
}

}
