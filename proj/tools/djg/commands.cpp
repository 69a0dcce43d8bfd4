#include "commands.hpp"

#include <djg/aux_graphs.hpp>
#include <djg/bounds.hpp>
#include <djg/chi.hpp>
#include <djg/cycles.hpp>
#include <djg/errors.hpp>
#include <djg/extremal.hpp>
#include <djg/graph_io.hpp>
#include <djg/ramsey.hpp>
#include <djg/random.hpp>
#include <djg/verify.hpp>

#include <fstream>
#include <sstream>

namespace djg::cli {

namespace {
    auto host_of(const RunConfig & config) -> GraphPtr
    {
        return build_graph(config.n, config.k);
    }

    /// The subgraph a command works on: an edge list file, a hex mask, a
    /// seeded random subgraph, or the full host.
    auto subgraph_of(const RunConfig & config) -> EdgeSubgraph
    {
        if (! config.input_path.empty()) {
            std::ifstream in(config.input_path);
            if (! in)
                throw ResourceError("cannot open " + config.input_path);
            return read_edge_list(in);
        }
        auto g = host_of(config);
        if (! config.mask_hex.empty())
            return EdgeSubgraph::from_hex(g, config.mask_hex);
        if (config.random_subgraph) {
            if (config.density < 0 || config.density > 10)
                throw DomainError("density is in tenths and must lie in 0..10");
            Rng rng{ config.seed };
            return random_subgraph(g, rng, static_cast<std::uint64_t>(config.density), 10);
        }
        return EdgeSubgraph::full(g);
    }

    auto vertex_names(const DoubledJohnsonGraph & g, const Cycle & c) -> std::string
    {
        std::string s;
        for (auto v : c.vertices) {
            if (! s.empty())
                s += ' ';
            s += g.vertex(v).to_string();
        }
        return s;
    }

    auto yes_no(bool b) -> std::string
    {
        return b ? "true" : "false";
    }
}

auto run_generate(const RunConfig & config) -> Outcome
{
    auto s = subgraph_of(config);
    auto & g = s.host();
    Outcome out;
    out.result = subgraph_to_json(s);

    std::ostringstream text;
    write_edge_list(text, s);
    out.text = text.str();

    std::ostringstream csv;
    csv << "edge_id,lower,upper\n";
    for (auto e : s.edges())
        csv << e << ",\"" << g.vertex(g.edge(e).lower).to_string() << "\",\"" << g.vertex(g.edge(e).upper).to_string() << "\"\n";
    out.csv = csv.str();
    return out;
}

auto run_cycles(const RunConfig & config) -> Outcome
{
    auto s = subgraph_of(config);
    auto & g = s.host();
    Outcome out;

    CycleCount count;
    std::vector<Cycle> cycles;
    if (config.count_only) {
        count = count_cycles(s, config.length, config.cycle_cap);
    }
    else {
        auto listing = enumerate_cycles(s, config.length, config.cycle_cap);
        count = CycleCount{ config.length, listing.cycles.size(), listing.truncated };
        cycles = std::move(listing.cycles);
    }
    out.result = count;
    if (! config.count_only)
        out.result["cycles"] = cycles;

    // On a full host the 6-cycle count has a closed form to hold it to.
    if (config.length == 6 && s.edge_count() == g.edge_count() && ! count.truncated) {
        auto expected = count_six_cycles(g);
        out.result["closed_form"] = expected;
        out.invariants_hold = count.count == expected;
    }

    std::ostringstream text;
    if (config.count_only) {
        text << count.count << (count.truncated ? " (truncated)" : "") << "\n";
    }
    else {
        for (auto & c : cycles)
            text << vertex_names(g, c) << "\n";
        text << count.count << " cycles of length " << count.length << (count.truncated ? " (truncated)" : "") << "\n";
    }
    out.text = text.str();

    std::ostringstream csv;
    csv << "length,count,truncated\n" << count.length << ',' << count.count << ',' << yes_no(count.truncated) << "\n";
    out.csv = csv.str();
    return out;
}

auto run_chi(const RunConfig & config) -> Outcome
{
    auto s = subgraph_of(config);
    auto & g = s.host();
    Outcome out;

    auto chi = chi_vector(s, config.cycle_cap);
    auto edge_identity = verify_edge_identity(s, chi);
    bool sum_ok = chi.ratio_sum() == Rational{ 1 };

    out.result = chi_to_json(chi);
    out.result["ratio_sum"] = to_string(chi.ratio_sum());
    out.result["ratio_sum_is_one"] = sum_ok;
    out.result["edge_identity"] = edge_identity;
    out.invariants_hold = sum_ok && edge_identity.holds();

    // The counting inequalities apply only to C_8- or C_10-free subgraphs of a doubled Odd host.
    Json inequalities = Json::array();
    if (g.is_doubled_odd()) {
        if (! contains_cycle(s, 8)) {
            auto r = verify_counting_inequalities(s, chi, CountingInequality::c8);
            inequalities.push_back(r);
            out.invariants_hold = out.invariants_hold && r.holds();
        }
        if (! contains_cycle(s, 10)) {
            auto r = verify_counting_inequalities(s, chi, CountingInequality::c10);
            inequalities.push_back(r);
            out.invariants_hold = out.invariants_hold && r.holds();
        }
    }
    out.result["counting_inequalities"] = inequalities;

    std::ostringstream text, csv;
    text << "n(C6) = " << chi.n_c6 << ", e(s) = " << s.edge_count() << " of " << g.edge_count() << "\n";
    csv << "class_id,iso_class,shape,edge_count,count,ratio_num,ratio_den\n";
    for (auto & c : class_table().classes()) {
        auto r = chi.ratio(c.id);
        char line[128];
        std::snprintf(line, sizeof line, "class %2d  %-10s  edges %d  count %8llu  ratio %s\n", c.id, c.shape.c_str(), c.edge_count,
                static_cast<unsigned long long>(chi.count_of(c.id)), to_string(r).c_str());
        text << line;
        csv << c.id << ',' << c.iso_class << ',' << c.shape << ',' << c.edge_count << ',' << chi.count_of(c.id) << ','
            << r.numerator() << ',' << r.denominator() << "\n";
    }
    text << "sum of ratios = " << to_string(chi.ratio_sum()) << "\n";
    text << "edge identity: " << to_string(edge_identity.edge_ratio) << " vs " << to_string(edge_identity.weighted_chi)
         << (edge_identity.holds() ? " holds" : " FAILS") << "\n";
    for (auto & ineq : inequalities)
        text << ineq["inequality"].get<std::string>() << " inequality: " << ineq["bound"] << " >= " << ineq["weighted"]
             << (ineq["holds"].get<bool>() ? " holds" : " FAILS") << "\n";
    out.text = text.str();
    out.csv = csv.str();
    return out;
}

auto run_aux(const RunConfig & config) -> Outcome
{
    auto s = subgraph_of(config);
    auto & g = s.host();
    Outcome out;
    std::ostringstream text, csv;
    csv << "kind,vertex,neighbour,witness\n";

    auto add_edges_csv = [&] (const AuxGraph & aux, const std::string & kind) {
        for (auto & e : aux.edges)
            csv << kind << ",\"" << g.vertex(aux.vertices[e.a]).to_string() << "\",\"" << g.vertex(aux.vertices[e.b]).to_string()
                << "\",\"" << g.vertex(e.witness).to_string() << "\"\n";
    };

    if (! config.center.empty()) {
        auto x = g.vertex_id(KSubset::parse(config.center, g.n()));
        auto h = build_hx(s, x);
        out.result = aux_to_json(h);
        bool size_ok = h.vertices.size() == expected_hx_size(g, g.part(x));
        out.result["expected_vertex_count"] = expected_hx_size(g, g.part(x));
        out.invariants_hold = size_ok;
        text << "H_x for x = " << config.center << ": " << h.vertices.size() << " vertices, " << h.edge_count() << " edges\n";
        add_edges_csv(h, "H_x");
    }
    else if (! config.gamma.empty()) {
        auto gamma = KSubset::parse(config.gamma, g.n());
        auto h = build_hgamma(s, gamma);
        out.result = aux_to_json(h);
        out.result["expected_vertex_count"] = g.n() - g.k() + 1;
        out.invariants_hold = h.vertices.size() == static_cast<std::size_t>(g.n() - g.k() + 1);
        text << "H_gamma for gamma = " << config.gamma << ": " << h.vertices.size() << " vertices, " << h.edge_count() << " edges\n";
        add_edges_csv(h, "H_gamma");
    }
    else {
        std::vector<IdentityCheck> checks{
            check_hx_identity(s, Part::lower),
            check_hx_identity(s, Part::upper),
            check_hgamma_identity(s),
        };
        out.result = Json{ { "identities", checks } };
        csv.str("");
        csv << "identity,lhs,rhs,holds\n";
        for (auto & c : checks) {
            out.invariants_hold = out.invariants_hold && c.holds();
            text << c.name << ": " << c.lhs << " = " << c.rhs << (c.holds() ? " holds" : " FAILS") << "\n";
            csv << '"' << c.name << "\"," << c.lhs << ',' << c.rhs << ',' << yes_no(c.holds()) << "\n";
        }
    }
    out.text = text.str();
    out.csv = csv.str();
    return out;
}

auto run_extremal(const RunConfig & config) -> Outcome
{
    auto g = host_of(config);
    auto search = [&] {
        if (! config.heuristic)
            return exact_extremal(g, config.length, config.search_options());
        HeuristicParams params;
        params.cycle_cap = config.cycle_cap;
        return heuristic_extremal(g, config.length, params);
    };
    auto r = search();

    Outcome out;
    out.result = search_to_json(r);
    auto lower = binomial(g->n(), g->k() + 1);
    bool ok = ! contains_cycle(r.witness, config.length) && r.value == r.witness.edge_count() && r.value <= g->edge_count();
    if (r.exact) {
        ok = ok && r.value >= lower;
        if (config.length == 6 && g->is_doubled_odd())
            ok = ok && r.value <= g->edge_count() * 5 / 6;
    }
    out.invariants_hold = ok;

    std::ostringstream text, csv;
    text << "ex(J(" << g->n() << ";" << g->k() << "," << g->k() + 1 << "), C" << config.length << ") "
         << (r.exact ? "= " : ">= ") << r.value << "\n"
         << "lower bound C(n,k+1) = " << lower << ", host edges = " << g->edge_count() << "\n"
         << "method: " << r.method << ", nodes: " << r.nodes_explored << (r.budget_hit ? " (budget hit)" : "") << "\n"
         << "witness: " << r.witness.to_hex() << "\n";
    csv << "n,k,forbidden_length,value,exact,lower_bound,nodes,budget_hit,witness_edge_mask_hex\n"
        << g->n() << ',' << g->k() << ',' << config.length << ',' << r.value << ',' << yes_no(r.exact) << ',' << lower << ','
        << r.nodes_explored << ',' << yes_no(r.budget_hit) << ',' << r.witness.to_hex() << "\n";
    out.text = text.str();
    out.csv = csv.str();
    return out;
}

auto run_bounds(const RunConfig & config) -> Outcome
{
    // Either the single host (n, k), or the doubled Odd hosts for k .. k_max.
    std::vector<std::pair<int, int>> hosts;
    if (config.k_max > 0) {
        for (int k = config.k; k <= config.k_max; ++k)
            hosts.emplace_back(2 * k + 1, k);
    }
    else {
        hosts.emplace_back(config.n, config.k);
    }

    std::vector<BoundReport> reports;
    for (auto [n, k] : hosts) {
        std::optional<SearchResult> search;
        if (config.with_search)
            search = exact_extremal(build_graph(n, k), config.length, config.search_options());
        reports.push_back(make_bound_report(n, k, config.length, search, BoundConstants{ config.c_l }));
    }

    Outcome out;
    out.result = Json{ { "reports", reports } };
    Json crossover = Json::array();
    int l = (config.length - 2) / 4;
    if (config.length % 4 == 2 && l >= 3 && l % 2 == 1)
        crossover.push_back(crossover_check(l));
    out.result["crossover"] = crossover;
    for (auto & r : reports)
        out.invariants_hold = out.invariants_hold && r.consistent;
    out.text = to_text_table(reports);
    out.csv = to_csv(reports);
    return out;
}

auto run_ramsey(const RunConfig & config) -> Outcome
{
    auto g = host_of(config);
    RamseyOptions options;
    options.trials = config.trials;
    options.seed = config.seed;
    auto report = ramsey_search(g, config.colors, config.length, parse_strategy(config.coloring), options);

    Outcome out;
    out.result = report;
    // A coloring into forests can never contain a monochromatic cycle.
    if (report.strategy == ColoringStrategy::acyclic_partition && config.colors >= g->k() + 1)
        out.invariants_hold = report.monochromatic_trials() == 0;

    std::ostringstream text, csv;
    text << report.monochromatic_trials() << " of " << report.trials.size() << " trials have a monochromatic C" << report.length << "\n";
    csv << "trial,color,edges,monochromatic_cycle\n";
    for (std::size_t t = 0; t < report.trials.size(); ++t)
        for (auto & c : report.trials[t].classes) {
            text << "trial " << t << " color " << c.color << ": " << c.edges << " edges"
                 << (c.witness ? ", cycle " + vertex_names(*g, *c.witness) : ", no target cycle") << "\n";
            csv << t << ',' << c.color << ',' << c.edges << ',' << yes_no(c.witness.has_value()) << "\n";
        }
    out.text = text.str();
    out.csv = csv.str();
    return out;
}

auto run_verify(const RunConfig & config) -> Outcome
{
    VerifyOptions options;
    options.max_n = config.max_n;
    options.seed = config.seed;
    options.corpus_size = config.corpus_size;
    options.search = config.search_options();
    auto report = djg::run_verify(options);

    Outcome out;
    out.result = report;
    out.invariants_hold = report.all_passed();

    std::ostringstream text, csv;
    csv << "host,check,instances,violations,passed\n";
    for (auto & c : report.checks) {
        char line[200];
        std::snprintf(line, sizeof line, "%-4s %-14s %-40s %10llu checked, %llu violations %s\n", c.passed() ? "ok" : "FAIL",
                c.host.c_str(), c.check.c_str(), static_cast<unsigned long long>(c.instances),
                static_cast<unsigned long long>(c.violations), c.detail.c_str());
        text << line;
        csv << '"' << c.host << "\"," << c.check << ',' << c.instances << ',' << c.violations << ',' << yes_no(c.passed()) << "\n";
    }
    text << (report.all_passed() ? "all checks passed\n" : "some checks FAILED\n");
    out.text = text.str();
    out.csv = csv.str();
    return out;
}

}
