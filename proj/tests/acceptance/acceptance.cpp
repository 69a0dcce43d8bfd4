#include "oracle.hpp"

#include <djg/aux_graphs.hpp>
#include <djg/bounds.hpp>
#include <djg/chi.hpp>
#include <djg/cycles.hpp>
#include <djg/directions.hpp>
#include <djg/extremal.hpp>
#include <djg/random.hpp>
#include <djg/subset.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>

using namespace djg;

namespace {
    constexpr std::uint64_t corpus_seed = 20260101;
    constexpr std::size_t corpus_size = 100;

    struct Outcome
    {
        bool pass = true;
        std::string detail;
    };

    auto oracle_graph(const EdgeSubgraph & s) -> oracle::Graph
    {
        oracle::Graph g;
        g.adj.resize(s.host().vertex_count());
        for (auto e : s.edges()) {
            auto [a, b] = s.host().edge(e);
            g.adj[a].insert(static_cast<int>(b));
            g.adj[b].insert(static_cast<int>(a));
        }
        return g;
    }

    /// Seeded random subgraphs of the doubled Odd graphs on 5 and 7 points.
    struct Corpus
    {
        GraphPtr host;
        std::vector<EdgeSubgraph> members;
        std::vector<Cycle> hexagons;
    };

    auto make_corpora() -> std::vector<Corpus>
    {
        std::vector<Corpus> out;
        for (int k : { 2, 3 }) {
            auto g = build_graph(2 * k + 1, k);
            out.push_back(Corpus{ g, random_corpus(g, corpus_seed + static_cast<std::uint64_t>(k), corpus_size),
                enumerate_cycles(EdgeSubgraph::full(g), 6).cycles });
        }
        return out;
    }

    auto host_grid(int max_k, int max_n, int min_k = 1) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> grid;
        for (int k = min_k; k <= max_k; ++k)
            for (int n = 2 * k + 1; n <= max_n; ++n)
                grid.emplace_back(n, k);
        return grid;
    }

    auto criterion_1() -> Outcome
    {
        std::size_t hosts = 0;
        for (auto [n, k] : host_grid(4, 10)) {
            auto g = build_graph(n, k);
            ++hosts;
            if (g->edge_count() != (n - k) * binomial(n, k) || g->edge_count() != (k + 1) * binomial(n, k + 1))
                return { false, "edge count mismatch on n=" + std::to_string(n) + " k=" + std::to_string(k) };
        }
        return { true, std::to_string(hosts) + " hosts" };
    }

    auto criterion_2() -> Outcome
    {
        std::size_t hosts = 0;
        for (auto [n, k] : host_grid(4, 10)) {
            auto g = girth(EdgeSubgraph::full(build_graph(n, k)));
            ++hosts;
            if (g != 6)
                return { false, "girth " + std::to_string(g.value_or(0)) + " on n=" + std::to_string(n) + " k=" + std::to_string(k) };
        }
        return { true, std::to_string(hosts) + " hosts, girth 6" };
    }

    auto criterion_3() -> Outcome
    {
        std::size_t hosts = 0;
        for (auto [n, k] : host_grid(3, 9)) {
            auto g = build_graph(n, k);
            auto counted = count_cycles(EdgeSubgraph::full(g), 6);
            std::uint64_t formula = binomial(n, k) * static_cast<std::uint64_t>((n - k) * k * (n - k - 1)) / 6;
            ++hosts;
            if (counted.truncated || counted.count != formula)
                return { false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(counted.count)
                            + " vs " + std::to_string(formula) };
        }
        auto j5 = count_cycles(EdgeSubgraph::full(build_graph(5, 2)), 6).count;
        auto j6 = count_cycles(EdgeSubgraph::full(build_graph(6, 2)), 6).count;
        if (j5 != 20 || j6 != 60)
            return { false, "J(5;2,3) or J(6;2,3) census off" };
        return { true, std::to_string(hosts) + " hosts, J(5;2,3)=20, J(6;2,3)=60" };
    }

    auto criterion_4() -> Outcome
    {
        std::uint64_t paths = 0;
        for (auto [n, k] : { std::pair{ 5, 2 }, std::pair{ 7, 3 } }) {
            auto g = build_graph(n, k);
            auto K = static_cast<std::uint64_t>(k), M = static_cast<std::uint64_t>(n - k - 1);
            auto check = [&] (std::vector<VertexId> p, std::uint64_t expected) {
                ++paths;
                return six_cycles_through_path(*g, PathSpec{ std::move(p) }) == expected;
            };
            for (EdgeId e = 0; e < g->edge_count(); ++e)
                if (! check({ g->edge(e).lower, g->edge(e).upper }, K * M))
                    return { false, "edge path" };
            for (VertexId mid = 0; mid < g->vertex_count(); ++mid) {
                auto inc = g->incident_edges(mid);
                // ends in the lower part when the middle is upper, and vice versa
                auto expected = g->part(mid) == Part::upper ? M : K;
                for (std::size_t i = 0; i < inc.size(); ++i)
                    for (std::size_t j = 0; j < inc.size(); ++j)
                        if (i != j && ! check({ g->other_end(inc[i], mid), mid, g->other_end(inc[j], mid) }, expected))
                            return { false, "2-path" };
            }
            for (EdgeId e = 0; e < g->edge_count(); ++e) {
                auto [a, b] = g->edge(e);
                for (auto ea : g->incident_edges(a))
                    for (auto eb : g->incident_edges(b)) {
                        auto x = g->other_end(ea, a), y = g->other_end(eb, b);
                        if (x == b || y == a)
                            continue;
                        if (! check({ x, a, b, y }, 1) || ! check({ y, b, a, x }, 1))
                            return { false, "3-path" };
                    }
            }
        }
        return { true, std::to_string(paths) + " paths" };
    }

    auto criterion_5(const std::vector<Corpus> & corpora) -> Outcome
    {
        std::size_t checked = 0;
        for (auto & c : corpora)
            for (auto & s : c.members) {
                auto chi = chi_vector(s, c.hexagons);
                ++checked;
                if (chi.ratio_sum() != Rational{ 1 } || ! verify_edge_identity(s, chi).holds())
                    return { false, "identity failed" };
            }
        return { true, std::to_string(checked) + " subgraphs" };
    }

    auto criterion_6() -> Outcome
    {
        auto g = build_graph(5, 2);
        auto r = exact_extremal(g, 6);
        bool free = oracle::count_cycles(oracle_graph(r.witness), 6) == 0;
        bool ok = r.exact && r.value >= 10 && r.value <= 25 && r.value == r.witness.edge_count() && free;
        return { ok, "value " + std::to_string(r.value) + (r.exact ? " (exact)" : " (not exact)") + (free ? ", witness C6-free" : ", witness has C6") };
    }

    auto criterion_7(const std::vector<Corpus> & corpora) -> Outcome
    {
        std::size_t identities = 0, centers = 0;
        for (auto & c : corpora) {
            auto & g = *c.host;
            for (auto & s : c.members) {
                for (auto check : { check_hx_identity(s, Part::lower), check_hx_identity(s, Part::upper), check_hgamma_identity(s) }) {
                    ++identities;
                    if (! check.holds())
                        return { false, check.name };
                }
            }
            auto full = EdgeSubgraph::full(c.host);
            for (VertexId x = 0; x < g.vertex_count(); ++x) {
                ++centers;
                auto expected = g.part(x) == Part::lower ? g.k() * (g.n() - g.k()) : (g.k() + 1) * (g.n() - g.k() - 1);
                if (build_hx(full, x).vertices.size() != static_cast<std::size_t>(expected))
                    return { false, "H_x size" };
            }
            for (auto & gamma : all_gammas(g)) {
                ++centers;
                if (build_hgamma(full, gamma).vertices.size() != static_cast<std::size_t>(g.n() - g.k() + 1))
                    return { false, "H_gamma size" };
            }
        }
        return { true, std::to_string(identities) + " identities, " + std::to_string(centers) + " centers" };
    }

    auto criterion_8(const std::vector<Corpus> & corpora) -> Outcome
    {
        auto g = corpora[0].host;
        std::vector<EdgeSubgraph> free_graphs{ exact_extremal(g, 8).witness, heuristic_extremal(g, 8).witness };
        SearchOptions plain;
        plain.symmetry_breaking = false;
        free_graphs.push_back(exact_extremal(g, 8, plain).witness);
        for (auto & s : corpora[0].members)
            if (! contains_cycle(s, 8))
                free_graphs.push_back(s);
        std::size_t aux_checked = 0;
        for (auto & s : free_graphs) {
            if (contains_cycle(s, 8))
                return { false, "search produced a C8" };
            for (auto & gamma : all_gammas(*g)) {
                ++aux_checked;
                if (find_any_cycle(build_hgamma(s, gamma).adjacency(), 4))
                    return { false, "H_gamma has C4" };
            }
            for (VertexId x = 0; x < g->vertex_count(); ++x) {
                ++aux_checked;
                if (find_any_cycle(build_hx(s, x).adjacency(), 4))
                    return { false, "H_x has C4" };
            }
        }
        return { true, std::to_string(free_graphs.size()) + " C8-free subgraphs, " + std::to_string(aux_checked) + " auxiliary graphs" };
    }

    auto criterion_9(const std::vector<Corpus> & corpora) -> Outcome
    {
        std::uint64_t lifted = 0;
        for (auto & c : corpora)
            for (auto & s : c.members)
                for (auto & gamma : all_gammas(*c.host)) {
                    auto h = build_hgamma(s, gamma);
                    auto adjacency = h.adjacency();
                    for (int m = 3; m <= static_cast<int>(h.vertices.size()); ++m) {
                        bool ok = for_each_cycle(adjacency, m, [&] (std::span<const std::uint32_t> cycle) {
                            ++lifted;
                            try {
                                auto host_cycle = lift_cycle(h, cycle);
                                return host_cycle.length() == 2 * m && is_cycle_of(s, host_cycle);
                            }
                            catch (const std::exception &) {
                                return false;
                            }
                        });
                        if (! ok)
                            return { false, "lift failed for an H_gamma cycle of length " + std::to_string(m) };
                    }
                }
        return { lifted > 0, std::to_string(lifted) + " cycles lifted" };
    }

    auto criterion_10() -> Outcome
    {
        std::uint64_t cycles = 0;
        for (int k : { 2, 3 }) {
            auto r = check_direction_bound(EdgeSubgraph::full(build_graph(2 * k + 1, k)), 10);
            cycles += r.instances_checked;
            if (r.violations || r.truncated)
                return { false, "direction bound" };
        }
        auto g = build_graph(7, 3);
        auto s = heuristic_extremal(g, 14).witness;
        if (contains_cycle(s, 14))
            return { false, "no C14-free subgraph" };
        auto reports = verify_direction_lemmas(s, 2, 2);
        for (auto & r : reports)
            if (r.violations || r.truncated)
                return { false, r.lemma };
        return { true, std::to_string(cycles) + " cycles, " + std::to_string(reports[1].instances_checked) + " C8 pairs in a "
                        + std::to_string(s.edge_count()) + "-edge C14-free subgraph" };
    }

    auto criterion_11(const std::vector<Corpus> & corpora) -> Outcome
    {
        std::size_t checked = 0;
        for (auto & c : corpora)
            for (auto & s : c.members) {
                std::uint64_t aux = 0;
                for (auto & gamma : all_gammas(*c.host))
                    aux += tally_cycles(build_hgamma(s, gamma).adjacency(), 4, default_cycle_cap).count;
                auto n8 = count_4a_cycles(s, 2);
                ++checked;
                if (n8.truncated || n8.count < aux)
                    return { false, "N(s,C8) = " + std::to_string(n8.count) + " < " + std::to_string(aux) };
            }
        return { true, std::to_string(checked) + " subgraphs" };
    }

    auto criterion_12() -> Outcome
    {
        std::size_t checked = 0;
        for (int l = 3; l <= 99; l += 2) {
            auto r = crossover_check(l);
            bool condition = Rational{ l } < Rational{ 49, 5 };
            auto chosen = *odd_graph_bounds(5, 4 * l + 2).front().exponent;
            auto expected = condition ? Rational{ -1, 2 * l + 1 } : Rational{ -1, 16 } + Rational{ 1, 8 * (l - 1) };
            ++checked;
            if (r.balanced_stronger != condition || chosen != expected)
                return { false, "mismatch at l = " + std::to_string(l) };
        }
        return { true, std::to_string(checked) + " odd l" };
    }

    auto capture(const std::string & command) -> std::optional<std::string>
    {
        FILE * pipe = popen(command.c_str(), "r");
        if (! pipe)
            return std::nullopt;
        std::string out;
        char buffer[4096];
        std::size_t got;
        while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
            out.append(buffer, got);
        if (pclose(pipe) != 0)
            return std::nullopt;
        return out;
    }

    auto criterion_13() -> Outcome
    {
#ifdef DJG_CLI_PATH
        std::string command = std::string{ DJG_CLI_PATH } + " verify --max-n 7 --seed 7 --workers 1 --format json";
        auto first = capture(command);
        auto second = capture(command);
        if (! first || ! second)
            return { false, "verify run failed" };
        return { *first == *second, std::to_string(first->size()) + " bytes, " + (*first == *second ? "identical" : "different") };
#else
        return { false, "CLI not built" };
#endif
    }
}

int main()
{
    using clock = std::chrono::steady_clock;
    auto corpora = make_corpora();

    struct Criterion
    {
        int id;
        std::string name;
        double limit_seconds;
        std::function<Outcome ()> run;
    };
    std::vector<Criterion> criteria{
        { 1, "edge-count identities", 1, criterion_1 },
        { 2, "girth six", 10, criterion_2 },
        { 3, "six-cycle census", 60, criterion_3 },
        { 4, "six-cycles through paths", 0, criterion_4 },
        { 5, "chi identities", 0, [&] { return criterion_5(corpora); } },
        { 6, "C6-free hard bound", 300, criterion_6 },
        { 7, "auxiliary identities", 0, [&] { return criterion_7(corpora); } },
        { 8, "freeness transfer", 0, [&] { return criterion_8(corpora); } },
        { 9, "cycle lifting", 0, [&] { return criterion_9(corpora); } },
        { 10, "direction lemmas", 600, criterion_10 },
        { 11, "N-count inequality", 0, [&] { return criterion_11(corpora); } },
        { 12, "crossover", 0, criterion_12 },
        { 13, "determinism", 0, criterion_13 },
    };

    int failures = 0;
    for (auto & c : criteria) {
        auto start = clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        }
        catch (const std::exception & e) {
            outcome = { false, std::string{ "exception: " } + e.what() };
        }
        double seconds = std::chrono::duration<double>(clock::now() - start).count();
        bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
        bool pass = outcome.pass && in_time;
        failures += ! pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3fs", seconds);
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << timing
                  << (c.limit_seconds > 0 ? ", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + "s" : std::string{})
                  << "] " << outcome.detail << (in_time ? "" : " (too slow)") << "\n";
    }
    std::cout << (failures == 0 ? "all 13 criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
