#include <djg/verify.hpp>

#include <djg/aux_graphs.hpp>
#include <djg/bounds.hpp>
#include <djg/chi.hpp>
#include <djg/cycles.hpp>
#include <djg/directions.hpp>
#include <djg/errors.hpp>
#include <djg/random.hpp>
#include <djg/subset.hpp>

#include <algorithm>
#include <array>

namespace djg {

namespace {
    auto host_label(int n, int k) -> std::string
    {
        return "J(" + std::to_string(n) + ";" + std::to_string(k) + "," + std::to_string(k + 1) + ")";
    }

    class Recorder
    {
        public:
            Recorder(std::vector<CheckRecord> & out, std::string host) : _out(out), _host(std::move(host)) {}

            auto add(std::string check, std::uint64_t instances, std::uint64_t violations, std::string detail = {}) -> void
            {
                _out.push_back(CheckRecord{ _host, std::move(check), instances, violations, std::move(detail) });
            }

        private:
            std::vector<CheckRecord> & _out;
            std::string _host;
    };

    auto expected_path_count(const DoubledJohnsonGraph & g, const PathSpec & p) -> std::uint64_t
    {
        auto n = static_cast<std::uint64_t>(g.n());
        auto k = static_cast<std::uint64_t>(g.k());
        switch (p.length()) {
            case 1:
                return k * (n - k - 1);
            case 2:
                return g.part(p.vertices.back()) == Part::lower ? n - k - 1 : k;
            default:
                return 1;
        }
    }

    struct PathTally
    {
        std::uint64_t instances = 0;
        std::uint64_t violations = 0;
    };

    /// Every path of length 1, 2 and 3 of the full host, each direction once.
    auto check_paths(const DoubledJohnsonGraph & g) -> std::array<PathTally, 3>
    {
        std::array<PathTally, 3> tally{};
        auto check = [&] (const PathSpec & p) {
            auto & t = tally[static_cast<std::size_t>(p.length() - 1)];
            ++t.instances;
            if (six_cycles_through_path(g, p) != expected_path_count(g, p))
                ++t.violations;
        };
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            check(PathSpec{ { a, b } });
        }
        for (VertexId mid = 0; mid < g.vertex_count(); ++mid) {
            auto incident = g.incident_edges(mid);
            for (std::size_t i = 0; i < incident.size(); ++i)
                for (std::size_t j = i + 1; j < incident.size(); ++j)
                    check(PathSpec{ { g.other_end(incident[i], mid), mid, g.other_end(incident[j], mid) } });
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            for (auto ea : g.incident_edges(a)) {
                auto x = g.other_end(ea, a);
                if (x == b)
                    continue;
                for (auto eb : g.incident_edges(b)) {
                    auto y = g.other_end(eb, b);
                    if (y != a)
                        check(PathSpec{ { x, a, b, y } });
                }
            }
        }
        return tally;
    }

    /// Number of auxiliary cycles of length 3..max_length lifted, and the failures.
    auto lift_all(const AuxGraph & aux, int max_length, std::uint64_t & lifted, std::uint64_t & failures) -> void
    {
        auto adjacency = aux.adjacency();
        for (int m = 3; m <= max_length && m <= static_cast<int>(aux.vertices.size()); ++m)
            for_each_cycle(adjacency, m, [&] (std::span<const std::uint32_t> cycle) {
                ++lifted;
                try {
                    auto host_cycle = lift_cycle(aux, cycle);
                    if (host_cycle.length() != 2 * m || ! is_cycle_of(aux.source, host_cycle))
                        ++failures;
                }
                catch (const std::exception &) {
                    ++failures;
                }
                return true;
            });
    }

    auto check_host(const VerifyOptions & options, int n, int k, std::vector<CheckRecord> & out) -> void
    {
        Recorder rec(out, host_label(n, k));
        auto g = build_graph(n, k);
        auto full = EdgeSubgraph::full(g);
        auto edges = g->edge_count();

        bool counts_match = edges == (n - k) * binomial(n, k) && edges == (k + 1) * binomial(n, k + 1);
        rec.add("edge_count", 1, counts_match ? 0 : 1, std::to_string(edges));

        auto gir = girth(full);
        rec.add("girth_six", 1, gir == 6 ? 0 : 1, gir ? std::to_string(*gir) : "acyclic");

        auto census = count_cycles(full, 6, options.search.cycle_cap);
        auto formula = count_six_cycles(*g);
        rec.add("six_cycle_census", 1, (! census.truncated && census.count == formula) ? 0 : 1,
                std::to_string(census.count) + " enumerated, " + std::to_string(formula) + " by formula");

        if (edges <= options.path_check_edge_limit) {
            auto tally = check_paths(*g);
            for (int len = 1; len <= 3; ++len)
                rec.add("six_cycles_through_path_length_" + std::to_string(len), tally[len - 1].instances, tally[len - 1].violations);
        }

        std::uint64_t size_violations = 0;
        for (VertexId x = 0; x < g->vertex_count(); ++x)
            if (build_hx(full, x).vertices.size() != expected_hx_size(*g, g->part(x)))
                ++size_violations;
        auto gammas = all_gammas(*g);
        for (auto & gamma : gammas)
            if (build_hgamma(full, gamma).vertices.size() != static_cast<std::size_t>(n - k + 1))
                ++size_violations;
        rec.add("aux_vertex_counts", g->vertex_count() + gammas.size(), size_violations);

        auto host_cycles = enumerate_cycles(full, 6, options.search.cycle_cap);
        auto corpus = random_corpus(g, options.seed * 1'000'003 + static_cast<std::uint64_t>(n * 64 + k), options.corpus_size);

        std::uint64_t chi_sum_bad = 0, edge_identity_bad = 0, hx_bad = 0, hgamma_bad = 0;
        std::uint64_t lifted = 0, lift_bad = 0, n_inequality_bad = 0, n_inequality_truncated = 0;
        std::uint64_t direction_checked = 0, direction_bad = 0;
        for (auto & s : corpus) {
            auto chi = chi_vector(s, host_cycles.cycles);
            if (chi.ratio_sum() != Rational{ 1 })
                ++chi_sum_bad;
            if (! verify_edge_identity(s, chi).holds())
                ++edge_identity_bad;
            if (! check_hx_identity(s, Part::lower).holds() || ! check_hx_identity(s, Part::upper).holds())
                ++hx_bad;
            if (! check_hgamma_identity(s).holds())
                ++hgamma_bad;

            std::uint64_t aux_c4 = 0;
            for (auto & gamma : gammas) {
                auto h = build_hgamma(s, gamma);
                lift_all(h, 5, lifted, lift_bad);
                aux_c4 += tally_cycles(h.adjacency(), 4, options.search.cycle_cap).count;
            }
            auto c8 = count_4a_cycles(s, 2, options.search.cycle_cap);
            if (c8.truncated)
                ++n_inequality_truncated;
            else if (c8.count < aux_c4)
                ++n_inequality_bad;

            auto directions = check_direction_bound(s, 10, options.search.cycle_cap);
            direction_checked += directions.instances_checked;
            direction_bad += directions.violations;
        }
        auto m = corpus.size();
        rec.add("chi_ratio_sum", m, chi_sum_bad);
        rec.add("chi_edge_identity", m, edge_identity_bad);
        rec.add("hx_edge_sum_identity", m, hx_bad);
        rec.add("hgamma_edge_sum_identity", m, hgamma_bad);
        rec.add("hgamma_cycle_lifting", lifted, lift_bad);
        rec.add("c8_count_dominates_hgamma_c4", m - n_inequality_truncated, n_inequality_bad,
                n_inequality_truncated ? std::to_string(n_inequality_truncated) + " truncated" : "");
        rec.add("direction_bound", direction_checked, direction_bad);

        // Freeness transfer and counting inequalities need C_8- and C_10-free
        // subgraphs; the heuristic supplies them.
        for (int length : { 8, 10 }) {
            HeuristicParams params;
            params.cycle_cap = options.search.cycle_cap;
            auto found = heuristic_extremal(g, length, params);
            auto & s = found.witness;
            bool feasible = ! contains_cycle(s, length);
            bool above_lower = found.value >= binomial(n, k + 1);
            rec.add("heuristic_c" + std::to_string(length) + "_witness", 1, (feasible && above_lower) ? 0 : 1,
                    std::to_string(found.value) + " edges");
            if (length == 8) {
                std::uint64_t c4 = 0, checked = 0;
                for (auto & gamma : gammas) {
                    ++checked;
                    if (find_any_cycle(build_hgamma(s, gamma).adjacency(), 4))
                        ++c4;
                }
                for (VertexId x = 0; x < g->vertex_count(); ++x) {
                    ++checked;
                    if (find_any_cycle(build_hx(s, x).adjacency(), 4))
                        ++c4;
                }
                rec.add("c8_free_gives_c4_free_aux", checked, c4);
            }
            if (g->is_doubled_odd()) {
                auto chi = chi_vector(s, host_cycles.cycles);
                auto which = length == 8 ? CountingInequality::c8 : CountingInequality::c10;
                auto report = verify_counting_inequalities(s, chi, which);
                rec.add("counting_inequality_c" + std::to_string(length), 1, report.holds() ? 0 : 1,
                        "slack " + std::to_string(report.slack()));
            }
        }

        if (edges <= options.exact_search_edge_limit) {
            auto exact = exact_extremal(g, 6, options.search);
            auto lower = binomial(n, k + 1);
            bool ok = ! contains_cycle(exact.witness, 6) && exact.value == exact.witness.edge_count()
                    && exact.value >= lower && exact.value <= edges;
            if (g->is_doubled_odd())
                ok = ok && exact.value <= edges * 5 / 6;
            auto report = make_bound_report(n, k, 6, exact);
            ok = ok && (! exact.exact || report.consistent);
            rec.add("exact_c6_sandwich", 1, ok ? 0 : 1,
                    std::to_string(exact.value) + (exact.exact ? " exact" : " lower bound"));
        }
    }
}

auto VerifyReport::all_passed() const -> bool
{
    return std::all_of(checks.begin(), checks.end(), [] (const CheckRecord & c) { return c.passed(); });
}

auto run_verify(const VerifyOptions & options) -> VerifyReport
{
    if (options.max_n < 3 || options.max_n > max_ground_size)
        throw DomainError("max_n must lie in 3..63");
    VerifyReport report;
    report.options = options;

    for (int n = 3; n <= options.max_n; ++n)
        for (int k = 1; 2 * k + 1 <= n; ++k)
            check_host(options, n, k, report.checks);

    Recorder rec(report.checks, "-");
    std::uint64_t mismatches = 0, checked = 0;
    for (int l = 3; l <= 99; l += 2) {
        ++checked;
        auto crossover = crossover_check(l);
        auto bounds = odd_graph_bounds(1, 4 * l + 2);
        auto chosen = *bounds.front().exponent;
        auto best = std::min(crossover.balanced_exponent, crossover.unbalanced_exponent);
        if (crossover.balanced_stronger != crossover.below_threshold || chosen != best)
            ++mismatches;
    }
    rec.add("crossover_clause_selection", checked, mismatches);
    return report;
}

auto to_json(Json & j, const CheckRecord & c) -> void
{
    j = Json{
        { "host", c.host },
        { "check", c.check },
        { "instances", c.instances },
        { "violations", c.violations },
        { "passed", c.passed() },
        { "detail", c.detail },
    };
}

auto to_json(Json & j, const VerifyReport & r) -> void
{
    j = Json{
        { "max_n", r.options.max_n },
        { "seed", r.options.seed },
        { "corpus_size", r.options.corpus_size },
        { "all_passed", r.all_passed() },
        { "checks", r.checks },
    };
}

}
