#include <djg/extremal.hpp>
#include <djg/errors.hpp>

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>

namespace djg {

namespace {
    auto check_forbidden_length(int l2) -> void
    {
        if (l2 < 6 || l2 % 2 != 0)
            throw DomainError("forbidden cycle length must be even and at least 6, got " + std::to_string(l2));
    }

    auto verified(SearchResult result) -> SearchResult
    {
        if (contains_cycle(result.witness, result.forbidden_length))
            throw InternalError("search produced a witness containing a " + std::to_string(result.forbidden_length) + "-cycle");
        result.value = result.witness.edge_count();
        return result;
    }

    /// Host cycles as sorted edge-id lists plus the inverse index.
    struct CycleSystem
    {
        std::vector<std::vector<EdgeId>> cycles;
        std::vector<std::vector<std::uint32_t>> cycles_of_edge;
    };

    auto cycle_system(const GraphPtr & g, std::span<const Cycle> cycles) -> CycleSystem
    {
        CycleSystem system;
        system.cycles_of_edge.resize(g->edge_count());
        for (auto & c : cycles) {
            auto edges = cycle_edges(*g, c);
            std::ranges::sort(edges);
            auto index = static_cast<std::uint32_t>(system.cycles.size());
            for (auto e : edges)
                system.cycles_of_edge[e].push_back(index);
            system.cycles.push_back(std::move(edges));
        }
        return system;
    }

    auto run_tasks(unsigned workers, std::size_t task_count, const std::function<void (std::size_t)> & task) -> void
    {
        workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(task_count, 1))));
        if (workers == 1) {
            for (std::size_t i = 0 ; i < task_count ; ++i)
                task(i);
            return;
        }
        std::atomic<std::size_t> next{ 0 };
        std::vector<std::jthread> pool;
        for (unsigned w = 0 ; w < workers ; ++w)
            pool.emplace_back([&] {
                for (auto i = next.fetch_add(1) ; i < task_count ; i = next.fetch_add(1))
                    task(i);
            });
    }

    /// Shared incumbent: smallest hitting set (or largest kept set) so far.
    struct Incumbent
    {
        std::mutex lock;
        std::atomic<std::size_t> score;
        std::vector<EdgeId> edges;
        std::atomic<std::uint64_t> nodes{ 0 };
        std::atomic<bool> aborted{ false };

        auto offer_smaller(const std::vector<EdgeId> & candidate) -> void
        {
            std::lock_guard guard{ lock };
            if (candidate.size() < score.load()) {
                score.store(candidate.size());
                edges = candidate;
            }
        }

        auto offer_larger(const std::vector<EdgeId> & candidate) -> void
        {
            std::lock_guard guard{ lock };
            if (candidate.size() > score.load()) {
                score.store(candidate.size());
                edges = candidate;
            }
        }
    };

    class HittingSetSearch
    {
        public:
            HittingSetSearch(const CycleSystem & system, std::size_t edge_count, Incumbent & best, std::uint64_t budget) :
                _system(system),
                _best(best),
                _budget(budget),
                _chosen(edge_count, 0),
                _banned(edge_count, 0),
                _hits(system.cycles.size(), 0),
                _stamp(edge_count, 0),
                _unhit_degree(edge_count, 0)
            {
            }

            auto choose(EdgeId e) -> void
            {
                _chosen[e] = 1;
                _current.push_back(e);
                for (auto c : _system.cycles_of_edge[e])
                    ++_hits[c];
            }

            auto unchoose(EdgeId e) -> void
            {
                _chosen[e] = 0;
                _current.pop_back();
                for (auto c : _system.cycles_of_edge[e])
                    --_hits[c];
            }

            auto ban(EdgeId e) -> void { ++_banned[e]; }
            auto unban(EdgeId e) -> void { --_banned[e]; }

            /// The unhit cycle with fewest available edges; -1 if all are hit, -2 if one cannot be hit.
            auto pick_cycle() const -> int
            {
                int pick = -1;
                std::size_t fewest = SIZE_MAX;
                for (std::size_t c = 0 ; c < _system.cycles.size() ; ++c) {
                    if (_hits[c] > 0)
                        continue;
                    std::size_t available = 0;
                    for (auto e : _system.cycles[c])
                        available += _banned[e] ? 0 : 1;
                    if (available == 0)
                        return -2;
                    if (available < fewest) {
                        fewest = available;
                        pick = static_cast<int>(c);
                    }
                }
                return pick;
            }

            /// Available edges of a cycle, most useful first.
            auto branch_edges(int cycle) const -> std::vector<EdgeId>
            {
                std::vector<std::pair<std::size_t, EdgeId>> scored;
                for (auto e : _system.cycles[static_cast<std::size_t>(cycle)]) {
                    if (_banned[e])
                        continue;
                    std::size_t unhit = 0;
                    for (auto c : _system.cycles_of_edge[e])
                        unhit += _hits[c] == 0 ? 1 : 0;
                    scored.emplace_back(unhit, e);
                }
                std::ranges::sort(scored, [] (auto & a, auto & b) {
                    return a.first != b.first ? a.first > b.first : a.second < b.second;
                });
                std::vector<EdgeId> result;
                for (auto & [score, e] : scored)
                    result.push_back(e);
                return result;
            }

            /// Greedy packing of unhit cycles that are disjoint on available edges.
            auto packing_bound() -> std::size_t
            {
                ++_epoch;
                std::size_t packed = 0;
                for (std::size_t c = 0 ; c < _system.cycles.size() ; ++c) {
                    if (_hits[c] > 0)
                        continue;
                    bool clash = false;
                    for (auto e : _system.cycles[c])
                        if (! _banned[e] && _stamp[e] == _epoch) {
                            clash = true;
                            break;
                        }
                    if (clash)
                        continue;
                    for (auto e : _system.cycles[c])
                        if (! _banned[e])
                            _stamp[e] = _epoch;
                    ++packed;
                }
                return packed;
            }

            /// Fewest available edges whose unhit-cycle counts add up to the number of unhit cycles.
            auto degree_bound() -> std::size_t
            {
                std::fill(_unhit_degree.begin(), _unhit_degree.end(), 0u);
                std::size_t unhit = 0;
                for (std::size_t c = 0 ; c < _system.cycles.size() ; ++c) {
                    if (_hits[c] > 0)
                        continue;
                    ++unhit;
                    for (auto e : _system.cycles[c])
                        if (! _banned[e])
                            ++_unhit_degree[e];
                }
                std::ranges::sort(_unhit_degree, std::greater<>{});
                std::size_t needed = 0, covered = 0;
                while (covered < unhit && needed < _unhit_degree.size() && _unhit_degree[needed] > 0)
                    covered += _unhit_degree[needed++];
                return needed;
            }

            auto search() -> void
            {
                if (_best.aborted.load(std::memory_order_relaxed))
                    return;
                if (_best.nodes.fetch_add(1, std::memory_order_relaxed) >= _budget) {
                    _best.aborted.store(true);
                    return;
                }
                int cycle = pick_cycle();
                if (cycle == -2)
                    return;
                if (cycle == -1) {
                    _best.offer_smaller(_current);
                    return;
                }
                if (_current.size() + packing_bound() >= _best.score.load())
                    return;
                if (_current.size() + degree_bound() >= _best.score.load())
                    return;

                auto branches = branch_edges(cycle);
                for (auto e : branches) {
                    choose(e);
                    search();
                    unchoose(e);
                    ban(e);
                }
                for (auto e : branches)
                    unban(e);
            }

        private:
            const CycleSystem & _system;
            Incumbent & _best;
            std::uint64_t _budget;
            std::vector<char> _chosen;
            std::vector<int> _banned;
            std::vector<int> _hits;
            std::vector<EdgeId> _current;
            std::vector<std::uint32_t> _stamp;
            std::uint32_t _epoch = 0;
            std::vector<std::uint32_t> _unhit_degree;
    };

    auto complement(const GraphPtr & g, const std::vector<EdgeId> & removed) -> EdgeSubgraph
    {
        auto result = EdgeSubgraph::full(g);
        for (auto e : removed)
            result.erase(e);
        return result;
    }

    auto removed_edges(const EdgeSubgraph & s) -> std::vector<EdgeId>
    {
        std::vector<EdgeId> result;
        for (EdgeId e = 0 ; e < s.host().edge_count() ; ++e)
            if (! s.contains(e))
                result.push_back(e);
        return result;
    }

    auto hitting_set_extremal(const GraphPtr & g, int l2, const CycleSystem & system, const SearchOptions & options) -> SearchResult
    {
        auto start = heuristic_extremal(g, l2, HeuristicParams{ std::nullopt, 2, options.cycle_cap });

        Incumbent best;
        best.edges = removed_edges(start.witness);
        best.score.store(best.edges.size());

        // every edge of an edge-transitive host lies on a forbidden cycle,
        // so some optimum deletes edge 0
        std::vector<EdgeId> forced;
        if (options.symmetry_breaking && ! system.cycles_of_edge[0].empty())
            forced.push_back(0);

        // root split: the branches of the first picked cycle are disjoint subtrees
        HittingSetSearch root{ system, g->edge_count(), best, options.node_budget };
        for (auto e : forced)
            root.choose(e);
        int first = root.pick_cycle();
        std::vector<EdgeId> branches;
        if (first >= 0)
            branches = root.branch_edges(first);
        else if (first == -1)
            best.offer_smaller(forced);
        best.nodes.fetch_add(1);

        run_tasks(options.workers, branches.size(), [&] (std::size_t i) {
            HittingSetSearch worker{ system, g->edge_count(), best, options.node_budget };
            for (auto e : forced)
                worker.choose(e);
            for (std::size_t j = 0 ; j < i ; ++j)
                worker.ban(branches[j]);
            worker.choose(branches[i]);
            worker.search();
        });

        SearchResult result{ l2, ! best.aborted.load(), 0, complement(g, best.edges), best.nodes.load(), best.aborted.load(),
                "hitting-set branch and bound over " + std::to_string(system.cycles.size()) + " host cycles" };
        return verified(std::move(result));
    }

    class InclusionSearch
    {
        public:
            InclusionSearch(const GraphPtr & g, int l2, Incumbent & best, std::uint64_t budget) :
                _g(g), _l2(l2), _best(best), _budget(budget), _current(g->vertex_count())
            {
            }

            auto can_include(EdgeId e) const -> bool
            {
                auto & edge = _g->edge(e);
                return ! has_path_of_length(_current, edge.lower, edge.upper, _l2 - 1);
            }

            auto include(EdgeId e) -> void
            {
                _current.add_edge(_g->edge(e).lower, _g->edge(e).upper);
                _kept.push_back(e);
            }

            auto exclude_last() -> void
            {
                auto e = _kept.back();
                _current.remove_edge(_g->edge(e).lower, _g->edge(e).upper);
                _kept.pop_back();
            }

            auto search(EdgeId next) -> void
            {
                if (_best.aborted.load(std::memory_order_relaxed))
                    return;
                if (_best.nodes.fetch_add(1, std::memory_order_relaxed) >= _budget) {
                    _best.aborted.store(true);
                    return;
                }
                auto total = _g->edge_count();
                if (_kept.size() + (total - next) <= _best.score.load())
                    return;
                if (next == total) {
                    _best.offer_larger(_kept);
                    return;
                }
                if (can_include(next)) {
                    include(next);
                    search(next + 1);
                    exclude_last();
                }
                search(next + 1);
            }

        private:
            GraphPtr _g;
            int _l2;
            Incumbent & _best;
            std::uint64_t _budget;
            AdjacencyGraph _current;
            std::vector<EdgeId> _kept;
    };

    auto inclusion_extremal(const GraphPtr & g, int l2, const SearchOptions & options) -> SearchResult
    {
        auto full = EdgeSubgraph::full(g);
        if (! contains_cycle(full, l2))
            return verified(SearchResult{ l2, true, 0, full, 1, false, "host has no forbidden cycle" });

        auto start = heuristic_extremal(g, l2, HeuristicParams{ std::nullopt, 1, options.cycle_cap });
        Incumbent best;
        best.edges = start.witness.edges();
        best.score.store(best.edges.size());

        // some optimum omits edge 0 (edge transitivity); decide it first
        EdgeId first_free = options.symmetry_breaking ? 1 : 0;
        auto total = static_cast<EdgeId>(g->edge_count());

        // prefixes over the next few edges form disjoint subtrees
        unsigned depth = 0;
        while ((1u << depth) < 4 * std::max(1u, options.workers) && first_free + depth < total)
            ++depth;
        if (options.workers <= 1)
            depth = 0;

        std::vector<std::uint32_t> prefixes;
        for (std::uint32_t p = 0 ; p < (1u << depth) ; ++p)
            prefixes.push_back(p);
        // include-first order: bit set means include, visit higher patterns first
        std::ranges::reverse(prefixes);

        run_tasks(options.workers, prefixes.size(), [&] (std::size_t i) {
            InclusionSearch worker{ g, l2, best, options.node_budget };
            auto pattern = prefixes[i];
            for (unsigned d = 0 ; d < depth ; ++d) {
                auto e = static_cast<EdgeId>(first_free + d);
                if ((pattern >> (depth - 1 - d)) & 1) {
                    if (! worker.can_include(e))
                        return;
                    worker.include(e);
                }
            }
            worker.search(static_cast<EdgeId>(first_free + depth));
        });

        auto witness = EdgeSubgraph::empty(g);
        for (auto e : best.edges)
            witness.insert(e);
        SearchResult result{ l2, ! best.aborted.load(), 0, witness, best.nodes.load(), best.aborted.load(),
                "edge-inclusion branch and bound with path-based cycle detection" };
        return verified(std::move(result));
    }

    /// Heuristic state over an enumerated cycle system.
    class CycleGuidedImprover
    {
        public:
            CycleGuidedImprover(const CycleSystem & system, EdgeSubgraph start) :
                _system(system), _current(std::move(start)), _missing(system.cycles.size(), 0)
            {
                for (std::size_t c = 0 ; c < system.cycles.size() ; ++c)
                    for (auto e : system.cycles[c])
                        _missing[c] += _current.contains(e) ? 0 : 1;
            }

            auto remove(EdgeId e) -> void
            {
                _current.erase(e);
                for (auto c : _system.cycles_of_edge[e])
                    ++_missing[c];
            }

            auto add(EdgeId e) -> void
            {
                _current.insert(e);
                for (auto c : _system.cycles_of_edge[e])
                    --_missing[c];
            }

            auto addable(EdgeId e) const -> bool
            {
                for (auto c : _system.cycles_of_edge[e])
                    if (_missing[c] == 1)
                        return false;
                return true;
            }

            auto delete_greedily() -> void
            {
                auto edges = _current.host().edge_count();
                std::vector<std::size_t> surviving(edges, 0);
                std::size_t alive = 0;
                for (std::size_t c = 0 ; c < _system.cycles.size() ; ++c)
                    if (_missing[c] == 0) {
                        ++alive;
                        for (auto e : _system.cycles[c])
                            ++surviving[e];
                    }
                while (alive > 0) {
                    EdgeId pick = 0;
                    for (EdgeId e = 1 ; e < edges ; ++e)
                        if (surviving[e] > surviving[pick])
                            pick = e;
                    for (auto c : _system.cycles_of_edge[pick])
                        if (_missing[c] == 0) {
                            --alive;
                            for (auto e : _system.cycles[c])
                                --surviving[e];
                        }
                    remove(pick);
                }
            }

            auto augment(std::optional<EdgeId> skip = std::nullopt) -> std::vector<EdgeId>
            {
                std::vector<EdgeId> added;
                for (EdgeId e = 0 ; e < _current.host().edge_count() ; ++e)
                    if (e != skip && ! _current.contains(e) && addable(e)) {
                        add(e);
                        added.push_back(e);
                    }
                return added;
            }

            auto swap_round() -> bool
            {
                bool improved = false;
                for (auto e : _current.edges()) {
                    if (! _current.contains(e))
                        continue;
                    remove(e);
                    auto added = augment(e);
                    if (added.size() >= 2) {
                        improved = true;
                        continue;
                    }
                    for (auto f : added)
                        remove(f);
                    add(e);
                }
                return improved;
            }

            auto result() const -> const EdgeSubgraph & { return _current; }

        private:
            const CycleSystem & _system;
            EdgeSubgraph _current;
            std::vector<std::size_t> _missing;
    };

    class PathGuidedImprover
    {
        public:
            PathGuidedImprover(EdgeSubgraph start, int l2) :
                _current(std::move(start)), _adjacency(adjacency_of(_current)), _l2(l2)
            {
            }

            auto addable(EdgeId e) const -> bool
            {
                auto & edge = _current.host().edge(e);
                return ! has_path_of_length(_adjacency, edge.lower, edge.upper, _l2 - 1);
            }

            auto add(EdgeId e) -> void
            {
                _current.insert(e);
                _adjacency.add_edge(_current.host().edge(e).lower, _current.host().edge(e).upper);
            }

            auto remove(EdgeId e) -> void
            {
                _current.erase(e);
                _adjacency.remove_edge(_current.host().edge(e).lower, _current.host().edge(e).upper);
            }

            auto augment(std::optional<EdgeId> skip = std::nullopt) -> std::vector<EdgeId>
            {
                std::vector<EdgeId> added;
                for (EdgeId e = 0 ; e < _current.host().edge_count() ; ++e)
                    if (e != skip && ! _current.contains(e) && addable(e)) {
                        add(e);
                        added.push_back(e);
                    }
                return added;
            }

            auto swap_round() -> bool
            {
                bool improved = false;
                for (auto e : _current.edges()) {
                    if (! _current.contains(e))
                        continue;
                    remove(e);
                    auto added = augment(e);
                    if (added.size() >= 2) {
                        improved = true;
                        continue;
                    }
                    for (auto f : added)
                        remove(f);
                    add(e);
                }
                return improved;
            }

            auto result() const -> const EdgeSubgraph & { return _current; }

        private:
            EdgeSubgraph _current;
            AdjacencyGraph _adjacency;
            int _l2;
    };
}

auto exact_extremal(const GraphPtr & g, int l2, const SearchOptions & options) -> SearchResult
{
    check_forbidden_length(l2);
    if (options.strategy == ExactStrategy::edge_inclusion)
        return inclusion_extremal(g, l2, options);

    auto full = EdgeSubgraph::full(g);
    auto cycles = enumerate_cycles(full, l2, options.cycle_cap);
    if (cycles.truncated) {
        if (options.strategy == ExactStrategy::hitting_set)
            throw ResourceError("host has more " + std::to_string(l2) + "-cycles than the cycle cap");
        return inclusion_extremal(g, l2, options);
    }
    if (cycles.cycles.empty())
        return verified(SearchResult{ l2, true, 0, full, 1, false, "host has no forbidden cycle" });
    return hitting_set_extremal(g, l2, cycle_system(g, cycles.cycles), options);
}

auto heuristic_extremal(const GraphPtr & g, int l2, const HeuristicParams & params) -> SearchResult
{
    check_forbidden_length(l2);
    auto start = params.start.value_or(EdgeSubgraph::full(g));
    if (start.host_ptr() != g)
        throw DomainError("heuristic start must be a subgraph of the given host");

    auto full = EdgeSubgraph::full(g);
    auto cycles = enumerate_cycles(full, l2, params.cycle_cap);
    if (! cycles.truncated) {
        auto system = cycle_system(g, cycles.cycles);
        CycleGuidedImprover improver{ system, start };
        improver.delete_greedily();
        improver.augment();
        for (int round = 0 ; round < params.max_swap_rounds && improver.swap_round() ; ++round)
            ;
        return verified(SearchResult{ l2, false, 0, improver.result(), 0, false,
                "greedy deletion over " + std::to_string(system.cycles.size()) + " host cycles with swaps" });
    }

    std::string method = "greedy growth with path checks";
    if (contains_cycle(start, l2)) {
        start = cycle_free_lower_bound(g);
        method += " from the cycle-free lower bound";
    }
    PathGuidedImprover improver{ start, l2 };
    improver.augment();
    for (int round = 0 ; round < params.max_swap_rounds && improver.swap_round() ; ++round)
        ;
    return verified(SearchResult{ l2, false, 0, improver.result(), 0, false, method });
}

auto count_4a_cycles(const EdgeSubgraph & s, int a, std::uint64_t cap) -> CycleCount
{
    if (a < 2)
        throw DomainError("a must be at least 2, got " + std::to_string(a));
    return count_cycles(s, 4 * a, cap);
}

}
