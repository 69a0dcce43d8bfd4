#pragma once

#include <djg/cycles.hpp>
#include <djg/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace djg {

enum class ExactStrategy
{
    /// Hitting set when the host's forbidden cycles fit under the cycle cap,
    /// edge inclusion otherwise.
    automatic,
    /// Minimum set of edges meeting every forbidden cycle of the host.
    hitting_set,
    /// Decide edges in id order, rejecting an inclusion that closes a forbidden cycle.
    edge_inclusion
};

struct SearchOptions
{
    std::uint64_t node_budget = 50'000'000;
    std::uint64_t cycle_cap = default_cycle_cap;
    unsigned workers = 1;
    /// Fix the first branching edge using the edge-transitivity of the host.
    bool symmetry_breaking = true;
    ExactStrategy strategy = ExactStrategy::automatic;
};

/**
 * Best C_L-free subgraph found. `value` is always the edge count of
 * `witness`, and the witness has been re-checked with contains_cycle. When
 * `exact` is false the value is only a lower bound on ex(host, C_L).
 */
struct SearchResult
{
    int forbidden_length = 0;
    bool exact = false;
    std::size_t value = 0;
    EdgeSubgraph witness;
    std::uint64_t nodes_explored = 0;
    bool budget_hit = false;
    std::string method;
};

/// Throws DomainError unless l2 is even and >= 6.
auto exact_extremal(const GraphPtr & g, int l2, const SearchOptions & options = {}) -> SearchResult;

struct HeuristicParams
{
    /// Starting subgraph; the full host when absent. A start that is already
    /// C_L-free is only ever grown or improved.
    std::optional<EdgeSubgraph> start;
    int max_swap_rounds = 4;
    std::uint64_t cycle_cap = default_cycle_cap;
};

/**
 * Greedy deletion (drop the edge on the most surviving forbidden cycles,
 * lowest id on ties), then greedy re-insertion, then single-edge swaps that
 * trade one edge for two. If the host's forbidden cycles exceed the cap the
 * deletion phase is replaced by growing from the start (or from the
 * cycle-free lower bound when the start is not feasible) with path checks.
 */
auto heuristic_extremal(const GraphPtr & g, int l2, const HeuristicParams & params = {}) -> SearchResult;

/// N(s, C_4a) by enumeration. Throws DomainError for a < 2.
auto count_4a_cycles(const EdgeSubgraph & s, int a, std::uint64_t cap = default_cycle_cap) -> CycleCount;

}
