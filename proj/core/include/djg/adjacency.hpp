#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace djg {

/**
 * A small undirected simple graph on vertices 0..size-1 with sorted
 * neighbour lists. Used for host subgraphs during search and for the
 * auxiliary graphs, which need odd cycles too.
 */
class AdjacencyGraph
{
    public:
        explicit AdjacencyGraph(std::size_t size = 0) : _neighbours(size) {}

        /// Ignores loops and repeated edges.
        auto add_edge(std::uint32_t a, std::uint32_t b) -> void;
        auto remove_edge(std::uint32_t a, std::uint32_t b) -> void;

        auto size() const -> std::size_t { return _neighbours.size(); }
        auto edge_count() const -> std::size_t;
        auto neighbours(std::uint32_t v) const -> std::span<const std::uint32_t> { return _neighbours[v]; }
        auto adjacent(std::uint32_t a, std::uint32_t b) const -> bool;

    private:
        std::vector<std::vector<std::uint32_t>> _neighbours;
};

/// Rotates and reflects a cyclic vertex sequence so that it starts at its
/// minimum vertex and continues toward the smaller of that vertex's two
/// cycle neighbours.
auto canonical_cycle(std::span<const std::uint32_t> cycle) -> std::vector<std::uint32_t>;

/// Receives each cycle once, in canonical form; return false to stop.
using CycleVisitor = std::function<bool (std::span<const std::uint32_t>)>;

/**
 * Visits every cycle of exactly the given length (>= 3) once. A cycle is
 * generated only from its minimum vertex, only through larger vertices, and
 * only in the direction that makes it canonical. Order is deterministic:
 * by minimum vertex, then lexicographic DFS order.
 *
 * Returns false if the visitor stopped the search.
 */
auto for_each_cycle(const AdjacencyGraph & g, int length, const CycleVisitor & visit) -> bool;

/// As for_each_cycle but restricted to cycles whose minimum vertex is `start`.
auto for_each_cycle_from(const AdjacencyGraph & g, int length, std::uint32_t start, const CycleVisitor & visit) -> bool;

struct CycleListing
{
    std::vector<std::vector<std::uint32_t>> cycles;
    bool truncated = false;
};

struct CycleTally
{
    std::uint64_t count = 0;
    bool truncated = false;
};

auto list_cycles(const AdjacencyGraph & g, int length, std::uint64_t cap) -> CycleListing;
auto tally_cycles(const AdjacencyGraph & g, int length, std::uint64_t cap) -> CycleTally;
auto find_any_cycle(const AdjacencyGraph & g, int length) -> std::optional<std::vector<std::uint32_t>>;

/// Is there a simple path with exactly `length` edges from a to b? Used to
/// test whether adding the edge {a, b} would close a cycle of length + 1.
auto has_path_of_length(const AdjacencyGraph & g, std::uint32_t a, std::uint32_t b, int length) -> bool;

/// BFS distances from source; unreachable vertices get -1.
auto bfs_distances(const AdjacencyGraph & g, std::uint32_t source) -> std::vector<int>;

}
