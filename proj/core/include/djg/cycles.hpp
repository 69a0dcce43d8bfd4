#pragma once

#include <djg/adjacency.hpp>
#include <djg/graph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace djg {

inline constexpr std::uint64_t default_cycle_cap = 10'000'000;

/// A cycle of a host subgraph as global vertex ids, in canonical form
/// (starts at its minimum id, heads toward the smaller neighbour).
struct Cycle
{
    std::vector<VertexId> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()); }
    auto operator== (const Cycle &) const -> bool = default;
    auto operator<=> (const Cycle &) const = default;
};

/// Canonicalizes any cyclic vertex sequence.
auto make_cycle(std::span<const VertexId> vertices) -> Cycle;

/// A path (u_0, ..., u_i) of global vertex ids; length is i.
struct PathSpec
{
    std::vector<VertexId> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }
};

struct CycleEnumeration
{
    std::vector<Cycle> cycles;
    bool truncated = false;
};

struct CycleCount
{
    int length = 0;
    std::uint64_t count = 0;
    bool truncated = false;
};

/// Neighbour structure of the selected edges, indexed by global vertex id.
auto adjacency_of(const EdgeSubgraph & s) -> AdjacencyGraph;

/// Host edge ids around the cycle; edge i joins vertices i and i+1 (mod length).
/// Throws DomainError if consecutive vertices are not adjacent in the host.
auto cycle_edges(const DoubledJohnsonGraph & g, const Cycle & c) -> std::vector<EdgeId>;

/// Distinct vertices, alternating parts, every edge selected in s.
auto is_cycle_of(const EdgeSubgraph & s, const Cycle & c) -> bool;

/// Every cycle of exactly `length` edges, canonical, deterministic order,
/// at most `cap` of them. Throws DomainError unless length is even and >= 6.
auto enumerate_cycles(const EdgeSubgraph & s, int length, std::uint64_t cap = default_cycle_cap) -> CycleEnumeration;

auto count_cycles(const EdgeSubgraph & s, int length, std::uint64_t cap = default_cycle_cap) -> CycleCount;
auto contains_cycle(const EdgeSubgraph & s, int length) -> bool;
auto find_cycle(const EdgeSubgraph & s, int length) -> std::optional<Cycle>;

/// Number of 6-cycles of the full host containing p as a subpath. Counted
/// by completing p with paths back to its start; p must have length 1, 2 or 3.
auto six_cycles_through_path(const DoubledJohnsonGraph & g, const PathSpec & p) -> std::uint64_t;

/// n(C_6) = C(n,k)(n-k)k(n-k-1)/6, checked to divide exactly.
auto count_six_cycles(const DoubledJohnsonGraph & g) -> std::uint64_t;

/// sum over w in the part of C(d_s(w), 2): the 2-paths whose middle vertex lies in that part.
auto count_two_paths(const EdgeSubgraph & s, Part middle) -> std::uint64_t;

/// sum over w in the part of d_s(w)^2.
auto degree_square_sum(const EdgeSubgraph & s, Part part) -> std::uint64_t;

/// Shortest cycle length; nullopt for a forest.
auto girth(const EdgeSubgraph & s) -> std::optional<int>;

}
