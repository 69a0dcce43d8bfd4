#pragma once

#include <djg/adjacency.hpp>
#include <djg/cycles.hpp>
#include <djg/graph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace djg {

/// An edge of an auxiliary graph between local vertices a < b, with the host
/// vertex w that makes (vertices[a], w, vertices[b]) a 2-path of the subgraph.
struct AuxEdge
{
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    VertexId witness = 0;
};

/**
 * Common shape of H_x and H_gamma: a graph on a set of host vertices whose
 * edges stand for 2-paths of the source subgraph.
 */
struct AuxGraph
{
    EdgeSubgraph source;
    std::vector<VertexId> vertices;     ///< host ids, ascending
    std::vector<AuxEdge> edges;         ///< sorted by (a, b)

    auto edge_count() const -> std::size_t { return edges.size(); }
    auto adjacency() const -> AdjacencyGraph;
    auto witness(std::uint32_t a, std::uint32_t b) const -> std::optional<VertexId>;
    auto local_index(VertexId host_vertex) const -> std::optional<std::uint32_t>;
};

/// Vertices at distance 2 from the center in the host; y ~ z when some
/// w outside N_J(center) has (y, w, z) as a 2-path of the subgraph.
struct AuxGraphHx : AuxGraph
{
    VertexId center = 0;
};

/// k-subsets containing gamma (|gamma| = k-1); x ~ y when the subgraph has a
/// 2-path between them.
struct AuxGraphHgamma : AuxGraph
{
    KSubset gamma;
};

/// Throws DomainError for an invalid center. Throws InternalError if an edge
/// has more than one admissible witness.
auto build_hx(const EdgeSubgraph & s, VertexId center) -> AuxGraphHx;

/// Throws DomainError unless gamma is a (k-1)-subset of [n].
auto build_hgamma(const EdgeSubgraph & s, const KSubset & gamma) -> AuxGraphHgamma;

/// All (k-1)-subsets of [n]; for k = 1 this is just the empty set.
auto all_gammas(const DoubledJohnsonGraph & g) -> std::vector<KSubset>;

/**
 * Lifts an m-cycle (local vertex ids) of an auxiliary graph to the 2m-cycle
 * (y_0, w_0, y_1, w_1, ...) of the source subgraph. Throws DomainError if the
 * input is not a cycle of aux, InternalError if two witnesses coincide or the
 * result is not a cycle of the source.
 */
auto lift_cycle(const AuxGraph & aux, std::span<const std::uint32_t> aux_cycle) -> Cycle;

/// Exact integer identity check with both sides kept for reporting.
struct IdentityCheck
{
    std::string name;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;

    auto holds() const -> bool { return lhs == rhs; }
};

/// Centers in `centers`: sum of e(H_x) against (n-k-1) sum_{V2} C(d,2) for
/// lower centers, k sum_{V1} C(d,2) for upper centers.
auto check_hx_identity(const EdgeSubgraph & s, Part centers) -> IdentityCheck;

/// sum over gamma of e(H_gamma) against sum_{V2} C(d,2).
auto check_hgamma_identity(const EdgeSubgraph & s) -> IdentityCheck;

/// Expected |V(H_x)|: k(n-k) for a lower center, (k+1)(n-k-1) for an upper one.
auto expected_hx_size(const DoubledJohnsonGraph & g, Part center_part) -> std::size_t;

}
