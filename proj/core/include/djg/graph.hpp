#pragma once

#include <djg/subset.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace djg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Which side of the bipartition a vertex lies on: k-subsets or (k+1)-subsets.
enum class Part
{
    lower,
    upper
};

/// An edge u ⊂ w, stored by global vertex ids.
struct Edge
{
    VertexId lower;
    VertexId upper;

    auto operator== (const Edge &) const -> bool = default;
};

struct GraphLimits
{
    /// Construction refuses hosts with more edges than this.
    std::uint64_t max_edges = std::uint64_t{ 1 } << 24;
};

/**
 * The doubled Johnson graph J(n; k, k+1): k-subsets and (k+1)-subsets of
 * [n], adjacent by containment.
 *
 * Vertex ids are global. Ids [0, v1) are the k-subsets and [v1, v1 + v2) the
 * (k+1)-subsets, each block in colexicographic order. Edges are sorted by
 * (lower id, upper id), so the edges at a lower vertex form a contiguous
 * block of n - k ids.
 *
 * Immutable once built; share it through GraphPtr.
 */
class DoubledJohnsonGraph
{
    public:
        DoubledJohnsonGraph(int n, int k, GraphLimits limits = {});

        auto n() const -> int { return _n; }
        auto k() const -> int { return _k; }

        /// n = 2k + 1.
        auto is_doubled_odd() const -> bool { return _n == 2 * _k + 1; }

        auto lower_count() const -> std::size_t { return _lower_count; }
        auto upper_count() const -> std::size_t { return _vertices.size() - _lower_count; }
        auto vertex_count() const -> std::size_t { return _vertices.size(); }
        auto edge_count() const -> std::size_t { return _edges.size(); }

        auto part(VertexId v) const -> Part { return v < _lower_count ? Part::lower : Part::upper; }
        auto vertex(VertexId v) const -> const KSubset & { return _vertices.at(v); }
        auto vertices() const -> std::span<const KSubset> { return _vertices; }

        auto find_vertex(const KSubset & s) const -> std::optional<VertexId>;

        /// Throws DomainError if s is not a vertex.
        auto vertex_id(const KSubset & s) const -> VertexId;

        auto edge(EdgeId e) const -> const Edge & { return _edges.at(e); }
        auto edges() const -> std::span<const Edge> { return _edges; }

        /// Incident edge ids of v, ascending.
        auto incident_edges(VertexId v) const -> std::span<const EdgeId>;
        auto degree(VertexId v) const -> int { return static_cast<int>(incident_edges(v).size()); }

        auto other_end(EdgeId e, VertexId v) const -> VertexId;
        auto find_edge(VertexId a, VertexId b) const -> std::optional<EdgeId>;
        auto adjacent(VertexId a, VertexId b) const -> bool { return find_edge(a, b).has_value(); }

    private:
        int _n;
        int _k;
        std::size_t _lower_count = 0;
        std::vector<KSubset> _vertices;
        std::vector<Edge> _edges;
        std::vector<std::uint32_t> _incidence_offsets;
        std::vector<EdgeId> _incidence;
};

using GraphPtr = std::shared_ptr<const DoubledJohnsonGraph>;

/// Throws DomainError unless k >= 1, n >= 2k + 1, n <= 63; ResourceError if
/// the edge count exceeds the limit.
auto build_graph(int n, int k, GraphLimits limits = {}) -> GraphPtr;

/// |x| + |y| - 2|x ∩ y|. Throws DomainError if either set is not a vertex of g.
auto distance(const DoubledJohnsonGraph & g, const KSubset & x, const KSubset & y) -> int;

using EdgeMask = boost::dynamic_bitset<std::uint64_t>;

/**
 * A spanning subgraph of a host, as a bit set over the host's edge ids.
 */
class EdgeSubgraph
{
    public:
        EdgeSubgraph(GraphPtr host, EdgeMask mask);

        static auto empty(GraphPtr host) -> EdgeSubgraph;
        static auto full(GraphPtr host) -> EdgeSubgraph;

        /// Inverse of to_hex(). Throws ParseError on bad digits or bits beyond the edge count.
        static auto from_hex(GraphPtr host, std::string_view hex) -> EdgeSubgraph;

        auto host() const -> const DoubledJohnsonGraph & { return *_host; }
        auto host_ptr() const -> const GraphPtr & { return _host; }
        auto mask() const -> const EdgeMask & { return _mask; }

        auto contains(EdgeId e) const -> bool { return _mask.test(e); }
        auto insert(EdgeId e) -> void { _mask.set(e); }
        auto erase(EdgeId e) -> void { _mask.reset(e); }

        auto edge_count() const -> std::size_t { return _mask.count(); }
        auto degree(VertexId v) const -> int;
        auto edges() const -> std::vector<EdgeId>;

        /// Adjacent in this subgraph (not just in the host).
        auto adjacent(VertexId a, VertexId b) const -> bool;

        /// Lowercase hex of sum(2^e) over selected edges e, zero padded to
        /// ceil(|E| / 4) digits, most significant digit first.
        auto to_hex() const -> std::string;

        auto operator== (const EdgeSubgraph & other) const -> bool
        {
            return _host == other._host && _mask == other._mask;
        }

    private:
        GraphPtr _host;
        EdgeMask _mask;
};

/// Picks one incident edge for an upper vertex.
using EdgeChooser = std::function<EdgeId (const DoubledJohnsonGraph &, VertexId upper)>;

/// The edge to the smallest k-subset of w, which is w minus its largest element.
auto smallest_subset_chooser(const DoubledJohnsonGraph & g, VertexId upper) -> EdgeId;

/// One chosen edge per (k+1)-subset. Every upper vertex has degree 1, so the result is a forest.
auto cycle_free_lower_bound(const GraphPtr & g, const EdgeChooser & chooser = smallest_subset_chooser) -> EdgeSubgraph;

}
