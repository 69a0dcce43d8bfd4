#include <djg/aux_graphs.hpp>
#include <djg/errors.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <iterator>

namespace djg {

auto AuxGraph::adjacency() const -> AdjacencyGraph
{
    AdjacencyGraph result{ vertices.size() };
    for (auto & e : edges)
        result.add_edge(e.a, e.b);
    return result;
}

auto AuxGraph::witness(std::uint32_t a, std::uint32_t b) const -> std::optional<VertexId>
{
    if (a > b)
        std::swap(a, b);
    auto it = std::ranges::lower_bound(edges, std::pair{ a, b }, {}, [] (const AuxEdge & e) { return std::pair{ e.a, e.b }; });
    if (it == edges.end() || it->a != a || it->b != b)
        return std::nullopt;
    return it->witness;
}

auto AuxGraph::local_index(VertexId host_vertex) const -> std::optional<std::uint32_t>
{
    auto it = std::ranges::lower_bound(vertices, host_vertex);
    if (it == vertices.end() || *it != host_vertex)
        return std::nullopt;
    return static_cast<std::uint32_t>(it - vertices.begin());
}

namespace {
    // Joins local vertices whose host vertices have an admissible common
    // neighbour in s. At most one witness may exist per pair.
    auto connect_by_two_paths(AuxGraph & aux, const std::function<bool (VertexId)> & admissible) -> void
    {
        auto & s = aux.source;
        auto & g = s.host();
        std::vector<std::vector<VertexId>> selected_neighbours(aux.vertices.size());
        for (std::size_t i = 0 ; i < aux.vertices.size() ; ++i) {
            auto y = aux.vertices[i];
            for (auto e : g.incident_edges(y))
                if (s.contains(e))
                    selected_neighbours[i].push_back(g.other_end(e, y));
            std::ranges::sort(selected_neighbours[i]);
        }

        std::vector<VertexId> common;
        for (std::uint32_t a = 0 ; a < aux.vertices.size() ; ++a)
            for (std::uint32_t b = a + 1 ; b < aux.vertices.size() ; ++b) {
                common.clear();
                std::ranges::set_intersection(selected_neighbours[a], selected_neighbours[b], std::back_inserter(common));
                std::optional<VertexId> witness;
                for (auto w : common) {
                    if (! admissible(w))
                        continue;
                    if (witness)
                        throw InternalError("auxiliary edge has two witnesses " + g.vertex(*witness).to_string()
                                + " and " + g.vertex(w).to_string());
                    witness = w;
                }
                if (witness)
                    aux.edges.push_back(AuxEdge{ a, b, *witness });
            }
    }
}

auto build_hx(const EdgeSubgraph & s, VertexId center) -> AuxGraphHx
{
    auto & g = s.host();
    if (center >= g.vertex_count())
        throw DomainError("center vertex id " + std::to_string(center) + " out of range");

    AuxGraphHx result{ { s, {}, {} }, center };
    auto x = g.vertex(center);
    auto inside = x.bits();
    std::uint64_t outside = 0;
    for (int e = 1 ; e <= g.n() ; ++e)
        if (! x.contains(e))
            outside |= std::uint64_t{ 1 } << e;

    // distance 2 within a part: swap one element for one outside element
    for (auto i = inside ; i != 0 ; i &= i - 1)
        for (auto o = outside ; o != 0 ; o &= o - 1) {
            auto bits = (inside & ~(i & (~i + 1))) | (o & (~o + 1));
            result.vertices.push_back(g.vertex_id(KSubset{ bits, g.n() }));
        }
    std::ranges::sort(result.vertices);

    connect_by_two_paths(result, [&] (VertexId w) { return ! g.adjacent(center, w); });
    return result;
}

auto build_hgamma(const EdgeSubgraph & s, const KSubset & gamma) -> AuxGraphHgamma
{
    auto & g = s.host();
    if (gamma.size() != g.k() - 1 || (gamma.bits() >> (g.n() + 1)) != 0)
        throw DomainError("gamma must be a " + std::to_string(g.k() - 1) + "-subset of [" + std::to_string(g.n()) + "], got "
                + gamma.to_string());

    AuxGraphHgamma result{ { s, {}, {} }, KSubset{ gamma.bits(), g.n() } };
    for (int e = 1 ; e <= g.n() ; ++e)
        if (! gamma.contains(e))
            result.vertices.push_back(g.vertex_id(KSubset{ gamma.bits() | (std::uint64_t{ 1 } << e), g.n() }));
    std::ranges::sort(result.vertices);

    connect_by_two_paths(result, [] (VertexId) { return true; });
    return result;
}

auto all_gammas(const DoubledJohnsonGraph & g) -> std::vector<KSubset>
{
    return subsets_of_size(g.n(), g.k() - 1);
}

auto lift_cycle(const AuxGraph & aux, std::span<const std::uint32_t> aux_cycle) -> Cycle
{
    auto m = aux_cycle.size();
    if (m < 3)
        throw DomainError("an auxiliary cycle needs at least 3 vertices");
    auto sorted = std::vector<std::uint32_t>(aux_cycle.begin(), aux_cycle.end());
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end() || sorted.back() >= aux.vertices.size())
        throw DomainError("auxiliary cycle repeats a vertex or names an unknown one");

    std::vector<VertexId> witnesses;
    std::vector<VertexId> lifted;
    for (std::size_t i = 0 ; i < m ; ++i) {
        auto w = aux.witness(aux_cycle[i], aux_cycle[(i + 1) % m]);
        if (! w)
            throw DomainError("consecutive auxiliary vertices are not adjacent");
        lifted.push_back(aux.vertices[aux_cycle[i]]);
        lifted.push_back(*w);
        witnesses.push_back(*w);
    }
    std::ranges::sort(witnesses);
    if (std::ranges::adjacent_find(witnesses) != witnesses.end())
        throw InternalError("lifted cycle reuses a witness vertex");

    auto result = make_cycle(lifted);
    if (! is_cycle_of(aux.source, result))
        throw InternalError("lifted sequence is not a cycle of the source subgraph");
    return result;
}

auto check_hx_identity(const EdgeSubgraph & s, Part centers) -> IdentityCheck
{
    auto & g = s.host();
    IdentityCheck check;
    check.name = centers == Part::lower ? "sum_{x in V1} e(H_x) = (n-k-1) sum_{w in V2} C(d(w),2)"
                                        : "sum_{x in V2} e(H_x) = k sum_{w in V1} C(d(w),2)";
    for (VertexId x = 0 ; x < g.vertex_count() ; ++x)
        if (g.part(x) == centers)
            check.lhs += static_cast<std::int64_t>(build_hx(s, x).edge_count());
    if (centers == Part::lower)
        check.rhs = static_cast<std::int64_t>(g.n() - g.k() - 1) * static_cast<std::int64_t>(count_two_paths(s, Part::upper));
    else
        check.rhs = static_cast<std::int64_t>(g.k()) * static_cast<std::int64_t>(count_two_paths(s, Part::lower));
    return check;
}

auto check_hgamma_identity(const EdgeSubgraph & s) -> IdentityCheck
{
    IdentityCheck check;
    check.name = "sum_{gamma} e(H_gamma) = sum_{w in V2} C(d(w),2)";
    for (auto & gamma : all_gammas(s.host()))
        check.lhs += static_cast<std::int64_t>(build_hgamma(s, gamma).edge_count());
    check.rhs = static_cast<std::int64_t>(count_two_paths(s, Part::upper));
    return check;
}

auto expected_hx_size(const DoubledJohnsonGraph & g, Part center_part) -> std::size_t
{
    auto n = static_cast<std::size_t>(g.n());
    auto k = static_cast<std::size_t>(g.k());
    return center_part == Part::lower ? k * (n - k) : (k + 1) * (n - k - 1);
}

}
