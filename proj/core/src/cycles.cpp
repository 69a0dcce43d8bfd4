#include <djg/cycles.hpp>
#include <djg/errors.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace djg {

namespace {
    auto check_host_cycle_length(int length) -> void
    {
        if (length < 6 || length % 2 != 0)
            throw DomainError("cycle length must be even and at least 6 (the host is bipartite with girth 6), got "
                    + std::to_string(length));
    }

    auto to_cycle(std::span<const std::uint32_t> c) -> Cycle
    {
        return Cycle{ std::vector<VertexId>(c.begin(), c.end()) };
    }
}

auto make_cycle(std::span<const VertexId> vertices) -> Cycle
{
    return Cycle{ canonical_cycle(vertices) };
}

auto adjacency_of(const EdgeSubgraph & s) -> AdjacencyGraph
{
    auto & g = s.host();
    AdjacencyGraph result{ g.vertex_count() };
    for (auto e : s.edges())
        result.add_edge(g.edge(e).lower, g.edge(e).upper);
    return result;
}

auto cycle_edges(const DoubledJohnsonGraph & g, const Cycle & c) -> std::vector<EdgeId>
{
    std::vector<EdgeId> result;
    auto size = c.vertices.size();
    result.reserve(size);
    for (std::size_t i = 0 ; i < size ; ++i) {
        auto e = g.find_edge(c.vertices[i], c.vertices[(i + 1) % size]);
        if (! e)
            throw DomainError("cycle visits non-adjacent vertices");
        result.push_back(*e);
    }
    return result;
}

auto is_cycle_of(const EdgeSubgraph & s, const Cycle & c) -> bool
{
    auto & g = s.host();
    auto size = c.vertices.size();
    if (size < 6 || size % 2 != 0)
        return false;
    auto sorted = c.vertices;
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end() || sorted.back() >= g.vertex_count())
        return false;
    for (std::size_t i = 0 ; i < size ; ++i) {
        auto a = c.vertices[i];
        auto b = c.vertices[(i + 1) % size];
        if (g.part(a) == g.part(b) || ! s.adjacent(a, b))
            return false;
    }
    return true;
}

auto enumerate_cycles(const EdgeSubgraph & s, int length, std::uint64_t cap) -> CycleEnumeration
{
    check_host_cycle_length(length);
    auto listing = list_cycles(adjacency_of(s), length, cap);
    CycleEnumeration result;
    result.truncated = listing.truncated;
    result.cycles.reserve(listing.cycles.size());
    for (auto & c : listing.cycles)
        result.cycles.push_back(Cycle{ std::move(c) });
    return result;
}

auto count_cycles(const EdgeSubgraph & s, int length, std::uint64_t cap) -> CycleCount
{
    check_host_cycle_length(length);
    auto tally = tally_cycles(adjacency_of(s), length, cap);
    return CycleCount{ length, tally.count, tally.truncated };
}

auto contains_cycle(const EdgeSubgraph & s, int length) -> bool
{
    return find_cycle(s, length).has_value();
}

auto find_cycle(const EdgeSubgraph & s, int length) -> std::optional<Cycle>
{
    check_host_cycle_length(length);
    auto found = find_any_cycle(adjacency_of(s), length);
    if (! found)
        return std::nullopt;
    return to_cycle(*found);
}

auto six_cycles_through_path(const DoubledJohnsonGraph & g, const PathSpec & p) -> std::uint64_t
{
    auto length = p.length();
    if (length < 1 || length > 3)
        throw DomainError("path length must be 1, 2 or 3, got " + std::to_string(length));
    for (auto v : p.vertices)
        if (v >= g.vertex_count())
            throw DomainError("path vertex id out of range");
    for (std::size_t i = 0 ; i + 1 < p.vertices.size() ; ++i)
        if (! g.adjacent(p.vertices[i], p.vertices[i + 1]))
            throw DomainError("consecutive path vertices are not adjacent");
    auto sorted = p.vertices;
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end())
        throw DomainError("path repeats a vertex");

    std::vector<char> used(g.vertex_count(), 0);
    for (auto v : p.vertices)
        used[v] = 1;
    auto target = p.vertices.front();

    // completions: simple paths of 6 - length edges from the last vertex back to the first
    auto complete = [&] (auto & self, VertexId v, int remaining) -> std::uint64_t {
        std::uint64_t found = 0;
        for (auto e : g.incident_edges(v)) {
            auto w = g.other_end(e, v);
            if (remaining == 1) {
                found += (w == target) ? 1 : 0;
                continue;
            }
            if (used[w])
                continue;
            used[w] = 1;
            found += self(self, w, remaining - 1);
            used[w] = 0;
        }
        return found;
    };
    return complete(complete, p.vertices.back(), 6 - length);
}

auto count_six_cycles(const DoubledJohnsonGraph & g) -> std::uint64_t
{
    auto n = static_cast<unsigned __int128>(g.n());
    auto k = static_cast<unsigned __int128>(g.k());
    auto product = static_cast<unsigned __int128>(binomial(g.n(), g.k())) * (n - k) * k * (n - k - 1);
    if (product % 6 != 0)
        throw InternalError("C(n,k)(n-k)k(n-k-1) is not divisible by 6");
    auto result = product / 6;
    if (result > std::numeric_limits<std::uint64_t>::max())
        throw ResourceError("6-cycle count overflows 64 bits");
    return static_cast<std::uint64_t>(result);
}

auto count_two_paths(const EdgeSubgraph & s, Part middle) -> std::uint64_t
{
    auto & g = s.host();
    std::uint64_t total = 0;
    for (VertexId v = 0 ; v < g.vertex_count() ; ++v) {
        if (g.part(v) != middle)
            continue;
        std::uint64_t d = static_cast<std::uint64_t>(s.degree(v));
        total += d * (d - (d > 0 ? 1 : 0)) / 2;
    }
    return total;
}

auto degree_square_sum(const EdgeSubgraph & s, Part part) -> std::uint64_t
{
    auto & g = s.host();
    std::uint64_t total = 0;
    for (VertexId v = 0 ; v < g.vertex_count() ; ++v)
        if (g.part(v) == part) {
            std::uint64_t d = static_cast<std::uint64_t>(s.degree(v));
            total += d * d;
        }
    return total;
}

auto girth(const EdgeSubgraph & s) -> std::optional<int>
{
    auto adjacency = adjacency_of(s);
    auto size = adjacency.size();
    // no cycle in any doubled Johnson graph is shorter than 6
    constexpr int shortest_possible = 6;
    int best = std::numeric_limits<int>::max();

    std::vector<int> dist(size);
    std::vector<std::uint32_t> parent(size);
    for (std::uint32_t root = 0 ; root < size && best > shortest_possible ; ++root) {
        if (adjacency.neighbours(root).size() < 2)
            continue;
        std::ranges::fill(dist, -1);
        dist[root] = 0;
        parent[root] = root;
        std::deque<std::uint32_t> queue{ root };
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            if (2 * dist[v] + 1 >= best)
                break;
            for (auto w : adjacency.neighbours(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
                else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

}
