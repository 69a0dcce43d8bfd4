#include <djg/directions.hpp>
#include <djg/errors.hpp>

#include <algorithm>
#include <bit>
#include <set>

namespace djg {

auto DirectionSet::size() const -> int
{
    return std::popcount(_bits);
}

auto DirectionSet::elements() const -> std::vector<int>
{
    std::vector<int> result;
    for (auto b = _bits ; b != 0 ; b &= b - 1)
        result.push_back(std::countr_zero(b));
    return result;
}

auto direction(const DoubledJohnsonGraph & g, EdgeId e) -> int
{
    auto & edge = g.edge(e);
    auto diff = g.vertex(edge.lower).bits() ^ g.vertex(edge.upper).bits();
    return std::countr_zero(diff);
}

auto direction(const DoubledJohnsonGraph & g, VertexId u, VertexId v) -> int
{
    auto e = g.find_edge(u, v);
    if (! e)
        throw DomainError("direction of a non-edge");
    return direction(g, *e);
}

auto direction_set(const DoubledJohnsonGraph & g, std::span<const VertexId> walk, bool closed) -> DirectionSet
{
    DirectionSet result;
    for (std::size_t i = 0 ; i + 1 < walk.size() ; ++i)
        result.insert(direction(g, walk[i], walk[i + 1]));
    if (closed && walk.size() > 2)
        result.insert(direction(g, walk.back(), walk.front()));
    return result;
}

auto direction_set(const DoubledJohnsonGraph & g, const Cycle & c) -> DirectionSet
{
    return direction_set(g, c.vertices, true);
}

auto check_direction_bound(const EdgeSubgraph & s, int max_length, std::uint64_t cap) -> LemmaReport
{
    LemmaReport report{ "|D(C)| <= r for every 2r-cycle", 0, 0, false };
    auto adjacency = adjacency_of(s);
    auto & g = s.host();
    for (int length = 6 ; length <= max_length ; length += 2) {
        std::uint64_t seen = 0;
        for_each_cycle(adjacency, length, [&] (std::span<const std::uint32_t> c) {
            if (seen >= cap) {
                report.truncated = true;
                return false;
            }
            ++seen;
            ++report.instances_checked;
            if (direction_set(g, c, true).size() > length / 2)
                ++report.violations;
            return true;
        });
    }
    return report;
}

auto verify_direction_lemmas(const EdgeSubgraph & s, int a, int b, std::uint64_t cap) -> std::vector<LemmaReport>
{
    if (a < 2 || b < 2)
        throw DomainError("the split needs a, b >= 2");
    auto & g = s.host();
    int bridge = 4 * a + 4 * b - 2;
    if (contains_cycle(s, bridge))
        throw PreconditionError("subgraph contains a " + std::to_string(bridge) + "-cycle");

    LemmaReport bound{ "|D(C)| <= r for every 2r-cycle", 0, 0, false };
    LemmaReport overlap{ "|D(C) ∩ D(C')| >= 2 for edge-sharing 4a/4b cycles", 0, 0, false };

    auto first = enumerate_cycles(s, 4 * a, cap);
    auto second = a == b ? first : enumerate_cycles(s, 4 * b, cap);
    bound.truncated = overlap.truncated = first.truncated || second.truncated;

    auto measure = [&] (const CycleEnumeration & list, int length, std::vector<DirectionSet> & out) {
        for (auto & c : list.cycles) {
            out.push_back(direction_set(g, c));
            ++bound.instances_checked;
            if (out.back().size() > length / 2)
                ++bound.violations;
        }
    };
    std::vector<DirectionSet> first_dirs, second_dirs;
    measure(first, 4 * a, first_dirs);
    if (a != b)
        measure(second, 4 * b, second_dirs);
    else
        second_dirs = first_dirs;

    std::vector<std::vector<std::uint32_t>> by_edge(g.edge_count());
    for (std::uint32_t j = 0 ; j < second.cycles.size() ; ++j)
        for (auto e : cycle_edges(g, second.cycles[j]))
            by_edge[e].push_back(j);

    std::set<std::uint32_t> partners;
    for (std::uint32_t i = 0 ; i < first.cycles.size() ; ++i) {
        partners.clear();
        for (auto e : cycle_edges(g, first.cycles[i]))
            for (auto j : by_edge[e])
                if (! (a == b && j <= i))
                    partners.insert(j);
        for (auto j : partners) {
            ++overlap.instances_checked;
            if (first_dirs[i].intersection_with(second_dirs[j]).size() < 2)
                ++overlap.violations;
        }
    }
    return { bound, overlap };
}

}
