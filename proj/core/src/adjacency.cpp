#include <djg/adjacency.hpp>
#include <djg/errors.hpp>

#include <algorithm>
#include <deque>
#include <string>

namespace djg {

auto AdjacencyGraph::add_edge(std::uint32_t a, std::uint32_t b) -> void
{
    if (a == b)
        return;
    auto insert = [] (std::vector<std::uint32_t> & list, std::uint32_t v) {
        auto it = std::ranges::lower_bound(list, v);
        if (it == list.end() || *it != v)
            list.insert(it, v);
    };
    insert(_neighbours.at(a), b);
    insert(_neighbours.at(b), a);
}

auto AdjacencyGraph::remove_edge(std::uint32_t a, std::uint32_t b) -> void
{
    auto erase = [] (std::vector<std::uint32_t> & list, std::uint32_t v) {
        auto it = std::ranges::lower_bound(list, v);
        if (it != list.end() && *it == v)
            list.erase(it);
    };
    erase(_neighbours.at(a), b);
    erase(_neighbours.at(b), a);
}

auto AdjacencyGraph::edge_count() const -> std::size_t
{
    std::size_t degree_sum = 0;
    for (auto & list : _neighbours)
        degree_sum += list.size();
    return degree_sum / 2;
}

auto AdjacencyGraph::adjacent(std::uint32_t a, std::uint32_t b) const -> bool
{
    if (a >= _neighbours.size() || b >= _neighbours.size())
        return false;
    return std::ranges::binary_search(_neighbours[a], b);
}

auto canonical_cycle(std::span<const std::uint32_t> cycle) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> result;
    auto size = cycle.size();
    if (size == 0)
        return result;
    auto start = static_cast<std::size_t>(std::ranges::min_element(cycle) - cycle.begin());
    auto next = cycle[(start + 1) % size];
    auto prev = cycle[(start + size - 1) % size];
    result.reserve(size);
    for (std::size_t i = 0 ; i < size ; ++i)
        result.push_back(next <= prev ? cycle[(start + i) % size] : cycle[(start + size - i) % size]);
    return result;
}

namespace {
    struct CycleSearch
    {
        const AdjacencyGraph & g;
        int length;
        const CycleVisitor & visit;
        std::vector<std::uint32_t> path;
        std::vector<char> on_path;
        std::vector<int> dist;
        std::uint32_t start = 0;

        CycleSearch(const AdjacencyGraph & graph, int len, const CycleVisitor & v) :
            g(graph), length(len), visit(v), on_path(graph.size(), 0), dist(graph.size(), -1)
        {
        }

        // distances from start inside the subgraph induced by vertices >= start
        auto prepare(std::uint32_t s) -> void
        {
            start = s;
            std::ranges::fill(dist, -1);
            std::deque<std::uint32_t> queue{ s };
            dist[s] = 0;
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                if (dist[v] * 2 > length)
                    continue;
                for (auto w : g.neighbours(v))
                    if (w > s && dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
            }
        }

        // path has `depth` edges and ends at v
        auto extend(std::uint32_t v, int depth) -> bool
        {
            if (depth == length - 1) {
                if (g.adjacent(v, start) && path[1] < v)
                    return visit(path);
                return true;
            }
            for (auto w : g.neighbours(v)) {
                if (w <= start || on_path[w] || dist[w] < 0 || dist[w] > length - depth - 1)
                    continue;
                on_path[w] = 1;
                path.push_back(w);
                bool keep_going = extend(w, depth + 1);
                path.pop_back();
                on_path[w] = 0;
                if (! keep_going)
                    return false;
            }
            return true;
        }

        auto run_from(std::uint32_t s) -> bool
        {
            if (g.neighbours(s).size() < 2)
                return true;
            prepare(s);
            path.assign(1, s);
            on_path[s] = 1;
            bool result = extend(s, 0);
            on_path[s] = 0;
            return result;
        }
    };

    auto check_length(int length) -> void
    {
        if (length < 3)
            throw DomainError("cycle length must be at least 3, got " + std::to_string(length));
    }
}

auto for_each_cycle_from(const AdjacencyGraph & g, int length, std::uint32_t start, const CycleVisitor & visit) -> bool
{
    check_length(length);
    CycleSearch search{ g, length, visit };
    return search.run_from(start);
}

auto for_each_cycle(const AdjacencyGraph & g, int length, const CycleVisitor & visit) -> bool
{
    check_length(length);
    CycleSearch search{ g, length, visit };
    for (std::uint32_t s = 0 ; s < g.size() ; ++s)
        if (! search.run_from(s))
            return false;
    return true;
}

auto list_cycles(const AdjacencyGraph & g, int length, std::uint64_t cap) -> CycleListing
{
    CycleListing result;
    for_each_cycle(g, length, [&] (std::span<const std::uint32_t> c) {
        if (result.cycles.size() >= cap) {
            result.truncated = true;
            return false;
        }
        result.cycles.emplace_back(c.begin(), c.end());
        return true;
    });
    return result;
}

auto tally_cycles(const AdjacencyGraph & g, int length, std::uint64_t cap) -> CycleTally
{
    CycleTally result;
    for_each_cycle(g, length, [&] (std::span<const std::uint32_t>) {
        if (result.count >= cap) {
            result.truncated = true;
            return false;
        }
        ++result.count;
        return true;
    });
    return result;
}

auto find_any_cycle(const AdjacencyGraph & g, int length) -> std::optional<std::vector<std::uint32_t>>
{
    std::optional<std::vector<std::uint32_t>> result;
    for_each_cycle(g, length, [&] (std::span<const std::uint32_t> c) {
        result.emplace(c.begin(), c.end());
        return false;
    });
    return result;
}

auto bfs_distances(const AdjacencyGraph & g, std::uint32_t source) -> std::vector<int>
{
    std::vector<int> dist(g.size(), -1);
    std::deque<std::uint32_t> queue{ source };
    dist[source] = 0;
    while (! queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbours(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

auto has_path_of_length(const AdjacencyGraph & g, std::uint32_t a, std::uint32_t b, int length) -> bool
{
    if (length < 1 || a == b)
        return false;
    auto dist = bfs_distances(g, b);
    if (dist[a] < 0 || dist[a] > length)
        return false;

    std::vector<char> on_path(g.size(), 0);
    on_path[a] = 1;
    auto search = [&] (auto & self, std::uint32_t v, int remaining) -> bool {
        if (remaining == 0)
            return v == b;
        for (auto w : g.neighbours(v)) {
            if (on_path[w] || dist[w] < 0 || dist[w] > remaining - 1)
                continue;
            if (w == b) {
                if (remaining == 1)
                    return true;
                continue;
            }
            on_path[w] = 1;
            bool found = self(self, w, remaining - 1);
            on_path[w] = 0;
            if (found)
                return true;
        }
        return false;
    };
    return search(search, a, length);
}

}
