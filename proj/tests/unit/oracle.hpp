#pragma once

// Brute-force reference implementations, written without the library's
// graph, subset or cycle code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::set<int>;

/// All r-subsets of {1..n}, in no particular order.
inline auto subsets(int n, int r) -> std::vector<Set>
{
    std::vector<Set> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (__builtin_popcount(m) != r)
            continue;
        Set s;
        for (int i = 0; i < n; ++i)
            if (m & (1u << i))
                s.insert(i + 1);
        out.push_back(s);
    }
    return out;
}

inline auto choose(int n, int r) -> std::uint64_t
{
    if (r < 0 || r > n)
        return 0;
    std::vector<std::vector<std::uint64_t>> pascal(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        pascal[i].assign(static_cast<std::size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j)
            pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
    }
    return pascal[n][r];
}

/// Undirected simple graph as adjacency sets.
struct Graph
{
    std::vector<std::set<int>> adj;

    auto edge_count() const -> std::size_t
    {
        std::size_t sum = 0;
        for (auto & a : adj)
            sum += a.size();
        return sum / 2;
    }
};

/// J(n;k,k+1) with vertices labelled by their sets; lower sets first.
struct Host
{
    std::vector<Set> vertices;
    Graph graph;
    std::vector<std::pair<int, int>> edges;
};

inline auto doubled_johnson(int n, int k) -> Host
{
    Host h;
    auto lower = subsets(n, k);
    auto upper = subsets(n, k + 1);
    h.vertices = lower;
    h.vertices.insert(h.vertices.end(), upper.begin(), upper.end());
    h.graph.adj.resize(h.vertices.size());
    for (std::size_t i = 0; i < lower.size(); ++i)
        for (std::size_t j = 0; j < upper.size(); ++j)
            if (std::includes(upper[j].begin(), upper[j].end(), lower[i].begin(), lower[i].end())) {
                int a = static_cast<int>(i), b = static_cast<int>(lower.size() + j);
                h.graph.adj[a].insert(b);
                h.graph.adj[b].insert(a);
                h.edges.emplace_back(a, b);
            }
    return h;
}

/// Every cycle of the given length as a sorted edge list, found by
/// extending simple paths from every start in both directions; each
/// cycle is seen 2L times and deduplicated through a set.
inline auto cycles_as_edge_sets(const Graph & g, int length) -> std::set<std::vector<std::pair<int, int>>>
{
    std::set<std::vector<std::pair<int, int>>> found;
    std::vector<int> path;
    std::vector<char> on(g.adj.size(), 0);
    auto record = [&] {
        std::vector<std::pair<int, int>> es;
        for (std::size_t i = 0; i < path.size(); ++i) {
            int a = path[i], b = path[(i + 1) % path.size()];
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(es.begin(), es.end());
        found.insert(es);
    };
    auto dfs = [&] (auto & self, int v) -> void {
        if (static_cast<int>(path.size()) == length) {
            if (g.adj[v].count(path.front()))
                record();
            return;
        }
        for (int w : g.adj[v])
            if (! on[w]) {
                on[w] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on[w] = 0;
            }
    };
    for (int s = 0; s < static_cast<int>(g.adj.size()); ++s) {
        path = { s };
        on[s] = 1;
        dfs(dfs, s);
        on[s] = 0;
    }
    return found;
}

inline auto count_cycles(const Graph & g, int length) -> std::uint64_t
{
    return cycles_as_edge_sets(g, length).size();
}

/// Shortest cycle by BFS from every vertex; 0 for a forest.
inline auto girth(const Graph & g) -> int
{
    int best = 0;
    int n = static_cast<int>(g.adj.size());
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::vector<int> queue{ s };
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
                else if (parent[v] != w) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best)
                        best = len;
                }
            }
        }
    }
    return best;
}

inline auto bfs_distance(const Graph & g, int a, int b) -> int
{
    std::vector<int> dist(g.adj.size(), -1);
    std::vector<int> queue{ a };
    dist[a] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : g.adj[queue[head]])
            if (dist[w] < 0) {
                dist[w] = dist[queue[head]] + 1;
                queue.push_back(w);
            }
    return dist[b];
}

/// Union-find acyclicity test over an edge list.
inline auto is_forest(std::size_t vertex_count, const std::vector<std::pair<int, int>> & edges) -> bool
{
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&] (int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            return false;
        parent[ra] = rb;
    }
    return true;
}

/// Number of dihedral orbits on the 64 edge subsets of a hexagon, by Burnside.
inline auto hexagon_orbit_count() -> int
{
    // Rotations by r fix 2^gcd(r,6) subsets. Reflections through two
    // opposite vertices pair the edges into 3 cycles; through two opposite
    // edge midpoints they fix two edges and pair the other four, giving 4.
    int fixed = 0;
    for (int r = 0; r < 6; ++r)
        fixed += 1 << std::gcd(r, 6);
    fixed += 3 * (1 << 3) + 3 * (1 << 4);
    return fixed / 12;
}

/// ex(G, C_L) by trying every edge subset, largest first. For tiny hosts only.
inline auto exhaustive_extremal(const Host & h, int length) -> std::size_t
{
    auto cycles = cycles_as_edge_sets(h.graph, length);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        index[h.edges[i]] = static_cast<int>(i);
    std::vector<std::uint64_t> cycle_masks;
    for (auto & c : cycles) {
        std::uint64_t m = 0;
        for (auto & e : c)
            m |= std::uint64_t{ 1 } << index.at(e);
        cycle_masks.push_back(m);
    }
    std::size_t best = 0;
    std::uint64_t total = std::uint64_t{ 1 } << h.edges.size();
    for (std::uint64_t s = 0; s < total; ++s) {
        auto size = static_cast<std::size_t>(__builtin_popcountll(s));
        if (size <= best)
            continue;
        bool free = std::none_of(cycle_masks.begin(), cycle_masks.end(), [&] (std::uint64_t c) { return (s & c) == c; });
        if (free)
            best = size;
    }
    return best;
}

}
