#include <djg/graph_io.hpp>
#include <djg/errors.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace djg {

auto write_edge_list(std::ostream & out, const EdgeSubgraph & s) -> void
{
    auto & g = s.host();
    out << g.n() << ' ' << g.k() << ' ' << g.lower_count() << ' ' << g.upper_count() << ' ' << s.edge_count() << '\n';
    for (auto e : s.edges()) {
        auto & edge = g.edge(e);
        out << g.vertex(edge.lower).to_string() << ' ' << g.vertex(edge.upper).to_string() << '\n';
    }
}

auto write_edge_list(std::ostream & out, const GraphPtr & g) -> void
{
    write_edge_list(out, EdgeSubgraph::full(g));
}

auto read_edge_list(std::istream & in, GraphLimits limits) -> EdgeSubgraph
{
    std::string line;
    if (! std::getline(in, line))
        throw ParseError("missing header line");

    std::istringstream header{ line };
    long long n, k, v1, v2, m;
    if (! (header >> n >> k >> v1 >> v2 >> m))
        throw ParseError("header must be 'n k |V1| |V2| |E|'");
    std::string rest;
    if (header >> rest)
        throw ParseError("trailing text in header line");
    if (n < 0 || n > max_ground_size || k < 0 || k > n)
        throw ParseError("header parameters out of range");

    GraphPtr g;
    try {
        g = build_graph(static_cast<int>(n), static_cast<int>(k), limits);
    }
    catch (const DomainError & e) {
        throw ParseError(std::string{ "invalid host in header: " } + e.what());
    }
    if (static_cast<std::size_t>(v1) != g->lower_count() || static_cast<std::size_t>(v2) != g->upper_count())
        throw ParseError("header part sizes do not match J(n;k,k+1)");
    if (m < 0 || static_cast<std::size_t>(m) > g->edge_count())
        throw ParseError("header edge count out of range");

    auto result = EdgeSubgraph::empty(g);
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto close = line.find('}');
        if (close == std::string::npos)
            throw ParseError("edge line needs two subsets: '" + line + "'");
        auto a = KSubset::parse(std::string_view{ line }.substr(0, close + 1), g->n());
        auto b = KSubset::parse(std::string_view{ line }.substr(close + 1), g->n());
        auto ia = g->find_vertex(a);
        auto ib = g->find_vertex(b);
        if (! ia || ! ib)
            throw ParseError("edge line names a non-vertex: '" + line + "'");
        auto e = g->find_edge(*ia, *ib);
        if (! e)
            throw ParseError("not an edge of the host: '" + line + "'");
        if (result.contains(*e))
            throw ParseError("duplicate edge: '" + line + "'");
        result.insert(*e);
        ++lines;
    }
    if (lines != static_cast<std::size_t>(m))
        throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines));
    return result;
}

}
