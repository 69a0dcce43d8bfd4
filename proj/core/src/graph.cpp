#include <djg/graph.hpp>
#include <djg/errors.hpp>

#include <algorithm>
#include <bit>

namespace djg {

DoubledJohnsonGraph::DoubledJohnsonGraph(int n, int k, GraphLimits limits) :
    _n(n),
    _k(k)
{
    if (k < 1)
        throw DomainError("k must be at least 1, got " + std::to_string(k));
    if (n < 2 * k + 1)
        throw DomainError("n must be at least 2k+1 = " + std::to_string(2 * k + 1) + ", got " + std::to_string(n));
    if (n > max_ground_size)
        throw DomainError("n must be at most " + std::to_string(max_ground_size) + ", got " + std::to_string(n));

    auto edge_total = static_cast<unsigned __int128>(binomial(n, k + 1)) * static_cast<unsigned>(k + 1);
    if (edge_total > limits.max_edges)
        throw ResourceError("J(" + std::to_string(n) + ";" + std::to_string(k) + "," + std::to_string(k + 1)
                + ") has more edges than the configured limit of " + std::to_string(limits.max_edges));

    _vertices = subsets_of_size(n, k);
    _lower_count = _vertices.size();
    auto uppers = subsets_of_size(n, k + 1);
    _vertices.insert(_vertices.end(), uppers.begin(), uppers.end());

    _edges.reserve(static_cast<std::size_t>(edge_total));
    for (VertexId u = 0 ; u < _lower_count ; ++u) {
        auto bits = _vertices[u].bits();
        // supersets by adding one missing element; increasing added element
        // does not give increasing colex order, so sort the block afterwards
        std::vector<VertexId> block;
        for (int e = 1 ; e <= n ; ++e)
            if (! ((bits >> e) & 1))
                block.push_back(vertex_id(KSubset{ bits | (std::uint64_t{ 1 } << e), n }));
        std::ranges::sort(block);
        for (auto w : block)
            _edges.push_back(Edge{ u, w });
    }

    std::vector<std::uint32_t> degree(_vertices.size(), 0);
    for (auto & e : _edges) {
        ++degree[e.lower];
        ++degree[e.upper];
    }
    _incidence_offsets.assign(_vertices.size() + 1, 0);
    for (std::size_t v = 0 ; v < _vertices.size() ; ++v)
        _incidence_offsets[v + 1] = _incidence_offsets[v] + degree[v];
    _incidence.resize(_incidence_offsets.back());
    std::vector<std::uint32_t> fill(_incidence_offsets.begin(), _incidence_offsets.end() - 1);
    for (EdgeId id = 0 ; id < _edges.size() ; ++id) {
        _incidence[fill[_edges[id].lower]++] = id;
        _incidence[fill[_edges[id].upper]++] = id;
    }
}

auto DoubledJohnsonGraph::find_vertex(const KSubset & s) const -> std::optional<VertexId>
{
    auto size = s.size();
    if (s.ground_size() > _n || (size != _k && size != _k + 1))
        return std::nullopt;
    if (s.bits() >> (_n + 1) != 0)
        return std::nullopt;

    auto first = _vertices.begin() + (size == _k ? 0 : static_cast<std::ptrdiff_t>(_lower_count));
    auto last = size == _k ? _vertices.begin() + static_cast<std::ptrdiff_t>(_lower_count) : _vertices.end();
    auto it = std::lower_bound(first, last, s, [] (const KSubset & a, const KSubset & b) { return a.bits() < b.bits(); });
    if (it == last || it->bits() != s.bits())
        return std::nullopt;
    return static_cast<VertexId>(it - _vertices.begin());
}

auto DoubledJohnsonGraph::vertex_id(const KSubset & s) const -> VertexId
{
    auto id = find_vertex(s);
    if (! id)
        throw DomainError(s.to_string() + " is not a vertex of J(" + std::to_string(_n) + ";"
                + std::to_string(_k) + "," + std::to_string(_k + 1) + ")");
    return *id;
}

auto DoubledJohnsonGraph::incident_edges(VertexId v) const -> std::span<const EdgeId>
{
    if (v >= _vertices.size())
        throw DomainError("vertex id " + std::to_string(v) + " out of range");
    return std::span<const EdgeId>{ _incidence }.subspan(_incidence_offsets[v], _incidence_offsets[v + 1] - _incidence_offsets[v]);
}

auto DoubledJohnsonGraph::other_end(EdgeId e, VertexId v) const -> VertexId
{
    auto & edge = _edges.at(e);
    if (edge.lower == v)
        return edge.upper;
    if (edge.upper == v)
        return edge.lower;
    throw DomainError("vertex " + std::to_string(v) + " is not an end of edge " + std::to_string(e));
}

auto DoubledJohnsonGraph::find_edge(VertexId a, VertexId b) const -> std::optional<EdgeId>
{
    if (a >= _vertices.size() || b >= _vertices.size())
        return std::nullopt;
    if (part(a) == part(b))
        return std::nullopt;
    if (part(a) == Part::upper)
        std::swap(a, b);
    auto first = _incidence.begin() + _incidence_offsets[a];
    auto last = _incidence.begin() + _incidence_offsets[a + 1];
    auto it = std::lower_bound(first, last, b, [&] (EdgeId e, VertexId target) { return _edges[e].upper < target; });
    if (it == last || _edges[*it].upper != b)
        return std::nullopt;
    return *it;
}

auto build_graph(int n, int k, GraphLimits limits) -> GraphPtr
{
    return std::make_shared<const DoubledJohnsonGraph>(n, k, limits);
}

auto distance(const DoubledJohnsonGraph & g, const KSubset & x, const KSubset & y) -> int
{
    g.vertex_id(x);
    g.vertex_id(y);
    return x.size() + y.size() - 2 * x.intersection_with(y).size();
}

EdgeSubgraph::EdgeSubgraph(GraphPtr host, EdgeMask mask) :
    _host(std::move(host)),
    _mask(std::move(mask))
{
    if (! _host)
        throw DomainError("subgraph needs a host graph");
    if (_mask.size() != _host->edge_count())
        throw DomainError("edge mask has " + std::to_string(_mask.size()) + " bits, host has "
                + std::to_string(_host->edge_count()) + " edges");
}

auto EdgeSubgraph::empty(GraphPtr host) -> EdgeSubgraph
{
    auto size = host->edge_count();
    return EdgeSubgraph{ std::move(host), EdgeMask(size) };
}

auto EdgeSubgraph::full(GraphPtr host) -> EdgeSubgraph
{
    auto size = host->edge_count();
    EdgeMask mask(size);
    mask.set();
    return EdgeSubgraph{ std::move(host), std::move(mask) };
}

auto EdgeSubgraph::degree(VertexId v) const -> int
{
    int result = 0;
    for (auto e : _host->incident_edges(v))
        result += _mask.test(e) ? 1 : 0;
    return result;
}

auto EdgeSubgraph::edges() const -> std::vector<EdgeId>
{
    std::vector<EdgeId> result;
    result.reserve(_mask.count());
    for (auto e = _mask.find_first() ; e != EdgeMask::npos ; e = _mask.find_next(e))
        result.push_back(static_cast<EdgeId>(e));
    return result;
}

auto EdgeSubgraph::adjacent(VertexId a, VertexId b) const -> bool
{
    auto e = _host->find_edge(a, b);
    return e && _mask.test(*e);
}

auto EdgeSubgraph::to_hex() const -> std::string
{
    static constexpr char digits[] = "0123456789abcdef";
    auto width = (_mask.size() + 3) / 4;
    std::string result(width, '0');
    for (std::size_t d = 0 ; d < width ; ++d) {
        unsigned nibble = 0;
        for (std::size_t b = 0 ; b < 4 ; ++b) {
            auto bit = d * 4 + b;
            if (bit < _mask.size() && _mask.test(bit))
                nibble |= 1u << b;
        }
        result[width - 1 - d] = digits[nibble];
    }
    return result;
}

auto EdgeSubgraph::from_hex(GraphPtr host, std::string_view hex) -> EdgeSubgraph
{
    auto result = empty(std::move(host));
    auto size = result._mask.size();
    for (std::size_t i = 0 ; i < hex.size() ; ++i) {
        char c = hex[hex.size() - 1 - i];
        unsigned nibble;
        if (c >= '0' && c <= '9')
            nibble = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nibble = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            nibble = static_cast<unsigned>(c - 'A' + 10);
        else
            throw ParseError(std::string{ "invalid hex digit '" } + c + "' in edge mask");
        for (std::size_t b = 0 ; b < 4 ; ++b) {
            if (! ((nibble >> b) & 1))
                continue;
            auto bit = i * 4 + b;
            if (bit >= size)
                throw ParseError("edge mask sets bit " + std::to_string(bit) + " but host has only " + std::to_string(size) + " edges");
            result._mask.set(bit);
        }
    }
    return result;
}

auto smallest_subset_chooser(const DoubledJohnsonGraph & g, VertexId upper) -> EdgeId
{
    auto bits = g.vertex(upper).bits();
    auto top = std::bit_width(bits) - 1;
    auto lower = g.vertex_id(KSubset{ bits & ~(std::uint64_t{ 1 } << top), g.n() });
    return *g.find_edge(lower, upper);
}

auto cycle_free_lower_bound(const GraphPtr & g, const EdgeChooser & chooser) -> EdgeSubgraph
{
    auto result = EdgeSubgraph::empty(g);
    for (auto w = static_cast<VertexId>(g->lower_count()) ; w < g->vertex_count() ; ++w) {
        auto e = chooser(*g, w);
        auto & edge = g->edge(e);
        if (edge.upper != w)
            throw DomainError("edge chooser returned an edge not incident with the given upper vertex");
        result.insert(e);
    }
    return result;
}

}
