#include <djg/ramsey.hpp>
#include <djg/errors.hpp>

#include <algorithm>

namespace djg {

auto EdgeColoring::color_class(const GraphPtr & g, int color) const -> EdgeSubgraph
{
    if (color_of.size() != g->edge_count())
        throw DomainError("coloring does not match the host edge count");
    auto result = EdgeSubgraph::empty(g);
    for (EdgeId e = 0 ; e < color_of.size() ; ++e)
        if (color_of[e] == color)
            result.insert(e);
    return result;
}

auto RamseyTrial::monochromatic() const -> bool
{
    return std::ranges::any_of(classes, [] (const ColorClassResult & c) { return c.witness.has_value(); });
}

auto RamseyReport::monochromatic_trials() const -> std::size_t
{
    return static_cast<std::size_t>(std::ranges::count_if(trials, [] (const RamseyTrial & t) { return t.monochromatic(); }));
}

auto random_coloring(const DoubledJohnsonGraph & g, int colors, Rng & rng) -> EdgeColoring
{
    EdgeColoring result{ colors, std::vector<std::uint8_t>(g.edge_count()) };
    for (auto & c : result.color_of)
        c = static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(colors)));
    return result;
}

auto acyclic_partition_coloring(const DoubledJohnsonGraph & g, int colors) -> EdgeColoring
{
    EdgeColoring result{ colors, std::vector<std::uint8_t>(g.edge_count()) };
    for (auto w = static_cast<VertexId>(g.lower_count()) ; w < g.vertex_count() ; ++w) {
        int rank = 0;
        for (auto e : g.incident_edges(w))
            result.color_of[e] = static_cast<std::uint8_t>(rank++ % colors);
    }
    return result;
}

auto greedy_avoidance_coloring(const DoubledJohnsonGraph & g, int colors, int length) -> EdgeColoring
{
    EdgeColoring result{ colors, std::vector<std::uint8_t>(g.edge_count()) };
    std::vector<AdjacencyGraph> classes(static_cast<std::size_t>(colors), AdjacencyGraph{ g.vertex_count() });
    for (EdgeId e = 0 ; e < g.edge_count() ; ++e) {
        auto & edge = g.edge(e);
        int chosen = 0;
        for (int c = 0 ; c < colors ; ++c)
            if (! has_path_of_length(classes[static_cast<std::size_t>(c)], edge.lower, edge.upper, length - 1)) {
                chosen = c;
                break;
            }
        result.color_of[e] = static_cast<std::uint8_t>(chosen);
        classes[static_cast<std::size_t>(chosen)].add_edge(edge.lower, edge.upper);
    }
    return result;
}

auto strategy_name(ColoringStrategy s) -> std::string
{
    switch (s) {
        case ColoringStrategy::random: return "random";
        case ColoringStrategy::acyclic_partition: return "acyclic";
        case ColoringStrategy::greedy_avoidance: return "greedy";
    }
    return "unknown";
}

auto parse_strategy(const std::string & name) -> ColoringStrategy
{
    if (name == "random")
        return ColoringStrategy::random;
    if (name == "acyclic")
        return ColoringStrategy::acyclic_partition;
    if (name == "greedy")
        return ColoringStrategy::greedy_avoidance;
    throw DomainError("unknown coloring strategy '" + name + "' (expected random, acyclic or greedy)");
}

auto ramsey_search(const GraphPtr & g, int colors, int length, ColoringStrategy strategy, const RamseyOptions & options) -> RamseyReport
{
    if (colors < 1 || colors > 255)
        throw DomainError("color count must lie in 1..255, got " + std::to_string(colors));
    if (length < 6 || length % 2 != 0)
        throw DomainError("target cycle length must be even and at least 6, got " + std::to_string(length));
    if (options.trials < 1)
        throw DomainError("need at least one trial");

    RamseyReport report{ colors, length, strategy, {} };
    Rng rng{ options.seed };
    // deterministic strategies give the same coloring every time
    int trials = strategy == ColoringStrategy::random ? options.trials : 1;
    for (int t = 0 ; t < trials ; ++t) {
        RamseyTrial trial;
        switch (strategy) {
            case ColoringStrategy::random: trial.coloring = random_coloring(*g, colors, rng); break;
            case ColoringStrategy::acyclic_partition: trial.coloring = acyclic_partition_coloring(*g, colors); break;
            case ColoringStrategy::greedy_avoidance: trial.coloring = greedy_avoidance_coloring(*g, colors, length); break;
        }
        for (int c = 0 ; c < colors ; ++c) {
            auto cls = trial.coloring.color_class(g, c);
            trial.classes.push_back(ColorClassResult{ c, cls.edge_count(), find_cycle(cls, length) });
        }
        report.trials.push_back(std::move(trial));
    }
    return report;
}

}
