#pragma once

#include <djg/cycles.hpp>
#include <djg/graph.hpp>
#include <djg/random.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace djg {

/// One color in 0..colors-1 per host edge.
struct EdgeColoring
{
    int colors = 0;
    std::vector<std::uint8_t> color_of;

    auto color_class(const GraphPtr & g, int color) const -> EdgeSubgraph;
};

enum class ColoringStrategy
{
    random,
    /// Edge at an upper vertex w gets the rank of the edge among w's k+1
    /// edges, folded modulo the color count. With at least k+1 colors every
    /// class gives each upper vertex degree 1 and so is a forest.
    acyclic_partition,
    /// Colors edges in id order, choosing the lowest color that does not
    /// close a monochromatic target cycle; falls back to color 0.
    greedy_avoidance
};

auto random_coloring(const DoubledJohnsonGraph & g, int colors, Rng & rng) -> EdgeColoring;
auto acyclic_partition_coloring(const DoubledJohnsonGraph & g, int colors) -> EdgeColoring;
auto greedy_avoidance_coloring(const DoubledJohnsonGraph & g, int colors, int length) -> EdgeColoring;

struct ColorClassResult
{
    int color = 0;
    std::size_t edges = 0;
    std::optional<Cycle> witness;   ///< a monochromatic target cycle, if any
};

struct RamseyTrial
{
    EdgeColoring coloring;
    std::vector<ColorClassResult> classes;

    auto monochromatic() const -> bool;
};

struct RamseyOptions
{
    int trials = 1;
    std::uint64_t seed = 1;
};

struct RamseyReport
{
    int colors = 0;
    int length = 0;
    ColoringStrategy strategy = ColoringStrategy::random;
    std::vector<RamseyTrial> trials;

    auto monochromatic_trials() const -> std::size_t;
};

auto strategy_name(ColoringStrategy s) -> std::string;
auto parse_strategy(const std::string & name) -> ColoringStrategy;

/// Throws DomainError for colors outside 1..255 or a bad length.
auto ramsey_search(const GraphPtr & g, int colors, int length, ColoringStrategy strategy, const RamseyOptions & options = {}) -> RamseyReport;

}
