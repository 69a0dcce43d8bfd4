#pragma once

#include <djg/graph.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace djg {

/**
 * Seeded generator for reproducible corpora. The engine is mt19937_64,
 * whose output sequence is fixed by the C++ standard; draws are mapped to
 * ranges with integer arithmetic only, so a seed replays identically on
 * every conforming platform.
 */
class Rng
{
    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}

        auto next() -> std::uint64_t { return _engine(); }

        /// Uniform-ish in [0, bound) by modulo; bound must be positive.
        auto below(std::uint64_t bound) -> std::uint64_t { return next() % bound; }

        /// True with probability numerator / denominator.
        auto bernoulli(std::uint64_t numerator, std::uint64_t denominator) -> bool { return below(denominator) < numerator; }

    private:
        std::mt19937_64 _engine;
};

/// Keeps each host edge independently with probability numerator / denominator.
auto random_subgraph(const GraphPtr & g, Rng & rng, std::uint64_t numerator, std::uint64_t denominator) -> EdgeSubgraph;

/// `count` random subgraphs whose densities cycle through 1/10, 2/10, ..., 10/10.
auto random_corpus(const GraphPtr & g, std::uint64_t seed, std::size_t count) -> std::vector<EdgeSubgraph>;

}
