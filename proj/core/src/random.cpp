#include <djg/random.hpp>

namespace djg {

auto random_subgraph(const GraphPtr & g, Rng & rng, std::uint64_t numerator, std::uint64_t denominator) -> EdgeSubgraph
{
    auto result = EdgeSubgraph::empty(g);
    for (EdgeId e = 0 ; e < g->edge_count() ; ++e)
        if (rng.bernoulli(numerator, denominator))
            result.insert(e);
    return result;
}

auto random_corpus(const GraphPtr & g, std::uint64_t seed, std::size_t count) -> std::vector<EdgeSubgraph>
{
    Rng rng{ seed };
    std::vector<EdgeSubgraph> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0 ; i < count ; ++i)
        corpus.push_back(random_subgraph(g, rng, i % 10 + 1, 10));
    return corpus;
}

}
