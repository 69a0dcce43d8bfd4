#include <djg/random.hpp>

#include <doctest.h>

using namespace djg;

TEST_CASE("mt19937_64 reference output")
{
    // 10000th output of a default-seeded mt19937_64, fixed by the C++ standard
    Rng rng{ 5489 };
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i)
        x = rng.next();
    CHECK(x == 9981545732273789042ull);
}

TEST_CASE("draws stay in range")
{
    Rng rng{ 3 };
    for (int i = 0; i < 1000; ++i)
        CHECK(rng.below(7) < 7);
    int heads = 0;
    for (int i = 0; i < 10000; ++i)
        heads += rng.bernoulli(1, 4);
    CHECK(heads > 2200);
    CHECK(heads < 2800);
    Rng certain{ 9 };
    for (int i = 0; i < 100; ++i) {
        CHECK(certain.bernoulli(5, 5));
        CHECK_FALSE(certain.bernoulli(0, 5));
    }
}

TEST_CASE("corpora replay from the seed")
{
    auto g = build_graph(6, 2);
    auto a = random_corpus(g, 42, 25);
    auto b = random_corpus(g, 42, 25);
    auto c = random_corpus(g, 43, 25);
    REQUIRE(a.size() == 25);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("corpus densities cycle through tenths")
{
    auto g = build_graph(7, 3);
    auto corpus = random_corpus(g, 1, 20);
    CHECK(corpus[9].edge_count() == g->edge_count());
    CHECK(corpus[19].edge_count() == g->edge_count());
    CHECK(corpus[0].edge_count() < corpus[8].edge_count());
    CHECK(corpus[0].edge_count() < g->edge_count() / 4);
}
