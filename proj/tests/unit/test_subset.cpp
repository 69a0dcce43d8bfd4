#include "oracle.hpp"

#include <djg/errors.hpp>
#include <djg/subset.hpp>

#include <doctest.h>

using namespace djg;

TEST_CASE("binomial agrees with Pascal's triangle")
{
    for (int n = 0; n <= 40; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(binomial(n, r) == oracle::choose(n, r));
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("binomial reports overflow")
{
    CHECK(binomial(63, 31) == oracle::choose(63, 31));
    CHECK_THROWS_AS(binomial(70, 35), ResourceError);
}

TEST_CASE("subsets come out in colex order and match brute force")
{
    for (int n = 1; n <= 9; ++n)
        for (int r = 0; r <= n; ++r) {
            auto mine = subsets_of_size(n, r);
            auto theirs = oracle::subsets(n, r);
            REQUIRE(mine.size() == theirs.size());
            for (std::size_t i = 0; i < mine.size(); ++i) {
                auto e = mine[i].elements();
                CHECK(oracle::Set(e.begin(), e.end()) == theirs[i]);
                if (i > 0) {
                    // colex: compare largest differing element
                    auto a = mine[i - 1].elements(), b = mine[i].elements();
                    CHECK(std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend()));
                }
            }
        }
}

TEST_CASE("set operations")
{
    auto a = KSubset::parse("{1,2,5}", 6);
    auto b = KSubset::parse("{2, 5, 6}", 6);
    CHECK(a.size() == 3);
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(3));
    CHECK(a.intersection_with(b).to_string() == "{2,5}");
    CHECK(a.union_with(b).to_string() == "{1,2,5,6}");
    CHECK(a.symmetric_difference(b).to_string() == "{1,6}");
    CHECK(KSubset::parse("{2,5}", 6).is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(KSubset::parse("{}", 4).size() == 0);
    CHECK(KSubset::parse("{}", 4).to_string() == "{}");
}

TEST_CASE("parse and to_string round trip")
{
    for (auto & s : subsets_of_size(7, 3))
        CHECK(KSubset::parse(s.to_string(), 7) == s);
    std::vector<int> elements{ 3, 1, 4 };
    CHECK(KSubset::from_elements(elements, 5).to_string() == "{1,3,4}");
}

TEST_CASE("bad subsets are rejected")
{
    CHECK_THROWS_AS(KSubset::parse("{1,7}", 6), ParseError);
    CHECK_THROWS_AS(KSubset::parse("{1,1}", 6), ParseError);
    CHECK_THROWS_AS(KSubset::parse("{0}", 6), ParseError);
    CHECK_THROWS_AS(KSubset::parse("1,2", 6), ParseError);
    CHECK_THROWS_AS(KSubset::parse("{1,x}", 6), ParseError);
    CHECK_THROWS_AS(KSubset(1, 6), DomainError);
    CHECK_THROWS_AS(KSubset(2, 64), DomainError);
    CHECK_THROWS(subsets_of_size(64, 2));
}
