#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace djg {

/// Largest supported ground set; elements live in bit positions 1..n of a
/// single 64-bit word.
inline constexpr int max_ground_size = 63;

/**
 * A subset of [n] = {1, ..., n} stored as a bit pattern. Bit i is set iff
 * element i belongs to the subset; bit 0 is never set.
 *
 * Ordering compares the raw bit patterns, which for subsets of equal size is
 * colexicographic order.
 */
class KSubset
{
    public:
        KSubset() = default;

        /// Throws DomainError if n is out of range or bits lie outside 1..n.
        KSubset(std::uint64_t bits, int n);

        static auto from_elements(std::span<const int> elements, int n) -> KSubset;

        /// Parses "{1,2,5}" (whitespace tolerated, "{}" is the empty set).
        static auto parse(std::string_view text, int n) -> KSubset;

        auto bits() const -> std::uint64_t { return _bits; }
        auto ground_size() const -> int { return _n; }
        auto size() const -> int;
        auto contains(int element) const -> bool;
        auto elements() const -> std::vector<int>;
        auto is_subset_of(const KSubset & other) const -> bool { return (_bits & ~other._bits) == 0; }

        auto intersection_with(const KSubset & other) const -> KSubset;
        auto union_with(const KSubset & other) const -> KSubset;
        auto symmetric_difference(const KSubset & other) const -> KSubset;

        /// "{1,2,5}".
        auto to_string() const -> std::string;

        auto operator== (const KSubset &) const -> bool = default;
        auto operator<=> (const KSubset & other) const -> std::strong_ordering { return _bits <=> other._bits; }

    private:
        std::uint64_t _bits = 0;
        int _n = 0;
};

/// Exact binomial coefficient; throws ResourceError if it does not fit in 64 bits.
auto binomial(int n, int r) -> std::uint64_t;

/// All r-subsets of [n] in colexicographic order.
auto subsets_of_size(int n, int r) -> std::vector<KSubset>;

}
