#pragma once

#include <djg/cycles.hpp>
#include <djg/graph.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace djg {

/// A set of ground-set elements (1-based) occurring as edge directions.
class DirectionSet
{
    public:
        DirectionSet() = default;
        explicit DirectionSet(std::uint64_t bits) : _bits(bits) {}

        auto bits() const -> std::uint64_t { return _bits; }
        auto size() const -> int;
        auto contains(int element) const -> bool { return element >= 1 && element < 64 && ((_bits >> element) & 1); }
        auto insert(int element) -> void { _bits |= std::uint64_t{ 1 } << element; }
        auto elements() const -> std::vector<int>;
        auto intersection_with(const DirectionSet & other) const -> DirectionSet { return DirectionSet{ _bits & other._bits }; }
        auto operator== (const DirectionSet &) const -> bool = default;

    private:
        std::uint64_t _bits = 0;
};

/// The single element of u Δ v for a host edge.
auto direction(const DoubledJohnsonGraph & g, EdgeId e) -> int;

/// Throws DomainError if u and v are not adjacent in the host.
auto direction(const DoubledJohnsonGraph & g, VertexId u, VertexId v) -> int;

/// Directions along a walk of adjacent vertices; `closed` adds the edge back to the start.
auto direction_set(const DoubledJohnsonGraph & g, std::span<const VertexId> walk, bool closed) -> DirectionSet;
auto direction_set(const DoubledJohnsonGraph & g, const Cycle & c) -> DirectionSet;

struct LemmaReport
{
    std::string lemma;
    std::uint64_t instances_checked = 0;
    std::uint64_t violations = 0;
    bool truncated = false;
};

/// |D(C)| <= r for every 2r-cycle of s with 6 <= 2r <= max_length.
auto check_direction_bound(const EdgeSubgraph & s, int max_length, std::uint64_t cap = default_cycle_cap) -> LemmaReport;

/**
 * Both direction lemmas for the split 4a + 4b = 4l + 4 (a, b >= 2):
 * |D(C)| <= r on every enumerated 4a- and 4b-cycle, and
 * |D(C) ∩ D(C')| >= 2 for every 4a-cycle C and distinct 4b-cycle C' that
 * share an edge. Throws PreconditionError if s contains a cycle of length
 * 4a + 4b - 2, DomainError if a or b is below 2.
 */
auto verify_direction_lemmas(const EdgeSubgraph & s, int a, int b, std::uint64_t cap = default_cycle_cap) -> std::vector<LemmaReport>;

}
