#pragma once

#include <djg/cycles.hpp>
#include <djg/graph.hpp>
#include <djg/rational.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace djg {

/// Edge subsets of a labelled hexagon: bit i is the edge between cycle
/// positions i and i+1 (mod 6).
using HexagonMask = std::uint8_t;

inline constexpr int hexagon_symmetry_count = 12;

/// Image of an edge subset under symmetry 0..11 of the hexagon: 0..5 are
/// rotations by that many positions, 6..11 are the reflections.
auto hexagon_image(HexagonMask mask, int symmetry) -> HexagonMask;

/// One dihedral orbit of hexagon edge subsets.
struct C6Class
{
    int id = 0;
    HexagonMask representative = 0;   ///< least mask in the orbit
    int edge_count = 0;
    std::vector<HexagonMask> members;

    /// Isomorphism type of the edge subset as a graph: "C6", or the path
    /// components by edge count such as "P3+P2" ("E" when empty). Two orbits
    /// can share a shape.
    std::string shape;
    int iso_class = 0;
};

/**
 * The 64 edge subsets of a hexagon partitioned into orbits under the
 * dihedral group of order 12, ordered by (edge count, representative).
 * The orbits are further grouped into iso classes by shape.
 */
class C6ClassTable
{
    public:
        C6ClassTable();

        auto classes() const -> std::span<const C6Class> { return _classes; }
        auto size() const -> std::size_t { return _classes.size(); }
        auto iso_class_count() const -> int { return _iso_class_count; }
        auto class_of(HexagonMask mask) const -> int { return _class_of[mask & 63]; }

        /// The orbit of a 4-edge path inside the hexagon.
        auto path_of_four_class() const -> int { return _path_of_four; }
        /// The unique 5-edge orbit.
        auto five_edge_class() const -> int { return _five_edges; }
        /// The full hexagon.
        auto full_class() const -> int { return _full; }

    private:
        std::vector<C6Class> _classes;
        std::array<int, 64> _class_of{};
        int _iso_class_count = 0;
        int _path_of_four = -1;
        int _five_edges = -1;
        int _full = -1;
};

auto build_class_table() -> C6ClassTable;
auto class_table() -> const C6ClassTable &;

/// Which edges of the 6-cycle h lie in s, as a hexagon mask.
auto hexagon_mask(const EdgeSubgraph & s, const Cycle & h) -> HexagonMask;

/// Per-orbit counts of G ∩ H over all 6-cycles H of the host. Ratio i is
/// counts[i] / n_c6.
struct ChiVector
{
    std::vector<std::uint64_t> counts;
    std::uint64_t n_c6 = 0;

    auto ratio(int class_id) const -> Rational;
    auto ratio_sum() const -> Rational;
    auto count_of(int class_id) const -> std::uint64_t { return counts.at(static_cast<std::size_t>(class_id)); }
};

/// Enumerates the host's 6-cycles itself. Throws ResourceError if there are more than `cap`.
auto chi_vector(const EdgeSubgraph & s, std::uint64_t cap = default_cycle_cap) -> ChiVector;

/// Uses a precomputed list of all host 6-cycles.
auto chi_vector(const EdgeSubgraph & s, std::span<const Cycle> host_six_cycles) -> ChiVector;

/// e(s)/e(host) against (1/6) * sum over classes of edge_count * ratio.
struct EdgeIdentityReport
{
    Rational edge_ratio;
    Rational weighted_chi;
    auto holds() const -> bool { return edge_ratio == weighted_chi; }
};

auto verify_edge_identity(const EdgeSubgraph & s, const ChiVector & chi) -> EdgeIdentityReport;

enum class CountingInequality
{
    c8,     ///< k e(host) >= (6 chi_6 + 2 chi_5 + chi_P5) n(C_6), for C_8-free s
    c10     ///< (2k-1) e(host) >= (6 chi_6 + chi_5) n(C_6), for C_10-free s
};

struct InequalityReport
{
    CountingInequality which = CountingInequality::c8;
    std::int64_t bound = 0;         ///< left side
    std::int64_t weighted = 0;      ///< right side, in cycle counts
    std::uint64_t chi_full = 0;
    std::uint64_t chi_five = 0;
    std::uint64_t chi_path_of_four = 0;

    auto slack() const -> std::int64_t { return bound - weighted; }
    auto holds() const -> bool { return slack() >= 0; }
};

/// Throws DomainError unless the host is a doubled Odd graph, PreconditionError
/// if s contains the forbidden cycle.
auto verify_counting_inequalities(const EdgeSubgraph & s, const ChiVector & chi, CountingInequality which) -> InequalityReport;

}
