#include <djg/chi.hpp>
#include <djg/errors.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <tuple>

namespace djg {

auto hexagon_image(HexagonMask mask, int symmetry) -> HexagonMask
{
    if (symmetry < 0 || symmetry >= hexagon_symmetry_count)
        throw DomainError("hexagon symmetry index must lie in 0..11");
    HexagonMask result = 0;
    for (int i = 0 ; i < 6 ; ++i) {
        if (! ((mask >> i) & 1))
            continue;
        int image = symmetry < 6 ? (i + symmetry) % 6 : ((symmetry - 6) - i + 6) % 6;
        result |= static_cast<HexagonMask>(1u << image);
    }
    return result;
}

namespace {
    auto shape_of(HexagonMask mask) -> std::string
    {
        if (mask == 63)
            return "C6";
        if (mask == 0)
            return "E";
        // rotate so that edge 5 is absent, then read runs left to right
        int shift = 0;
        while ((mask >> ((shift + 5) % 6)) & 1)
            ++shift;
        std::vector<int> runs;
        int run = 0;
        for (int i = 0 ; i < 6 ; ++i) {
            if ((mask >> ((i + shift) % 6)) & 1)
                ++run;
            else if (run > 0) {
                runs.push_back(run);
                run = 0;
            }
        }
        if (run > 0)
            runs.push_back(run);
        std::ranges::sort(runs, std::greater<>{});
        std::string result;
        for (auto r : runs) {
            if (! result.empty())
                result += '+';
            result += "P" + std::to_string(r + 1);
        }
        return result;
    }
}

C6ClassTable::C6ClassTable()
{
    _class_of.fill(-1);
    std::vector<C6Class> orbits;
    for (int m = 0 ; m < 64 ; ++m) {
        auto mask = static_cast<HexagonMask>(m);
        if (_class_of[mask] >= 0)
            continue;
        C6Class c;
        c.representative = mask;     // masks are visited in increasing order
        c.edge_count = std::popcount(static_cast<unsigned>(mask));
        for (int sym = 0 ; sym < hexagon_symmetry_count ; ++sym)
            c.members.push_back(hexagon_image(mask, sym));
        std::ranges::sort(c.members);
        auto dup = std::ranges::unique(c.members);
        c.members.erase(dup.begin(), dup.end());
        c.shape = shape_of(mask);
        for (auto member : c.members)
            _class_of[member] = 0;
        orbits.push_back(std::move(c));
    }

    std::ranges::stable_sort(orbits, [] (const C6Class & a, const C6Class & b) {
        return std::tie(a.edge_count, a.representative) < std::tie(b.edge_count, b.representative);
    });

    std::map<std::string, int> iso_ids;
    for (std::size_t i = 0 ; i < orbits.size() ; ++i) {
        auto & c = orbits[i];
        c.id = static_cast<int>(i);
        auto [it, inserted] = iso_ids.try_emplace(c.shape, static_cast<int>(iso_ids.size()));
        c.iso_class = it->second;
        for (auto member : c.members)
            _class_of[member] = c.id;
    }
    _iso_class_count = static_cast<int>(iso_ids.size());
    _classes = std::move(orbits);

    _path_of_four = _class_of[0b001111];
    _five_edges = _class_of[0b011111];
    _full = _class_of[0b111111];
}

auto build_class_table() -> C6ClassTable
{
    return C6ClassTable{};
}

auto class_table() -> const C6ClassTable &
{
    static const C6ClassTable table;
    return table;
}

auto hexagon_mask(const EdgeSubgraph & s, const Cycle & h) -> HexagonMask
{
    if (h.length() != 6)
        throw DomainError("hexagon mask needs a 6-cycle");
    HexagonMask mask = 0;
    for (int i = 0 ; i < 6 ; ++i)
        if (s.adjacent(h.vertices[static_cast<std::size_t>(i)], h.vertices[static_cast<std::size_t>((i + 1) % 6)]))
            mask |= static_cast<HexagonMask>(1u << i);
    return mask;
}

auto ChiVector::ratio(int class_id) const -> Rational
{
    if (n_c6 == 0)
        throw DomainError("chi vector over an empty cycle set");
    return Rational{ static_cast<std::int64_t>(count_of(class_id)), static_cast<std::int64_t>(n_c6) };
}

auto ChiVector::ratio_sum() const -> Rational
{
    Rational sum{ 0 };
    for (std::size_t i = 0 ; i < counts.size() ; ++i)
        sum += ratio(static_cast<int>(i));
    return sum;
}

auto chi_vector(const EdgeSubgraph & s, std::uint64_t cap) -> ChiVector
{
    auto full = EdgeSubgraph::full(s.host_ptr());
    auto hexagons = enumerate_cycles(full, 6, cap);
    if (hexagons.truncated)
        throw ResourceError("host has more 6-cycles than the enumeration cap of " + std::to_string(cap));
    return chi_vector(s, hexagons.cycles);
}

auto chi_vector(const EdgeSubgraph & s, std::span<const Cycle> host_six_cycles) -> ChiVector
{
    auto & table = class_table();
    ChiVector result;
    result.counts.assign(table.size(), 0);
    result.n_c6 = host_six_cycles.size();
    for (auto & h : host_six_cycles)
        ++result.counts[static_cast<std::size_t>(table.class_of(hexagon_mask(s, h)))];
    return result;
}

auto verify_edge_identity(const EdgeSubgraph & s, const ChiVector & chi) -> EdgeIdentityReport
{
    auto & table = class_table();
    EdgeIdentityReport report;
    report.edge_ratio = Rational{ static_cast<std::int64_t>(s.edge_count()), static_cast<std::int64_t>(s.host().edge_count()) };
    Rational weighted{ 0 };
    for (auto & c : table.classes())
        weighted += chi.ratio(c.id) * Rational{ c.edge_count };
    report.weighted_chi = weighted / Rational{ 6 };
    return report;
}

auto verify_counting_inequalities(const EdgeSubgraph & s, const ChiVector & chi, CountingInequality which) -> InequalityReport
{
    auto & g = s.host();
    if (! g.is_doubled_odd())
        throw DomainError("the counting inequalities are stated for doubled Odd hosts (n = 2k+1)");
    int forbidden = which == CountingInequality::c8 ? 8 : 10;
    if (contains_cycle(s, forbidden))
        throw PreconditionError("subgraph contains a " + std::to_string(forbidden) + "-cycle");

    auto & table = class_table();
    InequalityReport report;
    report.which = which;
    report.chi_full = chi.count_of(table.full_class());
    report.chi_five = chi.count_of(table.five_edge_class());
    report.chi_path_of_four = chi.count_of(table.path_of_four_class());

    auto k = static_cast<std::int64_t>(g.k());
    auto host_edges = static_cast<std::int64_t>(g.edge_count());
    auto full = static_cast<std::int64_t>(report.chi_full);
    auto five = static_cast<std::int64_t>(report.chi_five);
    auto path4 = static_cast<std::int64_t>(report.chi_path_of_four);
    if (which == CountingInequality::c8) {
        report.bound = k * host_edges;
        report.weighted = 6 * full + 2 * five + path4;
    }
    else {
        report.bound = (2 * k - 1) * host_edges;
        report.weighted = 6 * full + five;
    }
    return report;
}

}
