#include <djg/subset.hpp>
#include <djg/errors.hpp>

#include <bit>
#include <cctype>
#include <algorithm>
#include <charconv>
#include <limits>

namespace djg {

namespace {
    auto ground_mask(int n) -> std::uint64_t
    {
        // bits 1..n
        return ((n >= 63) ? ~std::uint64_t{ 0 } : ((std::uint64_t{ 1 } << (n + 1)) - 1)) & ~std::uint64_t{ 1 };
    }

    auto check_ground(int n) -> void
    {
        if (n < 0 || n > max_ground_size)
            throw DomainError("ground set size must lie in 0.." + std::to_string(max_ground_size) + ", got " + std::to_string(n));
    }
}

KSubset::KSubset(std::uint64_t bits, int n) :
    _bits(bits),
    _n(n)
{
    check_ground(n);
    if ((bits & ~ground_mask(n)) != 0)
        throw DomainError("subset has elements outside [" + std::to_string(n) + "]");
}

auto KSubset::from_elements(std::span<const int> elements, int n) -> KSubset
{
    check_ground(n);
    std::uint64_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > n)
            throw DomainError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
        bits |= std::uint64_t{ 1 } << e;
    }
    return KSubset{ bits, n };
}

auto KSubset::parse(std::string_view text, int n) -> KSubset
{
    auto skip_space = [&] {
        while (! text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
            text.remove_prefix(1);
    };

    skip_space();
    if (text.empty() || text.front() != '{')
        throw ParseError("expected '{' in subset literal");
    text.remove_prefix(1);

    std::vector<int> elements;
    skip_space();
    if (! text.empty() && text.front() == '}') {
        text.remove_prefix(1);
    }
    else {
        while (true) {
            skip_space();
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{})
                throw ParseError("expected an integer in subset literal");
            text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
            elements.push_back(value);
            skip_space();
            if (text.empty())
                throw ParseError("unterminated subset literal");
            if (text.front() == '}') {
                text.remove_prefix(1);
                break;
            }
            if (text.front() != ',')
                throw ParseError("expected ',' or '}' in subset literal");
            text.remove_prefix(1);
        }
    }
    skip_space();
    if (! text.empty())
        throw ParseError("trailing characters after subset literal");

    try {
        auto result = from_elements(elements, n);
        if (result.size() != static_cast<int>(elements.size()))
            throw ParseError("repeated element in subset literal");
        return result;
    }
    catch (const DomainError & e) {
        throw ParseError(e.what());
    }
}

auto KSubset::size() const -> int
{
    return std::popcount(_bits);
}

auto KSubset::contains(int element) const -> bool
{
    return element >= 1 && element <= _n && ((_bits >> element) & 1) != 0;
}

auto KSubset::elements() const -> std::vector<int>
{
    std::vector<int> result;
    for (auto b = _bits ; b != 0 ; b &= b - 1)
        result.push_back(std::countr_zero(b));
    return result;
}

auto KSubset::intersection_with(const KSubset & other) const -> KSubset
{
    KSubset result;
    result._bits = _bits & other._bits;
    result._n = _n;
    return result;
}

auto KSubset::union_with(const KSubset & other) const -> KSubset
{
    KSubset result;
    result._bits = _bits | other._bits;
    result._n = std::max(_n, other._n);
    return result;
}

auto KSubset::symmetric_difference(const KSubset & other) const -> KSubset
{
    KSubset result;
    result._bits = _bits ^ other._bits;
    result._n = std::max(_n, other._n);
    return result;
}

auto KSubset::to_string() const -> std::string
{
    std::string result = "{";
    bool first = true;
    for (int e : elements()) {
        if (! first)
            result += ',';
        result += std::to_string(e);
        first = false;
    }
    result += '}';
    return result;
}

auto binomial(int n, int r) -> std::uint64_t
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 result = 1;
    for (int i = 1 ; i <= r ; ++i) {
        // result * (n - r + i) / i stays integral at every step
        result = result * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            throw ResourceError("binomial coefficient C(" + std::to_string(n) + "," + std::to_string(r) + ") overflows 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

auto subsets_of_size(int n, int r) -> std::vector<KSubset>
{
    check_ground(n);
    if (r < 0 || r > n)
        return {};

    std::vector<KSubset> result;
    result.reserve(binomial(n, r));
    if (r == 0) {
        result.emplace_back(0, n);
        return result;
    }

    // Gosper's hack over patterns in bits 1..n, which visits them in increasing numeric order.
    std::uint64_t limit = std::uint64_t{ 1 } << n;
    for (std::uint64_t v = (std::uint64_t{ 1 } << r) - 1 ; ; ) {
        result.emplace_back(v << 1, n);
        std::uint64_t c = v & (~v + 1);
        std::uint64_t s = v + c;
        if (s >= limit || s == 0)
            break;
        v = (((v ^ s) >> 2) / c) | s;
        if (v >= limit)
            break;
    }
    return result;
}

}
