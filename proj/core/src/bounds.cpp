#include <djg/bounds.hpp>
#include <djg/errors.hpp>
#include <djg/subset.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace djg {

namespace {
    auto check_host(int n, int k) -> void
    {
        if (k < 1 || n < 2 * k + 1 || n > max_ground_size)
            throw DomainError("need k >= 1 and 2k+1 <= n <= 63, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
    }

    auto host_edges(int n, int k) -> double
    {
        return static_cast<double>(binomial(n, k)) * (n - k);
    }

    auto format_double(double v) -> std::string
    {
        char buffer[64];
        std::snprintf(buffer, sizeof buffer, "%.6g", v);
        return buffer;
    }
}

auto general_c4l_bound(int n, int k, int l, double c_l) -> TheoremBound
{
    check_host(n, k);
    if (l < 2)
        throw DomainError("C_{4l} bound needs l >= 2, got " + std::to_string(l));
    if (! (c_l >= 0.0))
        throw DomainError("constant c_l must be non-negative");

    TheoremBound b;
    b.source = "C" + std::to_string(4 * l) + " on J(n;k,k+1)";
    b.formula = "(c_l (n-k)^(-1/2+1/(2l)) + (k+1)^(-1/2)) e(J), c_l = " + format_double(c_l);
    double ratio = c_l * std::pow(static_cast<double>(n - k), -0.5 + 1.0 / (2.0 * l)) + 1.0 / std::sqrt(static_cast<double>(k + 1));
    b.ratio = ratio;
    b.value = ratio * host_edges(n, k);
    b.constant_dependent = true;
    return b;
}

auto general_c4l2_bound(int n, int k) -> TheoremBound
{
    check_host(n, k);
    TheoremBound b;
    b.source = "C(4l+2) on J(n;k,k+1)";
    b.formula = "(1/(2(k+1)) + sqrt(2)/2 + o(1)) e(J)";
    double ratio = 1.0 / (2.0 * (k + 1)) + std::sqrt(2.0) / 2.0;
    b.ratio = ratio;
    b.value = ratio * host_edges(n, k);
    b.asymptotic = true;
    return b;
}

auto crossover_check(int l) -> CrossoverReport
{
    if (l < 3 || l % 2 == 0)
        throw DomainError("crossover is defined for odd l >= 3, got " + std::to_string(l));
    CrossoverReport r;
    r.l = l;
    r.balanced_exponent = Rational{ -1, 2 * l + 1 };
    r.unbalanced_exponent = Rational{ -1, 16 } + Rational{ 1, 8 * (l - 1) };
    r.balanced_stronger = r.balanced_exponent < r.unbalanced_exponent;
    r.below_threshold = Rational{ l } < Rational{ 49, 5 };
    return r;
}

auto odd_graph_bounds(int k, int length) -> std::vector<TheoremBound>
{
    if (k < 1)
        throw DomainError("k must be at least 1");
    if (length < 6 || length % 2 != 0)
        throw DomainError("forbidden length must be even and at least 6, got " + std::to_string(length));

    int n = 2 * k + 1;
    double edges = host_edges(n, k);
    std::vector<TheoremBound> result;
    auto label = "C" + std::to_string(length) + " on O~_{k+1}";

    if (length == 6) {
        TheoremBound b;
        b.source = label;
        b.formula = "(5/6) e(O~_{k+1})";
        b.exact_ratio = Rational{ 5, 6 };
        b.ratio = 5.0 / 6.0;
        b.value = edges * 5.0 / 6.0;
        result.push_back(b);
    }
    else if (length == 8 || length == 10) {
        TheoremBound b;
        b.source = label;
        b.formula = "(2/3 + o(1)) e(O~_{k+1})";
        b.exact_ratio = Rational{ 2, 3 };
        b.ratio = 2.0 / 3.0;
        b.value = edges * 2.0 / 3.0;
        b.asymptotic = true;
        result.push_back(b);
    }
    else if (length % 4 == 0) {
        int l = length / 4;
        TheoremBound b;
        b.source = label;
        b.exponent = Rational{ -1, 2 } + Rational{ 1, l };
        b.formula = "O(k^(" + to_string(*b.exponent) + ")) e(O~_{k+1})";
        b.constant_dependent = true;
        b.asymptotic = true;
        result.push_back(b);
    }
    else {
        int l = (length - 2) / 4;
        TheoremBound b;
        b.source = label;
        Rational exponent = Rational{ -1, 16 } + Rational{ 1, 8 * (l - 1) };
        if (l % 2 == 1 && crossover_check(l).balanced_stronger)
            exponent = Rational{ -1, 2 * l + 1 };
        b.exponent = exponent;
        b.formula = "O(k^(" + to_string(exponent) + ")) e(O~_{k+1})";
        b.constant_dependent = true;
        b.asymptotic = true;
        result.push_back(b);
    }
    return result;
}

auto make_bound_report(int n, int k, int length, const std::optional<SearchResult> & search, BoundConstants constants) -> BoundReport
{
    check_host(n, k);
    if (length < 6 || length % 2 != 0)
        throw DomainError("forbidden length must be even and at least 6, got " + std::to_string(length));

    BoundReport report;
    report.n = n;
    report.k = k;
    report.length = length;
    report.host_edges = static_cast<std::size_t>(host_edges(n, k));
    report.lower_bound = binomial(n, k + 1);

    if (length % 4 == 0 && length >= 8)
        report.bounds.push_back(general_c4l_bound(n, k, length / 4, constants.c_l));
    if (length % 4 == 2)
        report.bounds.push_back(general_c4l2_bound(n, k));
    if (n == 2 * k + 1)
        for (auto & b : odd_graph_bounds(k, length))
            report.bounds.push_back(b);

    if (search) {
        report.search_value = search->value;
        report.search_exact = search->exact;
        if (search->exact && search->value < report.lower_bound) {
            report.consistent = false;
            report.issues.push_back("exact value " + std::to_string(search->value) + " is below the lower bound C(n,k+1) = "
                    + std::to_string(report.lower_bound));
        }
        for (auto & b : report.bounds) {
            if (b.asymptotic || b.constant_dependent || ! b.exact_ratio)
                continue;
            // value <= floor(ratio * e(host)), compared in integers
            auto limit = static_cast<std::int64_t>(report.host_edges) * b.exact_ratio->numerator() / b.exact_ratio->denominator();
            if (static_cast<std::int64_t>(search->value) > limit) {
                report.consistent = false;
                report.issues.push_back(b.source + ": search value " + std::to_string(search->value) + " exceeds " + std::to_string(limit));
            }
        }
    }
    return report;
}

auto to_text_table(const std::vector<BoundReport> & reports) -> std::string
{
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%3s %3s %4s %7s %6s  %-24s %10s %10s %8s %s\n",
            "n", "k", "L", "e(J)", "lower", "source", "ratio", "value", "search", "flags");
    out << line;
    for (auto & r : reports) {
        std::string search = r.search_value ? std::to_string(*r.search_value) + (r.search_exact ? "" : "+") : "-";
        for (auto & b : r.bounds) {
            std::string flags;
            if (b.asymptotic)
                flags += "asymptotic ";
            if (b.constant_dependent)
                flags += "constant-dependent ";
            std::string ratio = b.ratio ? format_double(*b.ratio) : (b.exponent ? "k^" + to_string(*b.exponent) : "-");
            std::string value = b.value ? format_double(*b.value) : "-";
            std::snprintf(line, sizeof line, "%3d %3d %4d %7zu %6zu  %-24s %10s %10s %8s %s\n",
                    r.n, r.k, r.length, r.host_edges, r.lower_bound, b.source.c_str(), ratio.c_str(), value.c_str(),
                    search.c_str(), flags.c_str());
            out << line;
        }
        if (r.bounds.empty()) {
            std::snprintf(line, sizeof line, "%3d %3d %4d %7zu %6zu  %-24s %10s %10s %8s\n",
                    r.n, r.k, r.length, r.host_edges, r.lower_bound, "(none)", "-", "-", search.c_str());
            out << line;
        }
    }
    return out.str();
}

auto to_csv(const std::vector<BoundReport> & reports) -> std::string
{
    std::ostringstream out;
    out << "n,k,length,source,ratio,value,lower_bound,search_value,search_exact,asymptotic,constant_dependent\n";
    for (auto & r : reports)
        for (auto & b : r.bounds) {
            out << r.n << ',' << r.k << ',' << r.length << ",\"" << b.source << "\",";
            if (b.ratio)
                out << format_double(*b.ratio);
            out << ',';
            if (b.value)
                out << format_double(*b.value);
            out << ',' << r.lower_bound << ',';
            if (r.search_value)
                out << *r.search_value;
            out << ',' << (r.search_exact ? "true" : "false") << ',' << (b.asymptotic ? "true" : "false") << ','
                << (b.constant_dependent ? "true" : "false") << '\n';
        }
    return out.str();
}

}
