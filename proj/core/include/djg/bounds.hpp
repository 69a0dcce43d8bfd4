#pragma once

#include <djg/extremal.hpp>
#include <djg/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace djg {

/**
 * One upper bound on ex(host, C_L).
 *
 * Concrete bounds carry `value` (edges) and `ratio` (value / e(host)).
 * Bounds of the form O(k^x) e(host) carry only `exponent`. Whenever a bound
 * hides an unspecified constant or an o(1) term the matching flag is set,
 * and such a bound is never compared against a search value as a hard number.
 */
struct TheoremBound
{
    std::string source;
    std::string formula;
    std::optional<double> value;
    std::optional<double> ratio;
    std::optional<Rational> exact_ratio;
    std::optional<Rational> exponent;
    bool constant_dependent = false;
    bool asymptotic = false;
};

/// Bound for C_{4l} on J(n;k,k+1): (c_l (n-k)^(-1/2 + 1/(2l)) + (k+1)^(-1/2)) e(J).
/// The constant is the caller's choice. Throws DomainError for l < 2, c_l < 0 or a bad host.
auto general_c4l_bound(int n, int k, int l, double c_l = 1.0) -> TheoremBound;

/// Leading term (1/(2(k+1)) + sqrt(2)/2) e(J) of the C_{4l+2} bound; flagged asymptotic in n.
auto general_c4l2_bound(int n, int k) -> TheoremBound;

/// The two exponents for C_{4l+2}, l >= 3, on a doubled Odd host, and which one is smaller.
struct CrossoverReport
{
    int l = 0;
    Rational balanced_exponent;     ///< -1/(2l+1), from the a = b split; odd l only
    Rational unbalanced_exponent;   ///< -1/16 + 1/(8(l-1)), from a = 2, b = l-1
    bool balanced_stronger = false;
    bool below_threshold = false;   ///< l < 49/5, the closed-form crossover
};

/// Throws DomainError unless l is odd and >= 3.
auto crossover_check(int l) -> CrossoverReport;

/**
 * Every bound the doubled Odd graph results give for forbidden length
 * `length` on Õ_{k+1}: 5/6 for C_6 (hard), 2/3 + o(1) for C_8 and C_10,
 * O(k^(-1/2 + 1/l)) for C_{4l} with l >= 3 and the better of the two
 * exponents for C_{4l+2} with l >= 3. Throws DomainError when none applies.
 */
auto odd_graph_bounds(int k, int length) -> std::vector<TheoremBound>;

struct BoundReport
{
    int n = 0;
    int k = 0;
    int length = 0;
    std::size_t host_edges = 0;
    std::size_t lower_bound = 0;    ///< C(n, k+1)
    std::vector<TheoremBound> bounds;
    std::optional<std::size_t> search_value;
    bool search_exact = false;
    bool consistent = true;
    std::vector<std::string> issues;
};

struct BoundConstants
{
    double c_l = 1.0;
};

/// Collects the applicable bounds and checks any search value against the
/// hard ones and against the lower bound.
auto make_bound_report(int n, int k, int length, const std::optional<SearchResult> & search = std::nullopt,
        BoundConstants constants = {}) -> BoundReport;

/// Aligned plain-text table, one row per bound.
auto to_text_table(const std::vector<BoundReport> & reports) -> std::string;

/// n,k,length,source,ratio,value,lower_bound,search_value,search_exact,asymptotic,constant_dependent
auto to_csv(const std::vector<BoundReport> & reports) -> std::string;

}
