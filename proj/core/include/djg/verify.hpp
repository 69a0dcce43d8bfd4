#pragma once

#include <djg/extremal.hpp>
#include <djg/json_export.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace djg {

struct VerifyOptions
{
    int max_n = 7;
    std::uint64_t seed = 1;
    /// Random subgraphs per host.
    std::size_t corpus_size = 10;
    /// Exhaustive path checks only on hosts with at most this many edges.
    std::size_t path_check_edge_limit = 200;
    /// Exact C_6 search only on hosts with at most this many edges.
    std::size_t exact_search_edge_limit = 60;
    SearchOptions search;
};

/// Outcome of one named property on one host (or "-" for host-free checks).
struct CheckRecord
{
    std::string host;
    std::string check;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    std::string detail;

    auto passed() const -> bool { return violations == 0; }
};

struct VerifyReport
{
    VerifyOptions options;
    std::vector<CheckRecord> checks;

    auto all_passed() const -> bool;
};

/**
 * Runs the property suite on every J(n;k,k+1) with 2k+1 <= n <= max_n.
 * The report holds no timings, so equal options give equal reports.
 */
auto run_verify(const VerifyOptions & options) -> VerifyReport;

auto to_json(Json & j, const CheckRecord & c) -> void;
auto to_json(Json & j, const VerifyReport & r) -> void;

}
