#pragma once

#include <djg/extremal.hpp>
#include <djg/json_export.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace djg::cli {

enum class Format
{
    json,
    csv,
    text
};

auto format_name(Format f) -> std::string;

/// Every parameter a subcommand can read. Unused ones keep their defaults
/// and are still echoed in the JSON config block.
struct RunConfig
{
    std::string subcommand;
    int n = 5;
    int k = 2;
    int length = 6;
    bool count_only = false;
    std::uint64_t seed = 1;
    std::string output;
    Format format = Format::json;
    unsigned workers = 1;
    std::uint64_t node_budget = 50'000'000;
    std::uint64_t cycle_cap = default_cycle_cap;
    int max_n = 7;

    // subgraph selection
    std::string mask_hex;
    std::string input_path;
    int density = 10;           ///< tenths, used when random subgraph requested
    bool random_subgraph = false;

    // aux
    std::string center;
    std::string gamma;

    // extremal
    bool heuristic = false;
    std::string strategy = "auto";
    bool symmetry_breaking = true;

    // bounds
    double c_l = 1.0;
    int k_max = 0;
    bool with_search = false;

    // ramsey
    int colors = 2;
    std::string coloring = "random";
    int trials = 1;

    // verify
    std::size_t corpus_size = 10;

    auto search_options() const -> SearchOptions;
    auto to_json() const -> Json;
};

}
