#include "output.hpp"

#include <djg/errors.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace djg::cli {

auto format_name(Format f) -> std::string
{
    switch (f) {
        case Format::json:
            return "json";
        case Format::csv:
            return "csv";
        case Format::text:
            return "text";
    }
    return "json";
}

auto RunConfig::search_options() const -> SearchOptions
{
    SearchOptions o;
    o.node_budget = node_budget;
    o.cycle_cap = cycle_cap;
    o.workers = workers;
    o.symmetry_breaking = symmetry_breaking;
    if (strategy == "hitting-set")
        o.strategy = ExactStrategy::hitting_set;
    else if (strategy == "inclusion")
        o.strategy = ExactStrategy::edge_inclusion;
    else
        o.strategy = ExactStrategy::automatic;
    return o;
}

auto RunConfig::to_json() const -> Json
{
    Json j{
        { "subcommand", subcommand },
        { "n", n },
        { "k", k },
        { "length", length },
        { "count_only", count_only },
        { "seed", seed },
        { "output", output },
        { "format", format_name(format) },
        { "workers", workers },
        { "node_budget", node_budget },
        { "cycle_cap", cycle_cap },
        { "max_n", max_n },
        { "mask_hex", mask_hex },
        { "input", input_path },
        { "random_subgraph", random_subgraph },
        { "density", density },
        { "center", center },
        { "gamma", gamma },
        { "heuristic", heuristic },
        { "strategy", strategy },
        { "symmetry_breaking", symmetry_breaking },
        { "c_l", c_l },
        { "k_max", k_max },
        { "with_search", with_search },
        { "colors", colors },
        { "coloring", coloring },
        { "trials", trials },
        { "corpus_size", corpus_size },
    };
    return j;
}

auto envelope(const RunConfig & config, const Outcome & outcome) -> Json
{
    return Json{
        { "tool", "djg" },
        { "version", DJG_VERSION },
        { "config", config.to_json() },
        { "invariants_hold", outcome.invariants_hold },
        { "result", outcome.result },
    };
}

namespace {
    auto extension(Format f) -> std::string
    {
        return f == Format::text ? "txt" : format_name(f);
    }

    auto resolve_path(const RunConfig & config) -> std::string
    {
        const char * dir = std::getenv("DJG_OUTPUT_DIR");
        if (! config.output.empty())
            return config.output;
        if (dir && *dir)
            return (std::filesystem::path(dir) / (config.subcommand + "." + extension(config.format))).string();
        return {};
    }
}

auto emit(const RunConfig & config, const Outcome & outcome) -> void
{
    std::string body;
    switch (config.format) {
        case Format::json:
            body = envelope(config, outcome).dump(2) + "\n";
            break;
        case Format::csv:
            body = outcome.csv;
            break;
        case Format::text:
            body = outcome.text;
            break;
    }

    auto path = resolve_path(config);
    if (path.empty()) {
        std::cout << body << std::flush;
        return;
    }
    auto parent = std::filesystem::path(path).parent_path();
    if (! parent.empty())
        std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw ResourceError("cannot open output file " + path);
    out << body;
    if (! out)
        throw ResourceError("failed writing " + path);
}

}
