#pragma once

#include "run_config.hpp"

#include <string>

namespace djg::cli {

/// What a subcommand produced: the JSON result plus the csv and text
/// renderings, and whether every invariant it checked held.
struct Outcome
{
    Json result;
    std::string csv;
    std::string text;
    bool invariants_hold = true;
};

/// Wraps the result as {tool, version, config, invariants_hold, result}.
auto envelope(const RunConfig & config, const Outcome & outcome) -> Json;

/// Renders in the configured format and writes it to the output path,
/// to DJG_OUTPUT_DIR/<subcommand>.<ext> when no path is given but the
/// variable is set, and to stdout otherwise.
auto emit(const RunConfig & config, const Outcome & outcome) -> void;

}
