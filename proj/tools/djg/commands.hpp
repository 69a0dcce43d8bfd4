#pragma once

#include "output.hpp"

namespace djg::cli {

auto run_generate(const RunConfig & config) -> Outcome;
auto run_cycles(const RunConfig & config) -> Outcome;
auto run_chi(const RunConfig & config) -> Outcome;
auto run_aux(const RunConfig & config) -> Outcome;
auto run_extremal(const RunConfig & config) -> Outcome;
auto run_bounds(const RunConfig & config) -> Outcome;
auto run_ramsey(const RunConfig & config) -> Outcome;
auto run_verify(const RunConfig & config) -> Outcome;

}
