#pragma once

#include <djg/aux_graphs.hpp>
#include <djg/bounds.hpp>
#include <djg/chi.hpp>
#include <djg/cycles.hpp>
#include <djg/directions.hpp>
#include <djg/extremal.hpp>
#include <djg/ramsey.hpp>

#include <nlohmann/json.hpp>

namespace djg {

using Json = nlohmann::ordered_json;

// Serializers found by argument-dependent lookup. Key order is fixed so that
// equal inputs dump to identical bytes.

auto to_json(Json & j, const KSubset & s) -> void;
auto to_json(Json & j, const Rational & r) -> void;
auto to_json(Json & j, const Cycle & c) -> void;
auto to_json(Json & j, const CycleCount & c) -> void;
auto to_json(Json & j, const EdgeIdentityReport & r) -> void;
auto to_json(Json & j, const InequalityReport & r) -> void;
auto to_json(Json & j, const IdentityCheck & c) -> void;
auto to_json(Json & j, const LemmaReport & r) -> void;
auto to_json(Json & j, const TheoremBound & b) -> void;
auto to_json(Json & j, const CrossoverReport & r) -> void;
auto to_json(Json & j, const BoundReport & r) -> void;
auto to_json(Json & j, const RamseyReport & r) -> void;

/// {n_c6, classes: [{class_id, iso_class, shape, edge_count, count, ratio_num, ratio_den}]}
auto chi_to_json(const ChiVector & chi) -> Json;

/// Adjacency lists over host vertices, each neighbour with its witness.
auto aux_to_json(const AuxGraph & aux) -> Json;
auto aux_to_json(const AuxGraphHx & aux) -> Json;
auto aux_to_json(const AuxGraphHgamma & aux) -> Json;

/// {n, k, forbidden_length, value, exact, lower_bound, upper_bound,
///  witness_edge_mask_hex, nodes, budget_hit, method}. upper_bound is
/// floor(5/6 e(host)) for C_6 on a doubled Odd host and null otherwise.
auto search_to_json(const SearchResult & r) -> Json;

/// {n, k, vertices: [...], edges: [[lower, upper], ...]} with subsets as strings.
auto subgraph_to_json(const EdgeSubgraph & s) -> Json;

}
