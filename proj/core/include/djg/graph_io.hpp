#pragma once

#include <djg/graph.hpp>

#include <iosfwd>

namespace djg {

/**
 * Plain-text edge list.
 *
 *     n k |V1| |V2| |E|
 *     {1,2} {1,2,3}
 *     ...
 *
 * One line per selected edge, lower endpoint first, in edge-id order.
 */
auto write_edge_list(std::ostream & out, const EdgeSubgraph & s) -> void;

/// Writes every edge of the host.
auto write_edge_list(std::ostream & out, const GraphPtr & g) -> void;

/// Reads the format above and rebuilds the host. Throws ParseError on malformed
/// input or when the header disagrees with the edges or the host sizes.
auto read_edge_list(std::istream & in, GraphLimits limits = {}) -> EdgeSubgraph;

}
