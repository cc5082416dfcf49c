#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace relfact {

/// Index-level view of a multigraph, shared by the public graph type and the
/// factoring recursion.
struct TopologyView {
  std::size_t node_count = 0;
  std::span<const std::pair<int, int>> ends;  // endpoints per edge
  std::span<const char> terminal;             // per node
};

/// Biconnected blocks of the non-loop edges, as lists of edge indices.
std::vector<std::vector<std::size_t>> biconnected_blocks(const TopologyView& g);

struct RelevanceMask {
  std::vector<char> irrelevant;  // per edge
  bool k_connected = true;
};

/// An edge is relevant iff it is not a loop and its block has at least two
/// attachment vertices: vertices that are terminals or that reach a
/// terminal without using the block's edges. Every edge of such a block lies
/// on a simple path between two terminals, hence on some K-minpath. With at
/// most one distinct terminal node every edge is irrelevant.
RelevanceMask relevance(const TopologyView& g);

}  // namespace relfact
