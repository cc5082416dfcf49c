#pragma once

// Exhaustive walk over the 2^|E| edge states of a graph, shared by the
// enumeration routes (reliability, polynomial, boundary distributions,
// cluster weights).

#include <cstdint>
#include <string>
#include <vector>

#include "relfact/disjoint_sets.hpp"
#include "relfact/errors.hpp"
#include "relfact/graph.hpp"

namespace relfact::detail {

/// Integer state weights: edge i contributes on[i] when operative and off[i]
/// otherwise; the probability of a state is the product over the common
/// denominator.
struct StateWeights {
  std::vector<BigInt> on;
  std::vector<BigInt> off;
  BigInt denominator = 1;

  static StateWeights from_probabilities(const StochasticGraph& g) {
    StateWeights w;
    for (const auto& e : g.edges()) {
      w.on.push_back(e.p.get_num());
      w.off.push_back(e.p.get_den() - e.p.get_num());
      w.denominator *= e.p.get_den();
    }
    return w;
  }

  static StateWeights unit(std::size_t edges) {
    return StateWeights{std::vector<BigInt>(edges, 1), std::vector<BigInt>(edges, 1), 1};
  }
};

inline void check_bound(const StochasticGraph& g, std::size_t bound) {
  if (g.edge_count() > bound || g.edge_count() > 62) {
    throw EnumerationBoundError("graph has " + std::to_string(g.edge_count()) +
                                " edges, above the enumeration bound of " + std::to_string(bound) +
                                "; use the factoring route instead");
  }
}

/// Calls classify(ds, mask) for every state with nonzero weight, where ds
/// holds the components of the operative subgraph and bit i of mask is edge
/// i. Returns the summed integer weight per class.
///
/// Edges split into a low half whose weights are tabulated once and a high
/// half walked in the outer loop, so the inner loop only adds.
template <class Classify>
std::vector<BigInt> enumerate_states(const StochasticGraph& g, const StateWeights& w, std::size_t classes,
                                     Classify&& classify) {
  const std::size_t m = g.edge_count();
  const std::size_t low_bits = std::min<std::size_t>(m, 12);
  const std::size_t high_bits = m - low_bits;

  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges()) ends.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));

  std::vector<BigInt> low_weight{BigInt(1)};
  for (std::size_t i = 0; i < low_bits; ++i) {
    const std::size_t half = low_weight.size();
    low_weight.resize(2 * half);
    for (std::size_t s = 0; s < half; ++s) {
      low_weight[s | half] = low_weight[s] * w.on[i];
      low_weight[s] *= w.off[i];
    }
  }

  std::vector<BigInt> total(classes, 0);
  std::vector<BigInt> acc(classes, 0);
  DisjointSets base, ds;
  const std::uint64_t low_count = std::uint64_t{1} << low_bits;
  const std::uint64_t high_count = std::uint64_t{1} << high_bits;
  for (std::uint64_t h = 0; h < high_count; ++h) {
    BigInt high_weight = 1;
    base.reset(g.node_count());
    for (std::size_t j = 0; j < high_bits; ++j) {
      const std::size_t e = low_bits + j;
      if (h >> j & 1) {
        high_weight *= w.on[e];
        base.unite(ends[e].first, ends[e].second);
      } else {
        high_weight *= w.off[e];
      }
    }
    if (high_weight == 0) continue;

    for (auto& a : acc) a = 0;
    for (std::uint64_t l = 0; l < low_count; ++l) {
      if (low_weight[l] == 0) continue;
      ds.assign(base);
      for (std::size_t i = 0; i < low_bits; ++i) {
        if (l >> i & 1) ds.unite(ends[i].first, ends[i].second);
      }
      acc[classify(ds, l | (h << low_bits))] += low_weight[l];
    }
    for (std::size_t c = 0; c < classes; ++c) {
      if (acc[c] != 0) total[c] += acc[c] * high_weight;
    }
  }
  return total;
}

}  // namespace relfact::detail
