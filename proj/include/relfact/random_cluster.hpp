#pragma once

#include <cstddef>
#include <map>

#include "relfact/graph.hpp"
#include "relfact/rational.hpp"
#include "relfact/reliability.hpp"

namespace relfact {

/// Z(q, G) = Σ_k w_k q^k, where w_k is the probability that the operative
/// subgraph has exactly k components (isolated nodes included).
struct ClusterPolynomial {
  std::map<std::size_t, Rational> weights;  // k -> w_k, only nonzero terms

  Rational coefficient(std::size_t k) const;
  Rational evaluate(const Rational& q) const;
};

/// Enumerates all edge states. Throws GraphError if the underlying graph is
/// disconnected and EnumerationBoundError above the bound.
ClusterPolynomial partition_function(const StochasticGraph& g, std::size_t bound = kDefaultEnumerationBound);

/// dZ/dq at q = 0, i.e. the q^1 coefficient: the all-terminal reliability.
Rational dq_at_zero(const ClusterPolynomial& z);

/// Σ_ij b_ij w_1(G1^{A_i}) w_1(G2^{A_j}). Requires every node of G1 ∪ G2 to
/// be a terminal and both sides to be connected.
Rational factorized_dq(const CutDecomposition& d, const FactorOptions& options = {});

}  // namespace relfact
