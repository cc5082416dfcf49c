#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "relfact/algebra.hpp"
#include "relfact/graph.hpp"
#include "relfact/partition.hpp"
#include "relfact/rational.hpp"

namespace relfact {

/// Largest edge count the enumeration routes accept unless told otherwise.
inline constexpr std::size_t kDefaultEnumerationBound = 24;

/// R_K(G) by summing the probability of every K-pathset among the 2^|E|
/// edge states.
Rational reliability_bruteforce(const StochasticGraph& g, std::size_t bound = kDefaultEnumerationBound);

/// R_K(G) by contraction/deletion on a relevant edge incident to a terminal
/// (smallest id first), pruning irrelevant edges at every step.
Rational reliability_factoring(const StochasticGraph& g);

/// Counts C_i of K-pathsets with exactly i operative edges.
struct ReliabilityPolynomial {
  std::vector<BigInt> coefficients;  // C_0 .. C_m

  std::size_t edge_count() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  /// Σ C_i p^i (1−p)^(m−i).
  Rational evaluate(const Rational& p) const;
  /// Coefficients of the same polynomial in the monomial basis p^0 .. p^m.
  std::vector<BigInt> power_basis() const;
};

ReliabilityPolynomial reliability_polynomial(const StochasticGraph& g,
                                             std::size_t bound = kDefaultEnumerationBound);

/// Probability of each connectivity state a side induces on its boundary.
struct StateDistribution {
  std::size_t n = 0;
  std::map<Partition, Rational> probs;  // every partition of {1..n} present
  Rational detached;  // some non-boundary terminal cut off from the boundary

  Rational at(const Partition& p) const;
  Rational total() const;
};

StateDistribution state_distribution(const StochasticGraph& g, std::span<const std::string> boundary,
                                     std::size_t bound = kDefaultEnumerationBound);

/// Σ P1(A)·P2(B) over connected pairs (A, B).
Rational joint_reliability(const StateDistribution& d1, const StateDistribution& d2);

/// Reliability of G^A with the mapped terminal set.
Rational conditioned_reliability(const StochasticGraph& g, std::span<const std::string> boundary,
                                 const Partition& a);

struct FactorOptions {
  OrderVariant order = OrderVariant::Canonical;
  std::size_t jobs = 1;  // 0 = auto
};

struct FactorizedResult {
  Rational reliability;
  std::size_t n = 0;
  std::vector<Partition> states;  // coherent order used
  std::vector<Rational> side1;    // R(G1^{A_i})
  std::vector<Rational> side2;    // R(G2^{A_j})
  std::vector<std::string> warnings;
};

/// R(G) = Σ_ij b_ij R(G1^{A_i}) R(G2^{A_j}) with (b_ij) the inverse
/// connectivity matrix. The 2·Bell(n) side reliabilities are independent and
/// evaluated on options.jobs workers; the bilinear sum runs in index order.
/// A decomposition whose terminals cannot reach the boundary yields 0 and a
/// warning; every other validation failure throws DecompositionError.
FactorizedResult factorized_reliability(const CutDecomposition& d, const FactorOptions& options = {});

/// R1·R̂2 + R̂1·R2 − R1·R2 for a two-node boundary, where ^ identifies the two
/// boundary nodes.
Rational n2_closed_form(const CutDecomposition& d);

/// Complete graph on nodes "1".."n" (edge ids 1.. in lexicographic pair
/// order, probability p), identified by a, with every node a terminal.
StochasticGraph gamma_graph(std::size_t n, const Partition& a, const Rational& p = Rational(1, 2));

}  // namespace relfact
