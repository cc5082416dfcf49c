#include "relfact/random_cluster.hpp"

#include "relfact/errors.hpp"
#include "relfact/parallel.hpp"
#include "state_enumeration.hpp"

namespace relfact {

Rational ClusterPolynomial::coefficient(std::size_t k) const {
  auto it = weights.find(k);
  return it == weights.end() ? Rational(0) : it->second;
}

Rational ClusterPolynomial::evaluate(const Rational& q) const {
  Rational sum = 0;
  for (const auto& [k, w] : weights) {
    Rational power = 1;
    for (std::size_t i = 0; i < k; ++i) power *= q;
    sum += w * power;
  }
  return sum;
}

ClusterPolynomial partition_function(const StochasticGraph& g, std::size_t bound) {
  if (!is_connected(g)) throw GraphError("random cluster weights need a connected graph");
  detail::check_bound(g, bound);
  const auto w = detail::StateWeights::from_probabilities(g);
  const auto mass = detail::enumerate_states(g, w, g.node_count() + 1,
                                             [](DisjointSets& ds, std::uint64_t) { return ds.set_count(); });
  ClusterPolynomial z;
  for (std::size_t k = 1; k < mass.size(); ++k) {
    if (mass[k] == 0) continue;
    Rational r(mass[k], w.denominator);
    r.canonicalize();
    z.weights.emplace(k, r);
  }
  return z;
}

Rational dq_at_zero(const ClusterPolynomial& z) { return z.coefficient(1); }

Rational factorized_dq(const CutDecomposition& d, const FactorOptions& options) {
  const auto whole = validate_decomposition(d);
  if (whole.terminal_count() != whole.node_count()) {
    throw Error("the cluster-model factorization needs every node to be a terminal");
  }
  const auto bundle = connectivity_bundle(d.n(), options.order);
  const std::size_t m = bundle->size();
  auto sides = parallel_map(2 * m, options.jobs, [&](std::size_t i) {
    const auto& side = i < m ? d.g1 : d.g2;
    return dq_at_zero(partition_function(identify_nodes(side, d.boundary, bundle->order[i % m])));
  });
  Rational sum = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& b = bundle->A_inv(i, j);
      if (b != 0) sum += b * sides[i] * sides[m + j];
    }
  return sum;
}

}  // namespace relfact
