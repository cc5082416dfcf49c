#include "relfact/reliability.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "relfact/errors.hpp"
#include "relfact/parallel.hpp"
#include "relfact/topology.hpp"
#include "state_enumeration.hpp"

namespace relfact {

namespace {

std::vector<int> terminal_indices(const StochasticGraph& g) {
  std::vector<int> out;
  for (std::size_t t : g.terminals()) out.push_back(static_cast<int>(t));
  return out;
}

bool terminals_joined(DisjointSets& ds, const std::vector<int>& terms) {
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!ds.same(terms[0], terms[i])) return false;
  }
  return true;
}

// Contraction/deletion over an index-only copy of the graph; probabilities
// and ids are read from the original through `edge`.
class FactoringSolver {
 public:
  explicit FactoringSolver(const StochasticGraph& g) : g_(g) {}

  struct Reduced {
    int nodes = 0;
    std::vector<std::pair<int, int>> ends;
    std::vector<std::size_t> edge;
    std::vector<char> terminal;
  };

  Reduced initial() const {
    Reduced r;
    r.nodes = static_cast<int>(g_.node_count());
    for (std::size_t i = 0; i < g_.edge_count(); ++i) {
      r.ends.emplace_back(static_cast<int>(g_.edge(i).u), static_cast<int>(g_.edge(i).v));
      r.edge.push_back(i);
    }
    for (std::size_t i = 0; i < g_.node_count(); ++i) r.terminal.push_back(g_.is_terminal(i) ? 1 : 0);
    return r;
  }

  Rational solve(Reduced r) const {
    if (std::count(r.terminal.begin(), r.terminal.end(), 1) <= 1) return Rational(1);

    const auto mask = relevance(TopologyView{static_cast<std::size_t>(r.nodes), r.ends, r.terminal});
    if (!mask.k_connected) return Rational(0);
    prune(r, mask.irrelevant);

    std::size_t pivot = r.ends.size();
    EdgeId best = std::numeric_limits<EdgeId>::max();
    for (std::size_t i = 0; i < r.ends.size(); ++i) {
      auto [u, v] = r.ends[i];
      if (!r.terminal[u] && !r.terminal[v]) continue;
      if (g_.edge(r.edge[i]).id < best) {
        best = g_.edge(r.edge[i]).id;
        pivot = i;
      }
    }
    if (pivot == r.ends.size()) throw InternalError("no relevant edge touches a terminal");

    const Rational& p = g_.edge(r.edge[pivot]).p;
    if (p == 1) return solve(contracted(r, pivot));
    if (p == 0) return solve(deleted(std::move(r), pivot));
    Rational up = solve(contracted(r, pivot));
    Rational down = solve(deleted(std::move(r), pivot));
    return p * up + (1 - p) * down;
  }

 private:
  static void prune(Reduced& r, const std::vector<char>& irrelevant) {
    std::size_t keep = 0;
    for (std::size_t i = 0; i < r.ends.size(); ++i) {
      if (irrelevant[i]) continue;
      r.ends[keep] = r.ends[i];
      r.edge[keep] = r.edge[i];
      ++keep;
    }
    r.ends.resize(keep);
    r.edge.resize(keep);
  }

  static Reduced deleted(Reduced r, std::size_t i) {
    r.ends.erase(r.ends.begin() + static_cast<std::ptrdiff_t>(i));
    r.edge.erase(r.edge.begin() + static_cast<std::ptrdiff_t>(i));
    return r;
  }

  static Reduced contracted(const Reduced& r, std::size_t i) {
    auto [keep, gone] = r.ends[i];
    if (keep > gone) std::swap(keep, gone);
    auto relabel = [&](int x) {
      if (x == gone) x = keep;
      return x > gone ? x - 1 : x;
    };
    Reduced out;
    out.nodes = keep == gone ? r.nodes : r.nodes - 1;
    for (std::size_t j = 0; j < r.ends.size(); ++j) {
      if (j == i) continue;
      if (keep == gone) {
        out.ends.push_back(r.ends[j]);
      } else {
        out.ends.emplace_back(relabel(r.ends[j].first), relabel(r.ends[j].second));
      }
      out.edge.push_back(r.edge[j]);
    }
    out.terminal = r.terminal;
    if (keep != gone) {
      out.terminal[keep] = static_cast<char>(r.terminal[keep] | r.terminal[gone]);
      out.terminal.erase(out.terminal.begin() + gone);
    }
    return out;
  }

  const StochasticGraph& g_;
};

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

Rational reliability_bruteforce(const StochasticGraph& g, std::size_t bound) {
  detail::check_bound(g, bound);
  const auto terms = terminal_indices(g);
  const auto w = detail::StateWeights::from_probabilities(g);
  const auto mass = detail::enumerate_states(g, w, 2, [&](DisjointSets& ds, std::uint64_t) {
    return terminals_joined(ds, terms) ? std::size_t{1} : std::size_t{0};
  });
  Rational r(mass[1], w.denominator);
  r.canonicalize();
  return r;
}

Rational reliability_factoring(const StochasticGraph& g) {
  FactoringSolver solver(g);
  return solver.solve(solver.initial());
}

Rational ReliabilityPolynomial::evaluate(const Rational& p) const {
  const std::size_t m = edge_count();
  Rational sum = 0;
  for (std::size_t i = 0; i <= m && i < coefficients.size(); ++i) {
    Rational term = coefficients[i];
    for (std::size_t k = 0; k < i; ++k) term *= p;
    for (std::size_t k = i; k < m; ++k) term *= 1 - p;
    sum += term;
  }
  return sum;
}

std::vector<BigInt> ReliabilityPolynomial::power_basis() const {
  const std::size_t m = edge_count();
  std::vector<BigInt> out(m + 1, 0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    for (std::size_t k = 0; k + i <= m; ++k) {
      BigInt term = coefficients[i] * binomial(m - i, k);
      if (k % 2) out[i + k] -= term;
      else out[i + k] += term;
    }
  }
  return out;
}

ReliabilityPolynomial reliability_polynomial(const StochasticGraph& g, std::size_t bound) {
  detail::check_bound(g, bound);
  const std::size_t m = g.edge_count();
  const auto terms = terminal_indices(g);
  auto counts = detail::enumerate_states(g, detail::StateWeights::unit(m), m + 2,
                                         [&](DisjointSets& ds, std::uint64_t mask) {
                                           if (!terminals_joined(ds, terms)) return m + 1;
                                           return static_cast<std::size_t>(std::popcount(mask));
                                         });
  counts.resize(m + 1);
  return ReliabilityPolynomial{std::move(counts)};
}

Rational StateDistribution::at(const Partition& p) const {
  auto it = probs.find(p);
  return it == probs.end() ? Rational(0) : it->second;
}

Rational StateDistribution::total() const {
  Rational sum = detached;
  for (const auto& [p, v] : probs) sum += v;
  return sum;
}

StateDistribution state_distribution(const StochasticGraph& g, std::span<const std::string> boundary,
                                     std::size_t bound) {
  detail::check_bound(g, bound);
  const auto states = all_partitions(boundary.size());
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i], i);
  std::vector<int> nodes;
  for (const auto& k : boundary) nodes.push_back(static_cast<int>(g.node_index(k)));

  std::vector<int> outer;
  for (std::size_t t : g.terminals()) {
    if (std::find(nodes.begin(), nodes.end(), static_cast<int>(t)) == nodes.end()) outer.push_back(static_cast<int>(t));
  }

  const auto w = detail::StateWeights::from_probabilities(g);
  const std::size_t detached = states.size();
  std::vector<int> labels(nodes.size());
  const auto mass = detail::enumerate_states(g, w, states.size() + 1, [&](DisjointSets& ds, std::uint64_t) {
    for (std::size_t i = 0; i < nodes.size(); ++i) labels[i] = ds.find(nodes[i]);
    for (int t : outer) {
      if (std::find(labels.begin(), labels.end(), ds.find(t)) == labels.end()) return detached;
    }
    return index.at(Partition::from_labels(labels));
  });

  auto to_rational = [&](const BigInt& m) {
    Rational r(m, w.denominator);
    r.canonicalize();
    return r;
  };
  StateDistribution d;
  d.n = boundary.size();
  for (std::size_t i = 0; i < states.size(); ++i) d.probs.emplace(states[i], to_rational(mass[i]));
  d.detached = to_rational(mass[detached]);
  return d;
}

Rational joint_reliability(const StateDistribution& d1, const StateDistribution& d2) {
  if (d1.n != d2.n) throw PartitionError("state distributions over different boundary sizes");
  Rational sum = 0;
  for (const auto& [a, pa] : d1.probs) {
    if (pa == 0) continue;
    for (const auto& [b, pb] : d2.probs) {
      if (pb != 0 && is_connected_pair(a, b)) sum += pa * pb;
    }
  }
  return sum;
}

Rational conditioned_reliability(const StochasticGraph& g, std::span<const std::string> boundary,
                                 const Partition& a) {
  return reliability_factoring(identify_nodes(g, boundary, a));
}

FactorizedResult factorized_reliability(const CutDecomposition& d, const FactorOptions& options) {
  FactorizedResult result;
  result.n = d.n();
  try {
    validate_decomposition(d);
  } catch (const DecompositionError& e) {
    if (e.kind() != DecompositionError::Kind::UnreachableTerminal) throw;
    result.reliability = 0;
    result.warnings.push_back(e.what());
    return result;
  }

  const auto bundle = connectivity_bundle(d.n(), options.order);
  const std::size_t m = bundle->size();
  result.states = bundle->order.states();

  auto sides = parallel_map(2 * m, options.jobs, [&](std::size_t i) {
    const auto& side = i < m ? d.g1 : d.g2;
    return conditioned_reliability(side, d.boundary, bundle->order[i % m]);
  });
  result.side1.assign(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(m));
  result.side2.assign(sides.begin() + static_cast<std::ptrdiff_t>(m), sides.end());

  Rational sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (result.side1[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& b = bundle->A_inv(i, j);
      if (b != 0) sum += b * result.side1[i] * result.side2[j];
    }
  }
  result.reliability = sum;
  return result;
}

Rational n2_closed_form(const CutDecomposition& d) {
  if (d.n() != 2) throw Error("the two-node closed form needs a boundary of size 2, got " + std::to_string(d.n()));
  try {
    validate_decomposition(d);
  } catch (const DecompositionError& e) {
    if (e.kind() != DecompositionError::Kind::UnreachableTerminal) throw;
    return Rational(0);
  }
  const auto joined = Partition::top(2);
  const Rational r1 = reliability_factoring(d.g1);
  const Rational r2 = reliability_factoring(d.g2);
  const Rational r1_hat = conditioned_reliability(d.g1, d.boundary, joined);
  const Rational r2_hat = conditioned_reliability(d.g2, d.boundary, joined);
  return r1 * r2_hat + r1_hat * r2 - r1 * r2;
}

StochasticGraph gamma_graph(std::size_t n, const Partition& a, const Rational& p) {
  if (a.size() != n) throw PartitionError("partition size does not match n");
  std::vector<std::string> nodes;
  for (std::size_t i = 1; i <= n; ++i) nodes.push_back(std::to_string(i));
  std::vector<EdgeSpec> edges;
  EdgeId id = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back(EdgeSpec{id++, nodes[i], nodes[j], p});
  StochasticGraph complete(nodes, edges, nodes);
  return identify_nodes(complete, nodes, a);
}

}  // namespace relfact
