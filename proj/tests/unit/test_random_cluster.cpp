#include "doctest.h"
#include "relfact/disjoint_sets.hpp"
#include "relfact/errors.hpp"
#include "relfact/random_cluster.hpp"
#include "relfact/reliability.hpp"
#include "support/builders.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace relfact;
using namespace relfact::testing;

namespace {

StochasticGraph all_terminal(const StochasticGraph& g) {
  return g.with_terminals(std::vector<bool>(g.node_count(), true));
}

// Σ over states of q^k Π p, evaluated at one rational q.
Rational naive_z(const StochasticGraph& g, const Rational& q) {
  const std::size_t m = g.edge_count();
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    DisjointSets ds;
    ds.reset(g.node_count());
    Rational pr = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        ds.unite(g.edge(i).u, g.edge(i).v);
        pr *= g.edge(i).p;
      } else {
        pr *= 1 - g.edge(i).p;
      }
    }
    Rational qk = 1;
    for (std::size_t k = 0; k < ds.set_count(); ++k) qk *= q;
    total += qk * pr;
  }
  return total;
}

}  // namespace

TEST_CASE("partition function basics") {
  auto edge = make_graph({"a", "b"}, {{1, "a", "b", "1/3"}}, {"a", "b"});
  auto z = partition_function(edge);
  CHECK(z.coefficient(1) == Rational(1, 3));
  CHECK(z.coefficient(2) == Rational(2, 3));
  CHECK(dq_at_zero(z) == Rational(1, 3));
  CHECK(z.evaluate(1) == 1);

  CHECK(dq_at_zero(partition_function(triangle())) == Rational(1, 2));
  CHECK(dq_at_zero(partition_function(bridge())) == naive_reliability(all_terminal(bridge())));

  auto apart = make_graph({"a", "b"}, {}, {"a", "b"});
  CHECK_THROWS_AS(partition_function(apart), GraphError);
}

TEST_CASE("w1 is the all-terminal reliability") {
  Rng rng(31);
  int checked = 0;
  while (checked < 120) {
    auto g = all_terminal(random_graph(rng, 6, 12));
    if (!is_connected(g)) continue;
    ++checked;
    auto z = partition_function(g);
    CHECK(dq_at_zero(z) == reliability_bruteforce(g));
    const Rational q = random_probability(rng) * 3;
    CHECK(z.evaluate(q) == naive_z(g, q));
  }
}

TEST_CASE("factorized derivative identity") {
  auto split = bridge_split();
  CHECK(factorized_dq(split) == dq_at_zero(partition_function(union_graph(split))));

  auto partial = split;
  partial.g1 = split.g1.with_terminals({false, true, true});
  CHECK_THROWS_AS(factorized_dq(partial), Error);

  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& c : corpus(n, 24, 77)) {
      if (!c.all_terminal) continue;
      CHECK(factorized_dq(c.decomposition, {OrderVariant::Canonical, 2}) ==
            dq_at_zero(partition_function(union_graph(c.decomposition))));
    }
}
