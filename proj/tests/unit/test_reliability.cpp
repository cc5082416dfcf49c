#include "doctest.h"
#include "relfact/errors.hpp"
#include "relfact/reliability.hpp"
#include "support/builders.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace relfact;
using namespace relfact::testing;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

}  // namespace

TEST_CASE("series and parallel laws") {
  auto series = make_graph({"a", "b", "c"}, {{1, "a", "b", "1/3"}, {2, "b", "c", "3/4"}}, {"a", "c"});
  CHECK(reliability_bruteforce(series) == Rational(1, 4));
  CHECK(reliability_factoring(series) == Rational(1, 4));

  auto parallel = make_graph({"a", "b"}, {{1, "a", "b", "1/3"}, {2, "a", "b", "3/4"}}, {"a", "b"});
  const Rational expected = 1 - Rational(2, 3) * Rational(1, 4);
  CHECK(reliability_bruteforce(parallel) == expected);
  CHECK(reliability_factoring(parallel) == expected);
}

TEST_CASE("bridge graph") {
  // oracle value, frozen
  CHECK(naive_reliability(bridge()) == Rational(1, 2));
  CHECK(reliability_bruteforce(bridge()) == Rational(1, 2));
  CHECK(reliability_factoring(bridge()) == Rational(1, 2));
  CHECK(naive_reliability(bridge({"a", "b"})) == Rational(23, 32));
  CHECK(reliability_factoring(bridge({"a", "b"})) == Rational(23, 32));
  CHECK(reliability_factoring(bridge({"s", "a", "b", "t"})) == Rational(7, 16));
}

TEST_CASE("degenerate inputs") {
  auto lone = make_graph({"a"}, {}, {"a"});
  CHECK(reliability_factoring(lone) == 1);
  CHECK(reliability_bruteforce(lone) == 1);
  auto apart = make_graph({"a", "b"}, {}, {"a", "b"});
  CHECK(reliability_factoring(apart) == 0);
  CHECK(reliability_bruteforce(apart) == 0);

  auto certain = make_graph({"a", "b", "c"}, {{1, "a", "b", "1"}, {2, "b", "c", "0"}, {3, "a", "c", "1"}}, {"a", "b", "c"});
  CHECK(reliability_factoring(certain) == 1);
  CHECK(reliability_bruteforce(certain) == 1);
  auto dead = make_graph({"a", "b"}, {{1, "a", "b", "0"}, {2, "a", "b", "0"}}, {"a", "b"});
  CHECK(reliability_factoring(dead) == 0);
  CHECK(reliability_bruteforce(dead) == 0);
}

TEST_CASE("enumeration bound") {
  std::vector<E> edges;
  for (int i = 1; i <= 6; ++i) edges.push_back({i, "a", "b"});
  auto g = make_graph({"a", "b"}, edges, {"a", "b"});
  CHECK_THROWS_AS(reliability_bruteforce(g, 5), EnumerationBoundError);
  CHECK_THROWS_AS(reliability_polynomial(g, 5), EnumerationBoundError);
  CHECK_THROWS_AS(state_distribution(g, std::vector<std::string>{"a"}, 5), EnumerationBoundError);
  try {
    reliability_bruteforce(g, 5);
  } catch (const EnumerationBoundError& e) {
    CHECK(std::string(e.what()).find("factoring") != std::string::npos);
  }
  CHECK(reliability_bruteforce(g, 6) == 1 - Rational(1, 64));
}

TEST_CASE("routes agree on random graphs") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng, 6, 11);
    const Rational oracle = naive_reliability(g);
    CHECK(reliability_bruteforce(g) == oracle);
    CHECK(reliability_factoring(g) == oracle);
  }
}

TEST_CASE("reliability polynomial") {
  auto edge = make_graph({"a", "b"}, {{1, "a", "b"}}, {"a", "b"});
  CHECK(reliability_polynomial(edge).coefficients == std::vector<BigInt>{0, 1});
  auto tri = reliability_polynomial(triangle());
  CHECK(tri.coefficients == std::vector<BigInt>{0, 0, 3, 1});
  CHECK(tri.evaluate(Rational(1, 2)) == Rational(1, 2));
  CHECK(tri.power_basis() == std::vector<BigInt>{0, 0, 3, -2});

  // K4 has highest term ±3! p^6
  auto k4 = reliability_polynomial(gamma_graph(4, Partition::singletons(4)));
  CHECK(abs(k4.power_basis().back()) == 6);

  Rng rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = random_graph(rng, 5, 9);
    auto poly = reliability_polynomial(g);
    const auto m = g.edge_count();
    for (std::size_t i = 0; i <= m; ++i) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), m, i);
      CHECK(poly.coefficients[i] <= binom);
    }
    const Rational p = random_probability(rng);
    CHECK(poly.evaluate(p) == reliability_bruteforce(g.with_uniform_probability(p)));
    CHECK(poly.evaluate(1) == (is_k_connected(g) ? 1 : 0));
  }
}

TEST_CASE("state distributions") {
  const std::vector<std::string> ab = {"a", "b"};
  auto empty = make_graph({"a", "b"}, {}, {"a", "b"});
  auto d0 = state_distribution(empty, ab);
  CHECK(d0.at(P("1|2")) == 1);
  CHECK(d0.at(P("12")) == 0);

  auto edge = make_graph({"a", "b"}, {{1, "a", "b", "2/7"}}, {"a", "b"});
  auto d1 = state_distribution(edge, ab);
  CHECK(d1.at(P("12")) == Rational(2, 7));
  CHECK(d1.at(P("1|2")) == Rational(5, 7));

  // split bridge, first side with only the boundary as terminals
  auto side = bridge_split().g1.with_terminals({false, true, true});
  auto d = state_distribution(side, ab);
  CHECK(d.at(P("12")) == Rational(5, 8));
  CHECK(d.at(P("1|2")) == Rational(3, 8));
  CHECK(d.total() == 1);
  CHECK(d.detached == 0);

  // with s a terminal as well, states isolating s are set aside
  auto full = state_distribution(bridge_split().g1, ab);
  CHECK(full.at(P("12")) == Rational(1, 2));
  CHECK(full.at(P("1|2")) == Rational(1, 4));
  CHECK(full.detached == Rational(1, 4));
  CHECK(full.total() == 1);
}

TEST_CASE("joint reliability") {
  const std::vector<std::string> ab = {"a", "b"};
  auto split = bridge_split();
  CHECK(joint_reliability(state_distribution(split.g1, ab), state_distribution(split.g2, ab)) ==
        naive_reliability(union_graph(split)));

  StateDistribution top, lonely;
  top.n = lonely.n = 3;
  for (const auto& p : all_partitions(3)) top.probs[p] = lonely.probs[p] = 0;
  top.probs[Partition::top(3)] = 1;
  lonely.probs[Partition::singletons(3)] = 1;
  CHECK(joint_reliability(lonely, top) == 1);
  CHECK(joint_reliability(lonely, lonely) == 0);
  StateDistribution other;
  other.n = 2;
  CHECK_THROWS_AS(joint_reliability(lonely, other), PartitionError);
}

TEST_CASE("conditioned reliability") {
  const std::vector<std::string> ab = {"a", "b"};
  auto side = bridge_split().g1.with_terminals({false, true, true});
  CHECK(conditioned_reliability(side, ab, P("12")) == 1);
  CHECK(conditioned_reliability(side, ab, P("1|2")) == reliability_factoring(side));

  for (const auto& g : {side, bridge_split().g1, bridge_split().g2}) {
    const auto d = state_distribution(g, ab);
    for (const auto& a : all_partitions(2)) {
      Rational via_states = 0;
      for (const auto& [b, p] : d.probs)
        if (is_connected_pair(a, b)) via_states += p;
      CHECK(conditioned_reliability(g, ab, a) == via_states);
    }
  }
}

TEST_CASE("factorized reliability on named decompositions") {
  auto split = bridge_split();
  auto r = factorized_reliability(split);
  CHECK(r.reliability == Rational(7, 16));
  CHECK(r.warnings.empty());
  CHECK(r.states.size() == 2);
  CHECK(n2_closed_form(split) == Rational(7, 16));

  // articulation point: the product of the two sides
  auto t1 = make_graph({"k", "a", "b"}, {{1, "k", "a", "1/3"}, {2, "a", "b"}, {3, "b", "k", "2/5"}}, {"k", "a"});
  auto t2 = make_graph({"k", "c", "d"}, {{4, "k", "c"}, {5, "c", "d", "3/4"}, {6, "d", "k"}}, {"k", "c", "d"});
  CutDecomposition art{t1, t2, {"k"}};
  CHECK(factorized_reliability(art).reliability == reliability_factoring(t1) * reliability_factoring(t2));
  CHECK(factorized_reliability(art).reliability == naive_reliability(union_graph(art)));

  // a degenerate two-node boundary naming the same node twice
  CutDecomposition twice{t1, t2, {"k", "k"}};
  CHECK(n2_closed_form(twice) == reliability_factoring(t1) * reliability_factoring(t2));
  CHECK(factorized_reliability(twice).reliability == reliability_factoring(t1) * reliability_factoring(t2));
  CHECK_THROWS_AS(n2_closed_form(art), Error);

  // two K4 glued along three nodes, all terminal
  auto k4 = [](const std::string& extra, EdgeId start) {
    std::vector<std::string> ns = {"k1", "k2", "k3", extra};
    std::vector<E> es;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) es.push_back({start++, ns[i], ns[j]});
    return make_graph(ns, es, ns);
  };
  CutDecomposition glued{k4("x", 1), k4("y", 7), {"k1", "k2", "k3"}};
  const Rational oracle = naive_reliability(union_graph(glued));
  CHECK(oracle == Rational(1481, 2048));
  CHECK(factorized_reliability(glued).reliability == oracle);
  CHECK(factorized_reliability(glued, {OrderVariant::ReversedLevels, 3}).reliability == oracle);
}

TEST_CASE("factorized reliability reports a stranded terminal") {
  auto split = bridge_split();
  split.g2 = make_graph({"a", "b", "t"}, {{4, "a", "b"}}, {"a", "b", "t"});
  auto r = factorized_reliability(split);
  CHECK(r.reliability == 0);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("Hypothesis 2") != std::string::npos);

  auto shared = bridge_split();
  shared.g2 = make_graph({"a", "b", "t"}, {{3, "a", "t"}, {5, "b", "t"}}, {"a", "b", "t"});
  CHECK_THROWS_AS(factorized_reliability(shared), DecompositionError);
}

TEST_CASE("corpus: every route agrees") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& c : corpus(n, 30, 1234)) {
      const auto& d = c.decomposition;
      const auto g = union_graph(d);
      const Rational brute = reliability_bruteforce(g);
      const auto r = factorized_reliability(d, {OrderVariant::Canonical, 2});
      CHECK(r.reliability == brute);
      CHECK(reliability_factoring(g) == brute);
      const auto d1 = state_distribution(d.g1, d.boundary), d2 = state_distribution(d.g2, d.boundary);
      CHECK(joint_reliability(d1, d2) == brute);
      CHECK(d1.total() == 1);
      if (n == 2) CHECK(n2_closed_form(d) == brute);
      for (std::size_t i = 0; i < r.states.size(); ++i) {
        Rational via_states = 0;
        for (const auto& [b, p] : d1.probs)
          if (is_connected_pair(r.states[i], b)) via_states += p;
        CHECK(r.side1[i] == via_states);
      }
    }
  }
}

TEST_CASE("gamma graph construction") {
  auto g = gamma_graph(4, Partition::singletons(4), Rational(1, 3));
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.terminal_count() == 4);
  CHECK(g.edge(0).id == 1);
  CHECK(g.edge(0).p == Rational(1, 3));
  auto h = gamma_graph(3, P("12|3"));
  CHECK(h.node_count() == 2);
  CHECK(h.edge_count() == 3);
}
