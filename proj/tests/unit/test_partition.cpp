#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "relfact/errors.hpp"
#include "relfact/partition.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace relfact;
using namespace relfact::testing;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

std::vector<std::string> labels(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

TEST_CASE("parsing and canonical strings") {
  CHECK(P("13|2").to_string() == "13|2");
  CHECK(P("2|31").to_string() == "13|2");
  CHECK(P("1234").is_top());
  CHECK(P("1|2|3").is_singletons());
  CHECK(P("12|34").shape() == std::vector<std::size_t>{2, 2});
  CHECK(Partition::from_blocks(3, {{3, 1}, {2}}) == P("13|2"));
  CHECK_THROWS_AS(P("12|2"), PartitionError);
  CHECK_THROWS_AS(P("13"), PartitionError);
  CHECK_THROWS_AS(P(""), PartitionError);
  CHECK_THROWS_AS(P("1a"), PartitionError);
}

TEST_CASE("all_partitions") {
  CHECK(labels(all_partitions(1)) == std::vector<std::string>{"1"});
  auto three = labels(all_partitions(3));
  std::sort(three.begin(), three.end());
  std::vector<std::string> expected = {"1|2|3", "1|23", "13|2", "12|3", "123"};
  std::sort(expected.begin(), expected.end());
  CHECK(three == expected);

  const auto bell = bell_numbers(9);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto ps = all_partitions(n);
    CHECK(ps.size() == bell[n]);
    const std::set<Partition> unique(ps.begin(), ps.end());
    CHECK(unique.size() == ps.size());
    if (n <= 6) CHECK(unique == partitions_by_insertion(n));
  }
  CHECK(std::vector<std::size_t>{all_partitions(1).size(), all_partitions(2).size(), all_partitions(3).size(),
                                 all_partitions(4).size(), all_partitions(5).size()} ==
        std::vector<std::size_t>{1, 2, 5, 15, 52});
  CHECK_THROWS_AS(all_partitions(0), PartitionError);
  CHECK_THROWS_AS(all_partitions(9), PartitionError);
}

TEST_CASE("join and meet examples") {
  CHECK(join(P("13|2"), P("1|2|3")) == P("13|2"));
  CHECK(join(P("12|3"), P("1|23")) == P("123"));
  CHECK(join(P("12|34"), P("13|24")) == P("1234"));
  CHECK(meet(P("13|2"), P("123")) == P("13|2"));
  CHECK(meet(P("12|3"), P("1|23")) == P("1|2|3"));
  CHECK(meet(P("123|4"), P("12|34")) == P("12|3|4"));
  CHECK_THROWS_AS(join(P("12"), P("1|23")), PartitionError);
  CHECK_THROWS_AS(meet(P("12"), P("1|23")), PartitionError);
}

TEST_CASE("connected pairs and refinement") {
  CHECK(is_connected_pair(P("123"), P("1|2|3")));
  CHECK_FALSE(is_connected_pair(P("1|2"), P("1|2")));
  CHECK(is_connected_pair(P("1|23"), P("13|2")));
  CHECK_FALSE(is_connected_pair(P("1|23"), P("1|23")));
  CHECK(refines(P("1|2|3|4"), P("13|24")));
  CHECK(refines(P("13|24"), P("1234")));
  CHECK(refines(P("12|3|4"), P("12|34")));
  CHECK_FALSE(refines(P("13|2|4"), P("12|34")));
  CHECK_FALSE(strictly_refines(P("12|34"), P("12|34")));
}

TEST_CASE("lattice laws, exhaustive to n=4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto ps = all_partitions(n);
    for (const auto& a : ps) {
      CHECK(join(a, a) == a);
      CHECK(meet(a, a) == a);
      CHECK(join(a, Partition::singletons(n)) == a);
      CHECK(meet(a, Partition::top(n)) == a);
      for (const auto& b : ps) {
        const auto j = join(a, b), m = meet(a, b);
        CHECK(j == naive_join(a, b));
        CHECK(m == naive_meet(a, b));
        CHECK(j == join(b, a));
        CHECK(m == meet(b, a));
        CHECK(join(a, meet(a, b)) == a);
        CHECK(meet(a, join(a, b)) == a);
        CHECK(refines(a, b) == naive_refines(a, b));
        CHECK(refines(a, b) == (j == b));
        CHECK(refines(a, b) == (m == a));
        CHECK(is_connected_pair(a, b) == is_connected_pair(b, a));
        for (const auto& c : ps) {
          CHECK(join(join(a, b), c) == join(a, join(b, c)));
          CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
          if (is_connected_pair(a, b) && refines(b, c)) CHECK(is_connected_pair(a, c));
        }
      }
    }
  }
}

TEST_CASE("lattice laws, randomized at n=5") {
  Rng rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto a = random_partition(5, rng), b = random_partition(5, rng), c = random_partition(5, rng);
    CHECK(join(a, b) == naive_join(a, b));
    CHECK(meet(a, b) == naive_meet(a, b));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
    CHECK(join(a, meet(a, b)) == a);
    CHECK(meet(a, join(a, b)) == a);
    CHECK(refines(a, b) == (join(a, b) == b));
    CHECK(refines(a, b) == (meet(a, b) == a));
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Permutation{0, 1, 2}, P("1|23")) == P("1|23"));
  CHECK(conjugate(Permutation{1, 0, 2}, P("1|23")) == P("13|2"));

  std::set<Partition> orbit;
  for (const auto& s : all_permutations(4)) orbit.insert(conjugate(s, P("12|34")));
  CHECK(orbit == std::set<Partition>{P("12|34"), P("13|24"), P("14|23")});

  Rng rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto s = random_permutation(n, rng);
    const auto a = random_partition(n, rng), b = random_partition(n, rng);
    CHECK(conjugate(s, join(a, b)) == join(conjugate(s, a), conjugate(s, b)));
    CHECK(conjugate(s, meet(a, b)) == meet(conjugate(s, a), conjugate(s, b)));
    CHECK(conjugate(s, a).shape() == a.shape());
  }
}

TEST_CASE("orbits") {
  CHECK(orbits(1).size() == 1);

  using Table = std::multiset<std::pair<std::size_t, std::size_t>>;  // (#O, m_O)
  auto table = [](std::size_t n) {
    Table t;
    for (const auto& o : orbits(n)) t.emplace(o.size(), o.block_count);
    return t;
  };
  CHECK(table(4) == Table{{1, 4}, {6, 3}, {3, 2}, {4, 2}, {1, 1}});
  CHECK(table(5) == Table{{1, 5}, {10, 4}, {15, 3}, {10, 3}, {5, 2}, {10, 2}, {1, 1}});
  // levels run finest first
  const auto four = orbits(4);
  for (std::size_t i = 1; i < four.size(); ++i) CHECK(four[i - 1].block_count >= four[i].block_count);

  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t total = 0;
    const auto perms = all_permutations(n);
    for (const auto& o : orbits(n)) {
      total += o.size();
      const std::set<Partition> members(o.members.begin(), o.members.end());
      for (const auto& a : o.members) {
        CHECK(a.block_count() == o.block_count);
        CHECK(a.shape() == o.shape);
        for (const auto& s : perms) CHECK(members.count(conjugate(s, a)) == 1);
      }
    }
    CHECK(total == all_partitions(n).size());
  }
}

TEST_CASE("coherent order") {
  CHECK(labels(CoherentOrder(2).states()) == std::vector<std::string>{"1|2", "12"});
  const auto three = labels(CoherentOrder(3).states());
  CHECK(three.front() == "1|2|3");
  CHECK(three.back() == "123");
  CHECK(std::set<std::string>(three.begin() + 1, three.end() - 1) ==
        std::set<std::string>{"1|23", "13|2", "12|3"});

  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto variant : {OrderVariant::Canonical, OrderVariant::ReversedLevels}) {
      CoherentOrder order(n, variant);
      CHECK(order.size() == all_partitions(n).size());
      const std::set<Partition> unique(order.states().begin(), order.states().end());
      CHECK(unique.size() == order.size());
      for (std::size_t i = 0; i < order.size(); ++i) CHECK(order.index_of(order[i]) == i);
      for (const auto& a : order.states())
        for (const auto& b : order.states())
          if (strictly_refines(a, b)) CHECK(order.index_of(a) < order.index_of(b));
      // each orbit occupies a contiguous run
      for (const auto& o : orbits(n)) {
        std::vector<std::size_t> idx;
        for (const auto& a : o.members) idx.push_back(order.index_of(a));
        std::sort(idx.begin(), idx.end());
        CHECK(idx.back() - idx.front() + 1 == idx.size());
      }
    }
  }
  CHECK(CoherentOrder(4, OrderVariant::ReversedLevels).states() != CoherentOrder(4).states());
}
