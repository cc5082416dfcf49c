#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace relfact {

/// Largest boundary size the lattice code accepts. Bell(8) = 4140.
inline constexpr std::size_t kMaxBoundary = 8;

/// A set partition of {1..n} (a connectivity state of n boundary nodes).
///
/// Stored as a restricted growth string: element i carries the index of its
/// block, blocks numbered in order of their smallest element. That form is
/// canonical, so equality and ordering are plain array comparisons.
/// Elements are 0-based in the API; text and block lists are 1-based.
class Partition {
 public:
  Partition() = default;

  static Partition singletons(std::size_t n);
  static Partition top(std::size_t n);
  /// Any labelling (equal labels = same block) is accepted and canonicalized.
  static Partition from_labels(std::span<const int> labels);
  /// 1-based blocks that must cover {1..n} exactly once.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks);
  /// Parses the "13|2" syntax. The ground set is {1..n} where n is the
  /// largest element mentioned; every element must appear exactly once.
  static Partition parse(std::string_view text);

  std::size_t size() const { return n_; }
  std::size_t block_count() const { return blocks_; }
  int block_of(std::size_t element) const { return rgs_[element]; }

  std::vector<std::vector<int>> blocks() const;
  /// Block sizes, largest first.
  std::vector<std::size_t> shape() const;

  bool is_top() const { return blocks_ == 1; }
  bool is_singletons() const { return blocks_ == n_; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::uint8_t n_ = 0;
  std::uint8_t blocks_ = 0;
  std::array<std::uint8_t, kMaxBoundary> rgs_{};
};

/// Finest partition coarser than both.
Partition join(const Partition& a, const Partition& b);
/// Coarsest partition finer than both.
Partition meet(const Partition& a, const Partition& b);
/// True iff the two states together connect the whole boundary.
bool is_connected_pair(const Partition& a, const Partition& b);
/// a <= b: every block of a lies inside a block of b.
bool refines(const Partition& a, const Partition& b);
bool strictly_refines(const Partition& a, const Partition& b);

/// Permutation of {0..n-1}; sigma[i] is the image of i.
using Permutation = std::vector<std::size_t>;

Partition conjugate(const Permutation& sigma, const Partition& a);

std::vector<Partition> all_partitions(std::size_t n);

/// Partitions obtained from a by splitting one block into two non-empty parts.
std::vector<Partition> lower_covers(const Partition& a);

struct Orbit {
  std::vector<Partition> members;  // sorted by canonical string
  std::vector<std::size_t> shape;  // shared block-size multiset, largest first
  std::size_t block_count = 0;

  std::size_t size() const { return members.size(); }
};

/// Conjugation classes of all partitions of {1..n}, finest level first and,
/// within a level, by descending shape.
std::vector<Orbit> orbits(std::size_t n);

enum class OrderVariant { Canonical, ReversedLevels };

/// A linear order on all partitions of {1..n} that extends refinement
/// (finer states come first).
///
/// Canonical: levels by decreasing block count, orbits within a level by
/// descending shape, orbit members by canonical string. ReversedLevels
/// reverses the sequence inside each level, which is still coherent.
class CoherentOrder {
 public:
  explicit CoherentOrder(std::size_t n, OrderVariant variant = OrderVariant::Canonical);

  std::size_t n() const { return n_; }
  OrderVariant variant() const { return variant_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<Partition>& states() const { return states_; }
  const Partition& operator[](std::size_t i) const { return states_[i]; }
  std::size_t index_of(const Partition& p) const;

 private:
  std::size_t n_;
  OrderVariant variant_;
  std::vector<Partition> states_;
  std::map<Partition, std::size_t> index_;
};

}  // namespace relfact
