#include "relfact/partition.hpp"

#include <algorithm>

#include "relfact/disjoint_sets.hpp"
#include "relfact/errors.hpp"

namespace relfact {

namespace {

void check_size(std::size_t n) {
  if (n < 1 || n > kMaxBoundary) {
    throw PartitionError("boundary size " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxBoundary) + "]");
  }
}

void check_same_ground(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw PartitionError("ground-set mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

Partition Partition::singletons(std::size_t n) {
  check_size(n);
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i);
  return from_labels(labels);
}

Partition Partition::top(std::size_t n) {
  check_size(n);
  std::vector<int> labels(n, 0);
  return from_labels(labels);
}

Partition Partition::from_labels(std::span<const int> labels) {
  check_size(labels.size());
  Partition p;
  p.n_ = static_cast<std::uint8_t>(labels.size());
  std::array<int, kMaxBoundary> seen{};
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::uint8_t assigned = next;
    for (std::uint8_t b = 0; b < next; ++b) {
      if (seen[b] == labels[i]) {
        assigned = b;
        break;
      }
    }
    if (assigned == next) seen[next++] = labels[i];
    p.rgs_[i] = assigned;
  }
  p.blocks_ = next;
  return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks) {
  check_size(n);
  std::vector<int> labels(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw PartitionError("empty block");
    for (int e : blocks[b]) {
      if (e < 1 || static_cast<std::size_t>(e) > n) {
        throw PartitionError("element " + std::to_string(e) + " outside {1.." + std::to_string(n) + "}");
      }
      if (labels[e - 1] != -1) throw PartitionError("element " + std::to_string(e) + " repeated");
      labels[e - 1] = static_cast<int>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
    throw PartitionError("blocks do not cover {1.." + std::to_string(n) + "}");
  }
  return from_labels(labels);
}

Partition Partition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks(1);
  int largest = 0;
  for (char c : text) {
    if (c == '|') {
      blocks.emplace_back();
    } else if (c >= '1' && c <= '0' + static_cast<int>(kMaxBoundary)) {
      blocks.back().push_back(c - '0');
      largest = std::max(largest, c - '0');
    } else {
      throw PartitionError("bad character in partition '" + std::string(text) + "'");
    }
  }
  if (largest == 0) throw PartitionError("empty partition text");
  return from_blocks(static_cast<std::size_t>(largest), blocks);
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (std::size_t i = 0; i < n_; ++i) out[rgs_[i]].push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<std::size_t> Partition::shape() const {
  std::vector<std::size_t> sizes(blocks_, 0);
  for (std::size_t i = 0; i < n_; ++i) ++sizes[rgs_[i]];
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

std::string Partition::to_string() const {
  std::string out;
  for (const auto& block : blocks()) {
    if (!out.empty()) out += '|';
    for (int e : block) out += static_cast<char>('0' + e);
  }
  return out;
}

Partition join(const Partition& a, const Partition& b) {
  check_same_ground(a, b);
  const std::size_t n = a.size();
  DisjointSets ds(n);
  std::array<int, kMaxBoundary> first_a{}, first_b{};
  first_a.fill(-1);
  first_b.fill(-1);
  for (std::size_t i = 0; i < n; ++i) {
    int ia = a.block_of(i), ib = b.block_of(i);
    if (first_a[ia] < 0) first_a[ia] = static_cast<int>(i); else ds.unite(first_a[ia], static_cast<int>(i));
    if (first_b[ib] < 0) first_b[ib] = static_cast<int>(i); else ds.unite(first_b[ib], static_cast<int>(i));
  }
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = ds.find(static_cast<int>(i));
  return Partition::from_labels(labels);
}

Partition meet(const Partition& a, const Partition& b) {
  check_same_ground(a, b);
  std::vector<int> labels(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    labels[i] = a.block_of(i) * static_cast<int>(kMaxBoundary) + b.block_of(i);
  }
  return Partition::from_labels(labels);
}

bool is_connected_pair(const Partition& a, const Partition& b) { return join(a, b).is_top(); }

bool refines(const Partition& a, const Partition& b) {
  check_same_ground(a, b);
  std::array<int, kMaxBoundary> image{};
  image.fill(-1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int& target = image[a.block_of(i)];
    if (target < 0) target = b.block_of(i);
    else if (target != b.block_of(i)) return false;
  }
  return true;
}

bool strictly_refines(const Partition& a, const Partition& b) { return a != b && refines(a, b); }

Partition conjugate(const Permutation& sigma, const Partition& a) {
  if (sigma.size() != a.size()) throw PartitionError("permutation size mismatch");
  std::vector<int> labels(a.size(), -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sigma[i] >= a.size() || labels[sigma[i]] != -1) throw PartitionError("not a permutation");
    labels[sigma[i]] = a.block_of(i);
  }
  return Partition::from_labels(labels);
}

std::vector<Partition> all_partitions(std::size_t n) {
  check_size(n);
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  // Restricted growth strings in lexicographic order: rgs[i] <= 1 + max(rgs[0..i)).
  auto extend = [&](auto&& self, std::size_t i, int max_label) -> void {
    if (i == n) {
      out.push_back(Partition::from_labels(rgs));
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      rgs[i] = label;
      self(self, i + 1, std::max(max_label, label));
    }
  };
  rgs[0] = 0;
  extend(extend, 1, 0);
  return out;
}

std::vector<Partition> lower_covers(const Partition& a) {
  std::vector<Partition> out;
  const auto blocks = a.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    if (block.size() < 2) continue;
    // Subsets of block[1..] moved to a new block; block[0] stays.
    const std::size_t rest = block.size() - 1;
    for (std::uint32_t mask = 1; mask < (1u << rest); ++mask) {
      std::vector<int> labels(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) labels[i] = a.block_of(i);
      for (std::size_t j = 0; j < rest; ++j) {
        if (mask & (1u << j)) labels[block[j + 1] - 1] = static_cast<int>(kMaxBoundary);
      }
      out.push_back(Partition::from_labels(labels));
    }
  }
  return out;
}

std::vector<Orbit> orbits(std::size_t n) {
  std::map<std::vector<std::size_t>, Orbit> by_shape;
  for (const auto& p : all_partitions(n)) {
    auto& orbit = by_shape[p.shape()];
    orbit.shape = p.shape();
    orbit.block_count = p.block_count();
    orbit.members.push_back(p);
  }
  std::vector<Orbit> out;
  for (auto& [shape, orbit] : by_shape) {
    std::sort(orbit.members.begin(), orbit.members.end(),
              [](const Partition& x, const Partition& y) { return x.to_string() < y.to_string(); });
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const Orbit& x, const Orbit& y) {
    if (x.block_count != y.block_count) return x.block_count > y.block_count;
    return x.shape > y.shape;
  });
  return out;
}

CoherentOrder::CoherentOrder(std::size_t n, OrderVariant variant) : n_(n), variant_(variant) {
  const auto classes = orbits(n);
  auto level_begin = states_.size();
  std::size_t level = classes.empty() ? 0 : classes.front().block_count;
  auto close_level = [&] {
    if (variant_ == OrderVariant::ReversedLevels) {
      std::reverse(states_.begin() + static_cast<std::ptrdiff_t>(level_begin), states_.end());
    }
    level_begin = states_.size();
  };
  for (const auto& orbit : classes) {
    if (orbit.block_count != level) {
      close_level();
      level = orbit.block_count;
    }
    states_.insert(states_.end(), orbit.members.begin(), orbit.members.end());
  }
  close_level();
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::size_t CoherentOrder::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw PartitionError("partition " + p.to_string() + " not in order");
  return it->second;
}

}  // namespace relfact
