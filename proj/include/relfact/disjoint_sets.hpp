#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace relfact {

// Union-find over 0..n-1 with path halving and union by size. Small enough to
// be copied once per enumerated state.
class DisjointSets {
 public:
  DisjointSets() = default;
  explicit DisjointSets(std::size_t n) { reset(n); }

  void reset(std::size_t n) {
    parent_.resize(n);
    size_.assign(n, 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    sets_ = n;
  }

  void assign(const DisjointSets& other) {
    parent_.assign(other.parent_.begin(), other.parent_.end());
    size_.assign(other.size_.begin(), other.size_.end());
    sets_ = other.sets_;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

  std::size_t element_count() const { return parent_.size(); }
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::size_t sets_ = 0;
};

}  // namespace relfact
