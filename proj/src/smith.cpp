#include <algorithm>
#include <map>
#include <optional>

#include "relfact/algebra.hpp"
#include "relfact/errors.hpp"

namespace relfact {

namespace {

// Row and column operations on the trailing block; the pivot is the
// smallest nonzero |entry| and reductions are Euclidean.
class SmithReducer {
 public:
  explicit SmithReducer(IntMatrix& m) : m_(m), n_(m.rows()) {}

  void run() {
    for (std::size_t t = 0; t < n_; ++t) {
      while (true) {
        if (!move_smallest_to(t)) throw LinearAlgebraError("Smith normal form of a singular matrix");
        bool clean = true;
        for (std::size_t i = t + 1; i < n_; ++i) {
          if (m_(i, t) == 0) continue;
          BigInt q = m_(i, t) / m_(t, t);
          if (q != 0) add_row(i, t, -q);
          if (m_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (m_(t, j) == 0) continue;
          BigInt q = m_(t, j) / m_(t, t);
          if (q != 0) add_col(j, t, -q);
          if (m_(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        if (auto row = non_divisible_row(t)) {
          add_row(t, *row, 1);
          continue;
        }
        break;
      }
      if (m_(t, t) < 0) m_(t, t) = -m_(t, t);
    }
  }

 private:
  bool move_smallest_to(std::size_t t) {
    std::size_t best_r = n_, best_c = n_;
    BigInt best;
    for (std::size_t r = t; r < n_; ++r)
      for (std::size_t c = t; c < n_; ++c) {
        if (m_(r, c) == 0) continue;
        BigInt a = abs(m_(r, c));
        if (best_r == n_ || a < best) {
          best = a;
          best_r = r;
          best_c = c;
        }
      }
    if (best_r == n_) return false;
    if (best_r != t)
      for (std::size_t c = 0; c < n_; ++c) std::swap(m_(t, c), m_(best_r, c));
    if (best_c != t)
      for (std::size_t r = 0; r < n_; ++r) std::swap(m_(r, t), m_(r, best_c));
    return true;
  }

  std::optional<std::size_t> non_divisible_row(std::size_t t) {
    for (std::size_t i = t + 1; i < n_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (m_(i, j) % m_(t, t) != 0) return i;
    return std::nullopt;
  }

  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t c = 0; c < n_; ++c)
      if (m_(src, c) != 0) m_(dst, c) += k * m_(src, c);
  }

  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t r = 0; r < n_; ++r)
      if (m_(r, src) != 0) m_(r, dst) += k * m_(r, src);
  }

  IntMatrix& m_;
  std::size_t n_;
};

}  // namespace

std::vector<PrimePower> torsion_prime_powers(const std::vector<BigInt>& orders) {
  std::map<std::pair<BigInt, unsigned>, std::size_t> counts;
  for (BigInt d : orders) {
    if (d < 0) d = -d;
    if (d <= 1) continue;
    for (BigInt p = 2; p * p <= d; ++p) {
      unsigned k = 0;
      while (d % p == 0) {
        d /= p;
        ++k;
      }
      if (k) ++counts[{p, k}];
    }
    if (d > 1) ++counts[{d, 1u}];
  }
  std::vector<PrimePower> out;
  for (const auto& [key, mult] : counts) out.push_back(PrimePower{key.first, key.second, mult});
  return out;
}

InvariantFactors smith_normal_form(IntMatrix m) {
  if (!m.square()) throw LinearAlgebraError("Smith normal form of a non-square matrix");
  SmithReducer(m).run();
  InvariantFactors out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.diagonal.push_back(m(i, i));
  out.torsion = torsion_prime_powers(out.diagonal);
  return out;
}

}  // namespace relfact
