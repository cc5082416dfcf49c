#include "relfact/algebra.hpp"

#include <mutex>

#include "relfact/errors.hpp"

namespace relfact {

namespace {

void add_term(AlgebraVector& v, const Partition& p, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = v.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

AlgebraVector subtract(AlgebraVector v, const AlgebraVector& w) {
  for (const auto& [p, c] : w) add_term(v, p, -c);
  return v;
}

Partition pair_partition(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<int> labels(n);
  for (std::size_t k = 0; k < n; ++k) labels[k] = static_cast<int>(k);
  labels[j] = static_cast<int>(i);
  return Partition::from_labels(labels);
}

BigInt factorial(std::size_t k) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace

AlgebraVector join_action(const Partition& s, const AlgebraVector& v) {
  AlgebraVector out;
  for (const auto& [p, c] : v) add_term(out, join(s, p), c);
  return out;
}

AlgebraVector meet_action(const Partition& s, const AlgebraVector& v) {
  AlgebraVector out;
  for (const auto& [p, c] : v) add_term(out, meet(s, p), c);
  return out;
}

AlgebraVector conjugate(const Permutation& sigma, const AlgebraVector& v) {
  AlgebraVector out;
  for (const auto& [p, c] : v) add_term(out, conjugate(sigma, p), c);
  return out;
}

AlgebraVector pi_vector(const Partition& a) {
  AlgebraVector v{{a, Rational(1)}};
  if (a.is_top()) return v;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.block_of(i) == a.block_of(j)) continue;
      // v · (e − ⟨(i j)⟩)
      v = subtract(v, join_action(pair_partition(n, i, j), v));
    }
  }
  return v;
}

AlgebraVector xi_vector(const Partition& a) {
  AlgebraVector v{{a, Rational(1)}};
  if (a.is_singletons()) return v;
  // Support of v stays below a, so v ∩ (a − c) = v − v ∩ c.
  for (const auto& c : lower_covers(a)) v = subtract(v, meet_action(c, v));
  return v;
}

BigInt connectivity_number(const Partition& a) {
  const auto v = pi_vector(a);
  auto it = v.find(Partition::top(a.size()));
  if (it == v.end()) return 0;
  return it->second.get_num();
}

IntMatrix build_A(const CoherentOrder& order) {
  const std::size_t m = order.size();
  IntMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = is_connected_pair(order[i], order[j]) ? 1 : 0;
  return a;
}

ConnectivityBundle invert_A(const CoherentOrder& order) {
  const std::size_t m = order.size();
  ConnectivityBundle bundle{order, build_A(order), IntMatrix(m, m), RatMatrix(m, m), IntMatrix(m, m), {}};

  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& [p, c] : pi_vector(order[j])) bundle.B(order.index_of(p), j) = c.get_num();
    for (const auto& [p, c] : xi_vector(order[j])) bundle.D(order.index_of(p), j) = c.get_num();
  }
  const std::size_t top = order.index_of(Partition::top(order.n()));
  for (std::size_t j = 0; j < m; ++j) {
    const BigInt& alpha = bundle.B(top, j);
    if (alpha == 0) {
      throw InternalError("connectivity number of " + order[j].to_string() + " is zero");
    }
    bundle.C(j, j) = Rational(1) / Rational(alpha);
  }

  bundle.A_inv = to_rational(bundle.B) * bundle.C * to_rational(bundle.D);
  if (!(to_rational(bundle.A) * bundle.A_inv == RatMatrix::identity(m))) {
    throw InternalError("B·C·D is not the inverse of the connectivity matrix for n = " +
                        std::to_string(order.n()));
  }
  return bundle;
}

std::shared_ptr<const ConnectivityBundle> connectivity_bundle(std::size_t n, OrderVariant variant) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, OrderVariant>, std::shared_ptr<const ConnectivityBundle>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, variant}];
  if (!slot) slot = std::make_shared<const ConnectivityBundle>(invert_A(CoherentOrder(n, variant)));
  return slot;
}

BigInt determinant(const IntMatrix& input) {
  if (!input.square()) throw LinearAlgebraError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt det_A(std::size_t n) { return determinant(build_A(CoherentOrder(n))); }

BigInt det_A_orbit_formula(std::size_t n) {
  BigInt product = 1;
  for (const auto& orbit : orbits(n)) {
    BigInt f = factorial(orbit.block_count - 1);
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), f.get_mpz_t(), orbit.size());
    product *= power;
  }
  return product;
}

RatMatrix rational_inverse(const IntMatrix& input) {
  if (!input.square()) throw LinearAlgebraError("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  RatMatrix m = to_rational(input);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw LinearAlgebraError("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(col, c), m(pivot, c));
        std::swap(inv(col, c), inv(pivot, c));
      }
    }
    const Rational scale = 1 / m(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace relfact
