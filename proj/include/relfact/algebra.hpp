#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "relfact/matrix.hpp"
#include "relfact/partition.hpp"
#include "relfact/rational.hpp"

namespace relfact {

/// Element of the vector space spanned by the partitions of {1..n};
/// absent keys are zero coefficients.
using AlgebraVector = std::map<Partition, Rational>;

/// Multiplies every basis element of v by s under join (resp. meet) and
/// collects terms. Zero coefficients are dropped.
AlgebraVector join_action(const Partition& s, const AlgebraVector& v);
AlgebraVector meet_action(const Partition& s, const AlgebraVector& v);
AlgebraVector conjugate(const Permutation& sigma, const AlgebraVector& v);

/// π(a) = a · Π (e − ⟨{i,j}⟩) over the pairs {i,j} split by a, expanded with
/// join as the product. π(top) = top.
AlgebraVector pi_vector(const Partition& a);

/// ξ(a) = ⋂ (a − c) over the lower covers c of a, expanded with meet as the
/// product. ξ(singletons) = singletons.
AlgebraVector xi_vector(const Partition& a);

/// Coefficient of the one-block partition in π(a); equals ±(m−1)!.
BigInt connectivity_number(const Partition& a);

/// a_ij = 1 iff states i and j together connect the boundary.
IntMatrix build_A(const CoherentOrder& order);

struct ConnectivityBundle {
  CoherentOrder order;
  IntMatrix A;
  IntMatrix B;  // columns are π expansions; unit lower-triangular
  RatMatrix C;  // diag(1 / α)
  IntMatrix D;  // columns are ξ expansions; unit upper-triangular
  RatMatrix A_inv;

  std::size_t n() const { return order.n(); }
  std::size_t size() const { return order.size(); }
};

/// Builds A and its inverse as B·C·D, checking A·A⁻¹ = I exactly.
ConnectivityBundle invert_A(const CoherentOrder& order);

/// Memoized invert_A keyed by (n, variant); safe to call from any thread.
std::shared_ptr<const ConnectivityBundle> connectivity_bundle(std::size_t n, OrderVariant variant);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);
BigInt det_A(std::size_t n);
/// Π over orbits of ((m_O − 1)!)^{#O}.
BigInt det_A_orbit_formula(std::size_t n);

/// Inverse by exact Gauss–Jordan elimination. Throws LinearAlgebraError when
/// singular.
RatMatrix rational_inverse(const IntMatrix& m);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct InvariantFactors {
  std::vector<BigInt> diagonal;    // d_1 | d_2 | ... , non-negative
  std::vector<PrimePower> torsion;  // Z_{p^k} summands of the cokernel, sorted by (p, k)
};

/// Smith normal form of a non-singular square integer matrix.
InvariantFactors smith_normal_form(IntMatrix m);

/// Prime-power decomposition of ⊕ Z_{d} over the given orders (entries ≤ 1
/// are skipped).
std::vector<PrimePower> torsion_prime_powers(const std::vector<BigInt>& orders);

}  // namespace relfact
