#pragma once

// Brute-force Galois cohomology for the finite group G = Z/p^n1 x Z/p^n2.
//
// H^2(G, M) is computed as H^1(G, M (x) Q/Z), which is naturally isomorphic
// for a lattice M. A 1-cocycle is a crossed homomorphism and is determined by
// its values x1 = f(tau1), x2 = f(tau2); these live in M (x) p^-e Z/Z = (Z/p^e)^rank
// with e = 2 log_p |G|. Restriction to a subgroup D is the literal restriction
// of f to D.

#include <cstddef>
#include <utility>
#include <vector>

#include "kummer/abelian_group.hpp"
#include "kummer/invariants.hpp"
#include "kummer/modular_matrix.hpp"

namespace kummer {

/// Row-major square integer matrix.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<i64> a;

  static IntMatrix identity(std::size_t n);
  i64 operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  i64& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

/// A lattice with an action of G = <tau1> x <tau2>, |tau1| = p^n1, |tau2| = p^n2.
class GModule {
 public:
  /// Checks that the matrices commute and that tau_k^(p^n_k) acts trivially.
  GModule(u64 p, unsigned n1, unsigned n2, IntMatrix t1, IntMatrix t2);

  /// Z^rank with trivial action.
  static GModule trivial(u64 p, unsigned n1, unsigned n2, std::size_t rank);
  /// Permutation module Z[X]; perm1/perm2 give the images of each point of X.
  static GModule permutation(u64 p, unsigned n1, unsigned n2, const std::vector<std::size_t>& perm1,
                             const std::vector<std::size_t>& perm2);

  u64 p() const noexcept { return p_; }
  unsigned n1() const noexcept { return n1_; }
  unsigned n2() const noexcept { return n2_; }
  u64 order1() const noexcept { return ord1_; }
  u64 order2() const noexcept { return ord2_; }
  u64 group_order() const noexcept { return ord1_ * ord2_; }
  std::size_t rank() const noexcept { return t1_.n; }
  const IntMatrix& t1() const noexcept { return t1_; }
  const IntMatrix& t2() const noexcept { return t2_; }

 private:
  u64 p_;
  unsigned n1_;
  unsigned n2_;
  u64 ord1_;
  u64 ord2_;
  IntMatrix t1_;
  IntMatrix t2_;
};

/// An element tau1^a tau2^b of G.
using GroupElement = std::pair<u64, u64>;

/// A subgroup of G given by generators.
struct SubgroupOfG {
  std::vector<GroupElement> generators;
};

/// All elements of the subgroup generated by `s`, sorted.
std::vector<GroupElement> expand(const GModule& m, const SubgroupOfG& s);

/// Every cyclic subgroup of G, each listed once.
std::vector<SubgroupOfG> cyclic_subgroups(const GModule& m);

struct OracleBounds {
  u64 max_group_order = 81;
  std::size_t max_rank = 64;
};

/// T^ = (sum_i Z[G/H_i]) / Z*(all-ones), H_i the annihilator of W_i, in the
/// basis of all cosets but the last one.
GModule character_lattice(const TowerSpec& spec, const OracleBounds& bounds = {});

/// Cohomology classes are represented by cocycle values (x1, x2), a vector of
/// length 2 * rank over Z/p^precision.
struct H2Result {
  AbelianPGroup group;
  unsigned precision = 0;
  std::vector<std::vector<u64>> cocycles;  ///< one representative per cyclic factor
};

H2Result h2(const GModule& m);

/// f(tau1^a tau2^b) for the crossed homomorphism with values x = (x1, x2).
std::vector<u64> evaluate_cocycle(const GModule& m, const ModRing& ring, const std::vector<u64>& x,
                                  const GroupElement& g);

/// g * v for v in M / p^precision.
std::vector<u64> act(const GModule& m, const ModRing& ring, const GroupElement& g, const std::vector<u64>& v);

/// Classes of H^2(G, M) whose restriction to each listed subgroup vanishes.
AbelianPGroup restriction_kernel(const GModule& m, const std::vector<SubgroupOfG>& subgroups);

/// Decomposition groups at the places above l1 and l2.
std::pair<SubgroupOfG, SubgroupOfG> ramified_decomposition_groups(const TowerSpec& spec);

struct OracleResult {
  AbelianPGroup sha_omega;
  AbelianPGroup sha;
};

/// Throws OracleOutOfRange when |G| or rank(T^) exceeds the bounds.
OracleResult sha_oracle(const TowerSpec& spec, const OracleBounds& bounds = {});

}  // namespace kummer
