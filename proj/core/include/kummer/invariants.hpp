#pragma once

// Combinatorial invariants of L = K_0 x ... x K_m with K_i = k(l1^{a_i/p^n} l2^{b_i/p^n}):
// degrees eps_i, intersection exponents e_ij, the partition I = U_0 u U_1 u ...
// by r = e_{0,i}, l-equivalence classes and levels.

#include <map>
#include <string>
#include <vector>

#include "kummer/lattice.hpp"

namespace kummer {

using IndexSet = std::vector<int>;

/// A problem instance. pairs[0] describes K_0, pairs[1..m] the remaining
/// factors.
struct TowerSpec {
  PrimePowerCtx ctx;
  u64 l1 = 0;
  u64 l2 = 0;
  std::vector<Vec2Mod> pairs;

  int m() const noexcept { return static_cast<int>(pairs.size()) - 1; }
  friend bool operator==(const TowerSpec&, const TowerSpec&) = default;
};

/// Convenience constructor; validates (p, n) but not the instance hypotheses.
TowerSpec make_spec(u64 p, unsigned n, u64 l1, u64 l2,
                    const std::vector<std::pair<i64, i64>>& pairs);

/// Checks every standing hypothesis and throws InvalidInstance naming the
/// first violated one. Returns non-fatal warnings (repeated factors).
std::vector<std::string> validate(const TowerSpec& spec);

struct InvariantTable {
  PrimePowerCtx ctx;
  std::vector<Subgroup2> w;        ///< W_i, i = 0..m
  std::vector<unsigned> eps;       ///< eps_i = log_p |W_i|
  std::vector<std::vector<unsigned>> e;  ///< e_ij = log_p |W_i n W_j|
  std::vector<unsigned> r_values;  ///< R = {r : U_r nonempty}, ascending
  std::map<unsigned, IndexSet> u;  ///< r -> U_r (sorted)

  int m() const noexcept { return static_cast<int>(w.size()) - 1; }
  unsigned eps0() const noexcept { return eps.front(); }
  /// e_{0,i} - the exponent of [K_0 n K_i : k].
  unsigned e0(int i) const { return e[0][static_cast<std::size_t>(i)]; }
  /// eps_0 - e_{0,i}.
  unsigned e_index(int i) const { return eps0() - e0(i); }
  const IndexSet& u_of(unsigned r) const;
  IndexSet u_greater(unsigned r) const;
  IndexSet u_less(unsigned r) const;
};

/// Validates `spec` and computes all invariants.
InvariantTable build_table(const TowerSpec& spec);

/// Partition of `s` under the transitive closure of e_ij >= l. Classes are
/// sorted internally and ordered by their smallest element.
std::vector<IndexSet> equiv_classes(const InvariantTable& table, const IndexSet& s, unsigned l);

/// n_l(c): the number of l-equivalence classes of c.
std::size_t class_count(const InvariantTable& table, const IndexSet& c, unsigned l);

/// L(c) = min e_ij over i, j in c (i = j included, so a singleton has level eps_i).
unsigned level(const InvariantTable& table, const IndexSet& c);

struct AdmissibleSet {
  IndexSet c;
  unsigned supp = 0;
  friend bool operator==(const AdmissibleSet&, const AdmissibleSet&) = default;
};

/// All l-equivalence classes of size > 1 inside some U_r, each with its
/// support r. Ordered by r, then depth-first along the splitting tree.
std::vector<AdmissibleSet> admissible_sets(const InvariantTable& table);

/// Every class that occurs in U_r for some l >= L(U_r), singletons included,
/// in depth-first splitting order starting from U_r itself.
std::vector<IndexSet> class_tree(const InvariantTable& table, unsigned r);

/// W_c(d): the subgroup of the compositum of the degree-p^d subfields K_i(d),
/// i in c. Requires d <= eps_i for all i in c.
Subgroup2 composite(const InvariantTable& table, const IndexSet& c, unsigned d);

/// W_i(d), the subgroup of the degree-p^d subfield of K_i.
Subgroup2 truncated(const InvariantTable& table, int i, unsigned d);

std::string format_index_set(const IndexSet& c);

}  // namespace kummer
