#pragma once

// Local data at the ramified primes l1, l2 of F = k(l1^{1/p^n}, l2^{1/p^n})
// over k = Q(zeta_{p^n}), and the local-cyclicity test for subfields of F.

#include "kummer/arith.hpp"
#include "kummer/lattice.hpp"

namespace kummer {

/// Largest e with p^e | x. DomainError for x = 0.
unsigned vp(i64 x, u64 p);

/// Multiplicative order of a modulo the prime l, found by factoring l - 1 and
/// stripping prime factors. DomainError when l | a.
u64 mult_order(i64 a, u64 l);

/// Decomposition data at l1 and l2.
///
/// At l1 the decomposition group of F/k is G_{1} x (order p^{m12} subgroup of
/// G_{2}); at l2 it is (order p^{m21} subgroup of G_{1}) x G_{2}. Dually, the
/// kernel of W -> k_v^x/(k_v^x)^{p^n} is {0} x p^{m12}Z at l1 and
/// p^{m21}Z x {0} at l2.
struct LocalProfile {
  unsigned s1_at_l1 = 0;  ///< v_p(l1 - 1)
  unsigned s2_at_l1 = 0;  ///< v_p(ord(l2 mod l1))
  unsigned s1_at_l2 = 0;  ///< v_p(l2 - 1)
  unsigned s2_at_l2 = 0;  ///< v_p(ord(l1 mod l2))
  unsigned m12 = 0;
  unsigned m21 = 0;

  friend bool operator==(const LocalProfile&, const LocalProfile&) = default;
};

/// Unramified degree exponent max{min{n, s1} - (s1 - s2), 0}.
unsigned unramified_exponent(unsigned n, unsigned s1, unsigned s2);

/// Requires l1 != l2 prime and both != p; InvalidInstance otherwise.
LocalProfile local_profile(u64 p, unsigned n, u64 l1, u64 l2);

/// How to decide local cyclicity of the subfield attached to a subgroup Wc.
enum class LocalCyclicityRule {
  /// (Wc + K_v)/K_v must be cyclic at v = l1 and v = l2, where K_v is the
  /// kernel of the localisation map. This is the exact criterion.
  kQuotientImage,
  /// Read the Hermite form <(h11, h12), (0, h22)> and require
  /// v_p(h11) >= m21 and v_p(h22) >= m12 (a zero row counting as infinite
  /// valuation). Not equivalent to kQuotientImage: it rejects some cyclic
  /// subgroups.
  kHermiteCoordinates,
};

/// Kernel of W -> k_v^x/(k_v^x)^{p^n} at v | l1, i.e. {0} x p^{m12}Z.
Subgroup2 localization_kernel_l1(const PrimePowerCtx& ctx, const LocalProfile& prof);
/// Kernel of W -> k_v^x/(k_v^x)^{p^n} at v | l2, i.e. p^{m21}Z x {0}.
Subgroup2 localization_kernel_l2(const PrimePowerCtx& ctx, const LocalProfile& prof);

bool is_locally_cyclic(const Subgroup2& wc, const LocalProfile& prof,
                       LocalCyclicityRule rule = LocalCyclicityRule::kQuotientImage);

/// Whether F itself is locally cyclic, i.e. m12 = m21 = 0.
bool field_F_locally_cyclic(u64 p, unsigned n, u64 l1, u64 l2);

}  // namespace kummer
