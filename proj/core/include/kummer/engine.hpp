#pragma once

// Patching degrees, degrees of freedom and the assembly of the
// Tate-Shafarevich groups Sha^2(k, T^) and Sha^2_omega(k, T^) of the
// multinorm one torus T = T_{L/k}.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummer/abelian_group.hpp"
#include "kummer/invariants.hpp"
#include "kummer/localdata.hpp"

namespace kummer {

struct EngineOptions {
  LocalCyclicityRule rule = LocalCyclicityRule::kQuotientImage;
};

/// Delta_r^omega: largest d <= eps_0 with
///   W_{U>r}(d) c  n_{i in U_r} W_0(d) W_i(d)   (if U_{>r} nonempty)
///   W_{U_r}(d) c  n_{i in U<r} W_0(d) W_i(d)   (if U_{<r} nonempty),
/// and eps_0 when U_0 is all of I.
unsigned delta_omega(const InvariantTable& table, unsigned r);

/// Delta_r: largest d <= Delta_r^omega with W_0(d)W_{U>r}(d) (if U_{>r}
/// nonempty) and W_0(d)W_{U_r}(d) (if U_{<r} nonempty) locally cyclic.
unsigned delta(const InvariantTable& table, const LocalProfile& prof, unsigned r,
               LocalCyclicityRule rule = LocalCyclicityRule::kQuotientImage);

/// f_c^omega for a class c inside U_r: largest f <= Delta_r^omega such that
/// W_0(f) c W_c(f + L(c) - r). Absent when no f in range qualifies (including
/// the case f + L(c) - r > min eps_i over c).
std::optional<unsigned> f_omega(const InvariantTable& table, const IndexSet& c, unsigned r);

/// f_c: largest f <= f_c^omega with W_c(f + L(c) - r) locally cyclic.
std::optional<unsigned> f_degree(const InvariantTable& table, const LocalProfile& prof, const IndexSet& c,
                                 unsigned r, LocalCyclicityRule rule = LocalCyclicityRule::kQuotientImage);

struct PatchingDegrees {
  unsigned r = 0;
  unsigned delta_omega = 0;
  unsigned delta = 0;
};

struct ClassDegrees {
  IndexSet c;
  unsigned supp = 0;
  unsigned level = 0;
  std::size_t split_count = 0;  ///< n_{L(c)+1}(c)
  std::optional<unsigned> f_omega;
  std::optional<unsigned> f;
};

struct DegreeReport {
  LocalProfile profile;
  std::vector<PatchingDegrees> patching;  ///< one entry per r in R
  std::vector<ClassDegrees> classes;      ///< class_tree order, r ascending

  const PatchingDegrees& at(unsigned r) const;
  const ClassDegrees* find(const IndexSet& c) const;
};

DegreeReport degree_report(const InvariantTable& table, const LocalProfile& prof,
                           const EngineOptions& options = {});

/// A cyclic summand Z/p^exponent together with where it came from.
struct LabelledFactor {
  unsigned exponent = 0;
  std::string origin;  ///< "r=1" or "c={1,4}"
};

struct ShaGroups {
  AbelianPGroup sha_omega;
  AbelianPGroup sha;
  std::vector<LabelledFactor> omega_factors;
  std::vector<LabelledFactor> factors;
  std::vector<std::string> diagnostics;
};

/// Assembly over r in R\{0} and admissible sets c.
ShaGroups assemble_admissible(const InvariantTable& table, const DegreeReport& report);

/// Assembly as the double sum over r, l >= L(U_r) and l-classes c of U_r with
/// multiplicity n_{l+1}(c) - 1; l runs up to n, beyond which all classes are
/// singletons.
ShaGroups assemble_double_sum(const InvariantTable& table, const DegreeReport& report);

struct Computation {
  InvariantTable table;
  DegreeReport report;
  ShaGroups groups;
  std::vector<std::string> warnings;
};

/// Validates, builds invariants and degrees and assembles both groups.
/// With `cross_check` the double-sum form is evaluated too and any mismatch is
/// appended to the diagnostics.
Computation compute(const TowerSpec& spec, const EngineOptions& options = {}, bool cross_check = false);

AbelianPGroup sha_omega(const TowerSpec& spec, const EngineOptions& options = {});
AbelianPGroup sha(const TowerSpec& spec, const EngineOptions& options = {});

/// Vanishing criterion read off the degrees only: Sha_omega = 0 iff
/// Delta^omega_{r0} = r0 and f^omega_{U_0} = 0, Sha = 0 iff Delta_{r0} = r0 and
/// f_{U_0} = 0, where r0 is the smallest positive r with U_r nonempty
/// (clauses about r0 or U_0 are dropped when those do not exist).
std::pair<bool, bool> vanishing(const InvariantTable& table, const DegreeReport& report);
std::pair<bool, bool> vanishing(const TowerSpec& spec, const EngineOptions& options = {});

}  // namespace kummer
