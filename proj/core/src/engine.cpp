#include "kummer/engine.hpp"

#include <algorithm>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

bool contained_in_all_products(const InvariantTable& table, const Subgroup2& lhs, const Subgroup2& w0d,
                               const IndexSet& indices, unsigned d) {
  return std::all_of(indices.begin(), indices.end(), [&](int i) {
    return subgroup_contains(join(w0d, truncated(table, i, d)), lhs);
  });
}

unsigned min_eps(const InvariantTable& table, const IndexSet& c) {
  unsigned best = ~0U;
  for (int i : c) best = std::min(best, table.eps[static_cast<std::size_t>(i)]);
  return best;
}

bool u0_is_everything(const InvariantTable& table, unsigned r) {
  return r == 0 && static_cast<int>(table.u_of(0).size()) == table.m();
}

// Depth d = f + L(c) - r of the compositum M_c(d), if it is defined.
std::optional<unsigned> freedom_depth(unsigned f, unsigned lvl, unsigned r, unsigned max_depth) {
  if (f + lvl < r) return std::nullopt;
  const unsigned d = f + lvl - r;
  if (d > max_depth) return std::nullopt;
  return d;
}

}  // namespace

unsigned delta_omega(const InvariantTable& table, unsigned r) {
  const IndexSet& ur = table.u_of(r);
  if (u0_is_everything(table, r)) return table.eps0();
  const IndexSet greater = table.u_greater(r);
  const IndexSet less = table.u_less(r);
  for (unsigned d = table.eps0() + 1; d-- > 0;) {
    const Subgroup2 w0d = truncated(table, 0, d);
    if (!greater.empty() && !contained_in_all_products(table, composite(table, greater, d), w0d, ur, d)) continue;
    if (!less.empty() && !contained_in_all_products(table, composite(table, ur, d), w0d, less, d)) continue;
    return d;
  }
  return 0;  // unreachable: d = 0 always qualifies
}

unsigned delta(const InvariantTable& table, const LocalProfile& prof, unsigned r, LocalCyclicityRule rule) {
  const IndexSet& ur = table.u_of(r);
  if (u0_is_everything(table, r)) return table.eps0();
  const IndexSet greater = table.u_greater(r);
  const IndexSet less = table.u_less(r);
  for (unsigned d = delta_omega(table, r) + 1; d-- > 0;) {
    const Subgroup2 w0d = truncated(table, 0, d);
    if (!greater.empty() && !is_locally_cyclic(join(w0d, composite(table, greater, d)), prof, rule)) continue;
    if (!less.empty() && !is_locally_cyclic(join(w0d, composite(table, ur, d)), prof, rule)) continue;
    return d;
  }
  return 0;
}

std::optional<unsigned> f_omega(const InvariantTable& table, const IndexSet& c, unsigned r) {
  const unsigned lvl = level(table, c);
  const unsigned depth_limit = min_eps(table, c);
  for (unsigned f = delta_omega(table, r) + 1; f-- > 0;) {
    const auto d = freedom_depth(f, lvl, r, depth_limit);
    if (!d) continue;
    if (subgroup_contains(composite(table, c, *d), truncated(table, 0, f))) return f;
  }
  return std::nullopt;
}

std::optional<unsigned> f_degree(const InvariantTable& table, const LocalProfile& prof, const IndexSet& c,
                                 unsigned r, LocalCyclicityRule rule) {
  const auto upper = f_omega(table, c, r);
  if (!upper) return std::nullopt;
  const unsigned lvl = level(table, c);
  const unsigned depth_limit = min_eps(table, c);
  for (unsigned f = *upper + 1; f-- > 0;) {
    const auto d = freedom_depth(f, lvl, r, depth_limit);
    if (!d) continue;
    if (is_locally_cyclic(composite(table, c, *d), prof, rule)) return f;
  }
  return std::nullopt;
}

const PatchingDegrees& DegreeReport::at(unsigned r) const {
  for (const auto& pd : patching) {
    if (pd.r == r) return pd;
  }
  throw DomainError("no patching degree recorded for r = " + std::to_string(r));
}

const ClassDegrees* DegreeReport::find(const IndexSet& c) const {
  for (const auto& cd : classes) {
    if (cd.c == c) return &cd;
  }
  return nullptr;
}

DegreeReport degree_report(const InvariantTable& table, const LocalProfile& prof, const EngineOptions& options) {
  DegreeReport report;
  report.profile = prof;
  for (unsigned r : table.r_values) {
    report.patching.push_back(PatchingDegrees{r, delta_omega(table, r), delta(table, prof, r, options.rule)});
    for (auto& c : class_tree(table, r)) {
      ClassDegrees cd;
      cd.supp = r;
      cd.level = level(table, c);
      cd.split_count = class_count(table, c, cd.level + 1);
      cd.f_omega = f_omega(table, c, r);
      cd.f = f_degree(table, prof, c, r, options.rule);
      cd.c = std::move(c);
      report.classes.push_back(std::move(cd));
    }
  }
  return report;
}

namespace {

class Accumulator {
 public:
  explicit Accumulator(u64 p) : p_(p) {}

  void add(std::optional<unsigned> degree, unsigned supp, std::size_t multiplicity, const std::string& origin,
           const char* symbol, bool omega, std::vector<std::string>& diagnostics) {
    if (multiplicity == 0) return;
    if (!degree) {
      diagnostics.push_back(std::string(symbol) + " does not exist for " + origin + " but the multiplicity is " +
                            std::to_string(multiplicity) + "; no factor contributed");
      return;
    }
    if (*degree < supp) {
      diagnostics.push_back(std::string(symbol) + " = " + std::to_string(*degree) + " < r = " +
                            std::to_string(supp) + " for " + origin + "; no factor contributed");
      return;
    }
    const unsigned exponent = *degree - supp;
    if (exponent == 0) return;
    auto& exps = omega ? omega_exponents_ : exponents_;
    auto& labels = omega ? groups_.omega_factors : groups_.factors;
    for (std::size_t k = 0; k < multiplicity; ++k) {
      exps.push_back(exponent);
      labels.push_back(LabelledFactor{exponent, origin});
    }
  }

  ShaGroups finish(std::vector<std::string> diagnostics) {
    groups_.sha_omega = AbelianPGroup::from_exponents(p_, omega_exponents_);
    groups_.sha = AbelianPGroup::from_exponents(p_, exponents_);
    auto by_exponent = [](const LabelledFactor& a, const LabelledFactor& b) { return a.exponent < b.exponent; };
    std::stable_sort(groups_.omega_factors.begin(), groups_.omega_factors.end(), by_exponent);
    std::stable_sort(groups_.factors.begin(), groups_.factors.end(), by_exponent);
    groups_.diagnostics = std::move(diagnostics);
    return std::move(groups_);
  }

 private:
  u64 p_;
  std::vector<unsigned> omega_exponents_;
  std::vector<unsigned> exponents_;
  ShaGroups groups_;
};

void add_patching_terms(const InvariantTable& table, const DegreeReport& report, Accumulator& acc,
                        std::vector<std::string>& diagnostics) {
  for (unsigned r : table.r_values) {
    if (r == 0) continue;
    const auto& pd = report.at(r);
    const std::string origin = "r=" + std::to_string(r);
    acc.add(pd.delta_omega, r, 1, origin, "Δ^ω", true, diagnostics);
    acc.add(pd.delta, r, 1, origin, "Δ", false, diagnostics);
  }
}

void add_class_term(const ClassDegrees& cd, std::size_t multiplicity, Accumulator& acc,
                    std::vector<std::string>& diagnostics) {
  const std::string origin = "c=" + format_index_set(cd.c);
  acc.add(cd.f_omega, cd.supp, multiplicity, origin, "f^ω", true, diagnostics);
  acc.add(cd.f, cd.supp, multiplicity, origin, "f", false, diagnostics);
}

}  // namespace

ShaGroups assemble_admissible(const InvariantTable& table, const DegreeReport& report) {
  Accumulator acc(table.ctx.p());
  std::vector<std::string> diagnostics;
  add_patching_terms(table, report, acc, diagnostics);
  for (const auto& adm : admissible_sets(table)) {
    const ClassDegrees* cd = report.find(adm.c);
    if (cd == nullptr) throw Error("admissible set " + format_index_set(adm.c) + " missing from the report");
    add_class_term(*cd, cd->split_count - 1, acc, diagnostics);
  }
  return acc.finish(std::move(diagnostics));
}

ShaGroups assemble_double_sum(const InvariantTable& table, const DegreeReport& report) {
  Accumulator acc(table.ctx.p());
  std::vector<std::string> diagnostics;
  add_patching_terms(table, report, acc, diagnostics);
  for (unsigned r : table.r_values) {
    const IndexSet& ur = table.u_of(r);
    for (unsigned l = level(table, ur); l <= table.ctx.n(); ++l) {
      for (const auto& c : equiv_classes(table, ur, l)) {
        const std::size_t next = class_count(table, c, l + 1);
        if (next <= 1) continue;
        const ClassDegrees* cd = report.find(c);
        if (cd == nullptr) throw Error("class " + format_index_set(c) + " missing from the report");
        add_class_term(*cd, next - 1, acc, diagnostics);
      }
    }
  }
  return acc.finish(std::move(diagnostics));
}

Computation compute(const TowerSpec& spec, const EngineOptions& options, bool cross_check) {
  std::vector<std::string> warnings = validate(spec);
  InvariantTable table = build_table(spec);
  const LocalProfile prof = local_profile(spec.ctx.p(), spec.ctx.n(), spec.l1, spec.l2);
  DegreeReport report = degree_report(table, prof, options);
  ShaGroups groups = assemble_admissible(table, report);
  if (cross_check) {
    const ShaGroups other = assemble_double_sum(table, report);
    if (!(other.sha_omega == groups.sha_omega) || !(other.sha == groups.sha)) {
      groups.diagnostics.push_back("double-sum assembly disagrees: Sha_omega " + other.sha_omega.to_string() +
                                   ", Sha " + other.sha.to_string());
    }
  }
  return Computation{std::move(table), std::move(report), std::move(groups), std::move(warnings)};
}

AbelianPGroup sha_omega(const TowerSpec& spec, const EngineOptions& options) {
  return compute(spec, options).groups.sha_omega;
}

AbelianPGroup sha(const TowerSpec& spec, const EngineOptions& options) {
  return compute(spec, options).groups.sha;
}

std::pair<bool, bool> vanishing(const InvariantTable& table, const DegreeReport& report) {
  bool omega_zero = true;
  bool plain_zero = true;
  const auto r0 = std::find_if(table.r_values.begin(), table.r_values.end(), [](unsigned r) { return r > 0; });
  if (r0 != table.r_values.end()) {
    const auto& pd = report.at(*r0);
    omega_zero = pd.delta_omega == *r0;
    plain_zero = pd.delta <= *r0;
  }
  if (table.u.count(0) != 0) {
    const ClassDegrees* u0 = report.find(table.u_of(0));
    if (u0 == nullptr) throw Error("U_0 missing from the report");
    omega_zero = omega_zero && u0->f_omega.value_or(0) == 0;
    plain_zero = plain_zero && u0->f.value_or(0) == 0;
  }
  return {omega_zero, plain_zero};
}

std::pair<bool, bool> vanishing(const TowerSpec& spec, const EngineOptions& options) {
  const InvariantTable table = build_table(spec);
  const LocalProfile prof = local_profile(spec.ctx.p(), spec.ctx.n(), spec.l1, spec.l2);
  return vanishing(table, degree_report(table, prof, options));
}

}  // namespace kummer
