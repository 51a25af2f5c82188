#include "kummer/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kummer/errors.hpp"
#include "kummer/localdata.hpp"

namespace kummer {

TowerSpec make_spec(u64 p, unsigned n, u64 l1, u64 l2,
                    const std::vector<std::pair<i64, i64>>& pairs) {
  TowerSpec spec{PrimePowerCtx::make(p, n), l1, l2, {}};
  spec.pairs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) spec.pairs.push_back(Vec2Mod::make(a, b, spec.ctx));
  return spec;
}

std::vector<std::string> validate(const TowerSpec& spec) {
  (void)local_profile(spec.ctx.p(), spec.ctx.n(), spec.l1, spec.l2);
  if (spec.pairs.size() < 2) {
    throw InvalidInstance("too-few-factors", "at least two factors K_0, K_1 are required (m >= 1)");
  }
  std::vector<Subgroup2> w;
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    const auto& v = spec.pairs[i];
    if (!(v.ctx == spec.ctx)) throw ContextMismatch();
    if (v.is_zero()) {
      throw InvalidInstance("zero-pair", "(a_" + std::to_string(i) + ", b_" + std::to_string(i) +
                                             ") = (0,0): K_" + std::to_string(i) + " = k is not allowed");
    }
    w.push_back(Subgroup2::cyclic(v));
  }
  Subgroup2 common = w.front();
  for (const auto& wi : w) common = intersect(common, wi);
  if (!common.is_trivial()) {
    throw InvalidInstance("intersection", "∩K_i = k fails: the W_i intersect in " + common.to_string());
  }
  const unsigned eps0 = w.front().log_order();
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].log_order() < eps0) {
      throw InvalidInstance("eps0-minimal", "ε₀ not minimal: move index " + std::to_string(i) +
                                                " to position 0 (eps_" + std::to_string(i) + " = " +
                                                std::to_string(w[i].log_order()) + " < eps_0 = " +
                                                std::to_string(eps0) + ")");
    }
  }
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) {
        warnings.push_back("K_" + std::to_string(i) + " and K_" + std::to_string(j) +
                           " are the same field (repeated factor)");
      }
    }
  }
  return warnings;
}

const IndexSet& InvariantTable::u_of(unsigned r) const {
  auto it = u.find(r);
  if (it == u.end()) throw DomainError("U_" + std::to_string(r) + " is empty");
  return it->second;
}

IndexSet InvariantTable::u_greater(unsigned r) const {
  IndexSet out;
  for (int i = 1; i <= m(); ++i) {
    if (e0(i) > r) out.push_back(i);
  }
  return out;
}

IndexSet InvariantTable::u_less(unsigned r) const {
  IndexSet out;
  for (int i = 1; i <= m(); ++i) {
    if (e0(i) < r) out.push_back(i);
  }
  return out;
}

InvariantTable build_table(const TowerSpec& spec) {
  (void)validate(spec);
  InvariantTable t{spec.ctx, {}, {}, {}, {}, {}};
  for (const auto& v : spec.pairs) {
    t.w.push_back(Subgroup2::cyclic(v));
    t.eps.push_back(t.w.back().log_order());
  }
  const std::size_t size = t.w.size();
  t.e.assign(size, std::vector<unsigned>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    t.e[i][i] = t.eps[i];
    for (std::size_t j = i + 1; j < size; ++j) {
      t.e[i][j] = t.e[j][i] = intersect(t.w[i], t.w[j]).log_order();
    }
  }
  for (int i = 1; i <= t.m(); ++i) t.u[t.e0(i)].push_back(i);
  for (const auto& [r, members] : t.u) t.r_values.push_back(r);
  return t;
}

std::vector<IndexSet> equiv_classes(const InvariantTable& table, const IndexSet& s, unsigned l) {
  std::vector<std::size_t> parent(s.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const auto i = static_cast<std::size_t>(s[a]);
      const auto j = static_cast<std::size_t>(s[b]);
      if (table.e[i][j] >= l) parent[find(a)] = find(b);
    }
  }
  std::map<std::size_t, IndexSet> groups;
  for (std::size_t a = 0; a < s.size(); ++a) groups[find(a)].push_back(s[a]);
  std::vector<IndexSet> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& x, const IndexSet& y) { return x.front() < y.front(); });
  return out;
}

std::size_t class_count(const InvariantTable& table, const IndexSet& c, unsigned l) {
  return equiv_classes(table, c, l).size();
}

unsigned level(const InvariantTable& table, const IndexSet& c) {
  if (c.empty()) throw DomainError("level: empty index set");
  unsigned best = ~0U;
  for (int i : c) {
    for (int j : c) best = std::min(best, table.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return best;
}

namespace {

void collect_tree(const InvariantTable& table, const IndexSet& c, std::vector<IndexSet>& out) {
  out.push_back(c);
  if (c.size() < 2) return;
  for (const auto& child : equiv_classes(table, c, level(table, c) + 1)) {
    collect_tree(table, child, out);
  }
}

}  // namespace

std::vector<IndexSet> class_tree(const InvariantTable& table, unsigned r) {
  std::vector<IndexSet> out;
  collect_tree(table, table.u_of(r), out);
  return out;
}

std::vector<AdmissibleSet> admissible_sets(const InvariantTable& table) {
  std::vector<AdmissibleSet> out;
  for (unsigned r : table.r_values) {
    for (auto& c : class_tree(table, r)) {
      if (c.size() > 1) out.push_back(AdmissibleSet{std::move(c), r});
    }
  }
  return out;
}

Subgroup2 truncated(const InvariantTable& table, int i, unsigned d) {
  return truncation(table.w[static_cast<std::size_t>(i)], d);
}

Subgroup2 composite(const InvariantTable& table, const IndexSet& c, unsigned d) {
  Subgroup2 acc = Subgroup2::trivial(table.ctx);
  for (int i : c) acc = join(acc, truncated(table, i, d));
  return acc;
}

std::string format_index_set(const IndexSet& c) {
  std::string out = "{";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(c[k]);
  }
  return out + "}";
}

}  // namespace kummer
