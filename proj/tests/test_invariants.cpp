#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute_force.hpp"
#include "kummer/errors.hpp"
#include "kummer/generator.hpp"
#include "kummer/invariants.hpp"

namespace kummer {
namespace {

using Matrix = std::vector<std::vector<unsigned>>;

TowerSpec example_a() { return make_spec(3, 3, 5, 19, {{1, 0}, {1, 1}, {2, 3}, {3, 5}, {5, 11}}); }
TowerSpec example_b() { return make_spec(3, 3, 5, 19, {{1, 0}, {1, 1}, {2, 3}, {4, 9}, {10, 19}}); }

std::string rejection_tag(const TowerSpec& spec, std::string* message = nullptr) {
  try {
    validate(spec);
  } catch (const InvalidInstance& e) {
    if (message) *message = e.what();
    return e.hypothesis();
  }
  return "valid";
}

std::vector<TowerSpec> random_specs(std::size_t count, u64 seed) {
  GeneratorConfig cfg;
  cfg.primes_p = {2, 3, 5};
  cfg.exponents_n = {1, 2, 3};
  cfg.factor_counts = {1, 2, 3, 4, 5};
  InstanceGenerator gen(cfg, seed);
  std::vector<TowerSpec> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

TEST(Invariants, FirstExampleTable) {
  const InvariantTable t = build_table(example_a());
  // <(1,0)> and <(2,3)> share (18,0); <(1,1)> and <(5,11)> share (9,9).
  const Matrix e{{3, 0, 1, 0, 0}, {0, 3, 0, 0, 1}, {1, 0, 3, 0, 0}, {0, 0, 0, 3, 0}, {0, 1, 0, 0, 3}};
  EXPECT_EQ(t.e, e);
  EXPECT_EQ(t.eps, (std::vector<unsigned>{3, 3, 3, 3, 3}));
  EXPECT_EQ(t.r_values, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(t.u_of(0), (IndexSet{1, 3, 4}));
  EXPECT_EQ(t.u_of(1), (IndexSet{2}));
  EXPECT_EQ(level(t, t.u_of(0)), 0U);
  const auto adm = admissible_sets(t);
  ASSERT_EQ(adm.size(), 2U);
  EXPECT_EQ(adm[0], (AdmissibleSet{{1, 3, 4}, 0}));
  EXPECT_EQ(adm[1], (AdmissibleSet{{1, 4}, 0}));
}

TEST(Invariants, SecondExampleTable) {
  const InvariantTable t = build_table(example_b());
  const Matrix e{{3, 0, 1, 2, 0}, {0, 3, 0, 0, 2}, {1, 0, 3, 1, 0}, {2, 0, 1, 3, 0}, {0, 2, 0, 0, 3}};
  EXPECT_EQ(t.e, e);
  EXPECT_EQ(t.r_values, (std::vector<unsigned>{0, 1, 2}));
  EXPECT_EQ(t.u_of(0), (IndexSet{1, 4}));
  EXPECT_EQ(t.u_of(1), (IndexSet{2}));
  EXPECT_EQ(t.u_of(2), (IndexSet{3}));
  EXPECT_EQ(level(t, {1, 4}), 2U);
  EXPECT_EQ(level(t, {3}), 3U);
  EXPECT_EQ(equiv_classes(t, {1, 4}, 1), (std::vector<IndexSet>{{1, 4}}));
  EXPECT_EQ(equiv_classes(t, {1, 4}, 3), (std::vector<IndexSet>{{1}, {4}}));
  EXPECT_EQ(equiv_classes(t, {1, 2, 3, 4}, 0), (std::vector<IndexSet>{{1, 2, 3, 4}}));
  EXPECT_EQ(equiv_classes(t, {1, 2, 3, 4}, 2), (std::vector<IndexSet>{{1, 4}, {2}, {3}}));
  EXPECT_EQ(class_count(t, {1, 4}, 3), 2U);
  const auto adm = admissible_sets(t);
  ASSERT_EQ(adm.size(), 1U);
  EXPECT_EQ(adm[0], (AdmissibleSet{{1, 4}, 0}));
  EXPECT_EQ(class_tree(t, 0), (std::vector<IndexSet>{{1, 4}, {1}, {4}}));
  EXPECT_EQ(t.e_index(3), 1U);
}

TEST(Invariants, TwoAxesAreDisjoint) {
  for (u64 p : {2, 3, 5}) {
    for (unsigned n = 1; n <= 3; ++n) {
      const InvariantTable t = build_table(make_spec(p, n, 7 == p ? 11 : 7, 13, {{1, 0}, {0, 1}}));
      EXPECT_EQ(t.e[0][1], 0U);
      EXPECT_EQ(t.u_of(0), (IndexSet{1}));
      EXPECT_TRUE(admissible_sets(t).empty());
    }
  }
}

TEST(Invariants, ValidationNamesTheHypothesis) {
  std::string msg;
  EXPECT_EQ(rejection_tag(make_spec(3, 3, 5, 19, {{1, 0}, {3, 0}}), &msg), "intersection");
  EXPECT_NE(msg.find("∩K_i = k fails"), std::string::npos);
  EXPECT_NE(msg.find(Subgroup2::cyclic(Vec2Mod::make(3, 0, PrimePowerCtx::make(3, 3))).to_string()),
            std::string::npos);
  EXPECT_EQ(rejection_tag(make_spec(3, 3, 5, 19, {{1, 1}, {3, 0}}), &msg), "eps0-minimal");
  EXPECT_NE(msg.find("ε₀ not minimal: move index 1 to position 0"), std::string::npos);
  EXPECT_EQ(rejection_tag(make_spec(3, 3, 5, 19, {{1, 0}, {27, 54}}), &msg), "zero-pair");
  EXPECT_NE(msg.find("(0,0)"), std::string::npos);
  EXPECT_EQ(rejection_tag(make_spec(3, 3, 5, 19, {{1, 0}})), "too-few-factors");
  EXPECT_EQ(rejection_tag(make_spec(3, 3, 5, 5, {{1, 0}, {0, 1}})), "l-distinct");
  EXPECT_EQ(rejection_tag(example_a()), "valid");
  EXPECT_EQ(rejection_tag(make_spec(3, 3, 5, 19, {{3, 0}, {1, 1}})), "valid");
}

TEST(Invariants, RepeatedFactorWarns) {
  const auto warnings = validate(make_spec(3, 1, 7, 13, {{1, 0}, {0, 1}, {0, 2}}));
  ASSERT_EQ(warnings.size(), 1U);
  EXPECT_NE(warnings[0].find("K_1 and K_2"), std::string::npos);
  const InvariantTable t = build_table(make_spec(3, 1, 7, 13, {{1, 0}, {0, 1}, {0, 2}}));
  EXPECT_EQ(t.e[1][2], 1U);
}

TEST(Invariants, TableMatchesEnumerationOnRandomInstances) {
  for (const TowerSpec& spec : random_specs(150, 21)) {
    const InvariantTable t = build_table(spec);
    const i64 modulus = static_cast<i64>(spec.ctx.modulus());
    std::vector<bf::ElemSet> cyc;
    for (const auto& v : spec.pairs) cyc.push_back(bf::span({{v.a, v.b}}, modulus));
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      EXPECT_EQ(static_cast<int>(t.eps[i]), bf::log_exact(cyc[i].size(), spec.ctx.p()));
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        std::size_t common = 0;
        for (const auto& x : cyc[i]) common += cyc[j].count(x);
        EXPECT_EQ(static_cast<int>(t.e[i][j]), bf::log_exact(common, spec.ctx.p()));
      }
    }
  }
}

TEST(Invariants, StructuralPropertiesOnRandomInstances) {
  for (const TowerSpec& spec : random_specs(300, 22)) {
    const InvariantTable t = build_table(spec);
    const int m = t.m();
    IndexSet all(static_cast<std::size_t>(m));
    std::iota(all.begin(), all.end(), 1);
    for (int i = 0; i <= m; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      EXPECT_EQ(t.e[ui][ui], t.eps[ui]);
      EXPECT_GE(t.eps[ui], t.eps0());
      for (int j = 0; j <= m; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        EXPECT_EQ(t.e[ui][uj], t.e[uj][ui]);
        EXPECT_LE(t.e[ui][uj], std::min(t.eps[ui], t.eps[uj]));
        for (int k = 0; k <= m; ++k)
          EXPECT_GE(t.e[ui][static_cast<std::size_t>(k)], std::min(t.e[ui][uj], t.e[uj][static_cast<std::size_t>(k)]));
      }
    }
    IndexSet covered;
    for (unsigned r : t.r_values) {
      for (int i : t.u_of(r)) {
        EXPECT_EQ(t.e0(i), r);
        EXPECT_EQ(t.eps0() - t.e_index(i), r);
      }
      covered.insert(covered.end(), t.u_of(r).begin(), t.u_of(r).end());
    }
    std::sort(covered.begin(), covered.end());
    EXPECT_EQ(covered, all);

    for (unsigned l = 0; l <= spec.ctx.n(); ++l) {
      const auto coarse = equiv_classes(t, all, l);
      const auto fine = equiv_classes(t, all, l + 1);
      EXPECT_GE(fine.size(), coarse.size());
      for (const auto& c : fine) {
        const bool inside = std::any_of(coarse.begin(), coarse.end(), [&](const IndexSet& big) {
          return std::includes(big.begin(), big.end(), c.begin(), c.end());
        });
        EXPECT_TRUE(inside);
      }
    }
    for (const auto& adm : admissible_sets(t)) {
      EXPECT_GT(adm.c.size(), 1U);
      EXPECT_GE(class_count(t, adm.c, level(t, adm.c) + 1), 2U);
      EXPECT_GE(level(t, adm.c), adm.supp);
    }
  }
}

TEST(Invariants, PermutationOfFactorsPermutesTheTable) {
  std::mt19937_64 rng(8);
  for (const TowerSpec& spec : random_specs(100, 23)) {
    const InvariantTable t = build_table(spec);
    std::vector<int> sigma(static_cast<std::size_t>(t.m()));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    sigma.insert(sigma.begin(), 0);  // sigma[new] = old
    TowerSpec permuted = spec;
    for (std::size_t k = 0; k < sigma.size(); ++k) permuted.pairs[k] = spec.pairs[static_cast<std::size_t>(sigma[k])];
    const InvariantTable u = build_table(permuted);
    for (std::size_t a = 0; a < sigma.size(); ++a)
      for (std::size_t b = 0; b < sigma.size(); ++b)
        EXPECT_EQ(u.e[a][b], t.e[static_cast<std::size_t>(sigma[a])][static_cast<std::size_t>(sigma[b])]);
    EXPECT_EQ(u.r_values, t.r_values);
    for (unsigned r : t.r_values) EXPECT_EQ(u.u_of(r).size(), t.u_of(r).size());
  }
}

TEST(Invariants, CompositeAndTruncated) {
  const InvariantTable t = build_table(example_b());
  const auto ctx = t.ctx;
  EXPECT_EQ(truncated(t, 0, 1), Subgroup2::cyclic(Vec2Mod::make(9, 0, ctx)));
  EXPECT_EQ(truncated(t, 3, 2), Subgroup2::cyclic(Vec2Mod::make(12, 0, ctx)));
  // (1,1) and (10,19) agree up to order 9.
  EXPECT_EQ(composite(t, {1, 4}, 2), Subgroup2::cyclic(Vec2Mod::make(3, 3, ctx)));
  EXPECT_EQ(composite(t, {1, 4}, 3), join(t.w[1], t.w[4]));
  EXPECT_EQ(composite(t, {1, 4}, 3).log_order(), 4U);
  EXPECT_TRUE(composite(t, {2, 3}, 0).is_trivial());
  EXPECT_EQ(format_index_set({1, 4}), "{1,4}");
}

}  // namespace
}  // namespace kummer
