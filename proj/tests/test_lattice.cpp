#include <gtest/gtest.h>

#include <map>
#include <random>

#include "brute_force.hpp"
#include "kummer/errors.hpp"
#include "kummer/lattice.hpp"

namespace kummer {
namespace {

using bf::ElemSet;

Vec2Mod v(i64 a, i64 b, const PrimePowerCtx& ctx) { return Vec2Mod::make(a, b, ctx); }

Subgroup2 gen(std::initializer_list<std::pair<i64, i64>> gs, const PrimePowerCtx& ctx) {
  std::vector<Vec2Mod> vs;
  for (auto [a, b] : gs) vs.push_back(v(a, b, ctx));
  return subgroup_from_generators(vs, ctx);
}

// Every subgroup of (Z/N)^2 in canonical form, keyed by its element set.
std::map<ElemSet, Subgroup2> canonical_subgroups(const PrimePowerCtx& ctx) {
  std::map<ElemSet, Subgroup2> out;
  const i64 n = static_cast<i64>(ctx.modulus());
  for (i64 a = 0; a < n; ++a)
    for (i64 b = 0; b < n; ++b)
      for (i64 c = 0; c < n; ++c)
        for (i64 d = 0; d < n; ++d) {
          const Subgroup2 s = gen({{a, b}, {c, d}}, ctx);
          out.emplace(bf::elements(s), s);
        }
  return out;
}

TEST(PrimePowerCtx, Validation) {
  EXPECT_THROW(PrimePowerCtx::make(4, 1), DomainError);
  EXPECT_THROW(PrimePowerCtx::make(3, 0), DomainError);
  EXPECT_THROW(PrimePowerCtx::make(2, 32), DomainError);
  EXPECT_EQ(PrimePowerCtx::make(2, 31).modulus(), 2147483648ULL);
  const auto ctx = PrimePowerCtx::make(3, 3);
  EXPECT_EQ(ctx.power(2), 9U);
  EXPECT_EQ(ctx.log(27), 3U);
  EXPECT_THROW(ctx.log(6), DomainError);
}

TEST(Vec2Mod, ReducesComponents) {
  const auto ctx = PrimePowerCtx::make(3, 3);
  const auto x = v(-1, 55, ctx);
  EXPECT_EQ(x.a, 26);
  EXPECT_EQ(x.b, 1);
}

TEST(Subgroup2, GeneratorExamples) {
  const auto ctx = PrimePowerCtx::make(3, 3);
  const Subgroup2 empty = subgroup_from_generators({}, ctx);
  EXPECT_TRUE(empty.is_trivial());
  EXPECT_EQ(empty.h11(), 27);
  EXPECT_EQ(empty.h22(), 27);
  EXPECT_EQ(gen({{1, 1}, {2, 3}}, ctx), Subgroup2::full(ctx));
  const Subgroup2 c = Subgroup2::cyclic(v(4, 9, ctx));
  EXPECT_EQ(c.order(), 27U);
  EXPECT_TRUE(c.is_cyclic());
  EXPECT_EQ(bf::elements(c), bf::span({{4, 9}}, 27));
  EXPECT_EQ(Subgroup2::full(ctx).order(), 729U);
  EXPECT_FALSE(Subgroup2::full(ctx).is_cyclic());
  EXPECT_EQ(empty.order(), 1U);
  EXPECT_TRUE(empty.is_cyclic());
}

TEST(Subgroup2, MixedContextsRejected) {
  const auto a = PrimePowerCtx::make(3, 3);
  const auto b = PrimePowerCtx::make(3, 2);
  const std::vector<Vec2Mod> gens{v(1, 0, a), v(0, 1, b)};
  EXPECT_THROW(subgroup_from_generators(gens, a), ContextMismatch);
  EXPECT_THROW(join(Subgroup2::full(a), Subgroup2::full(b)), ContextMismatch);
  EXPECT_THROW(intersect(Subgroup2::full(a), Subgroup2::full(b)), ContextMismatch);
}

TEST(Subgroup2, JoinIntersectExamples) {
  const auto ctx = PrimePowerCtx::make(3, 3);
  const Subgroup2 a = Subgroup2::cyclic(v(1, 1, ctx));
  EXPECT_EQ(join(Subgroup2::trivial(ctx), a), a);
  EXPECT_EQ(join(a, Subgroup2::cyclic(v(2, 3, ctx))), Subgroup2::full(ctx));
  EXPECT_EQ(join(Subgroup2::cyclic(v(9, 0, ctx)), Subgroup2::cyclic(v(0, 9, ctx))), gen({{9, 0}, {0, 9}}, ctx));
  EXPECT_TRUE(intersect(Subgroup2::cyclic(v(1, 0, ctx)), a).is_trivial());
  // 3 * (4,9) = (12, 0), so the intersection with <(1,0)> has order 9.
  const Subgroup2 x = intersect(Subgroup2::cyclic(v(1, 0, ctx)), Subgroup2::cyclic(v(4, 9, ctx)));
  EXPECT_EQ(x, Subgroup2::cyclic(v(3, 0, ctx)));
  EXPECT_EQ(x.order(), 9U);
  const Subgroup2 y = intersect(a, Subgroup2::cyclic(v(10, 19, ctx)));
  EXPECT_EQ(y, Subgroup2::cyclic(v(3, 3, ctx)));
  EXPECT_EQ(y.order(), 9U);
}

TEST(Subgroup2, ContainmentExamples) {
  const auto ctx = PrimePowerCtx::make(3, 3);
  EXPECT_TRUE(contains(Subgroup2::cyclic(v(4, 9, ctx)), v(9, 0, ctx)));
  EXPECT_FALSE(contains(Subgroup2::trivial(ctx), v(1, 0, ctx)));
  EXPECT_TRUE(subgroup_contains(Subgroup2::full(ctx), Subgroup2::cyclic(v(5, 11, ctx))));
}

TEST(Subgroup2, ScaleAndTruncationExamples) {
  const auto ctx = PrimePowerCtx::make(3, 3);
  const Subgroup2 a = Subgroup2::cyclic(v(5, 11, ctx));
  EXPECT_EQ(scale(Subgroup2::full(ctx), 9), gen({{9, 0}, {0, 9}}, ctx));
  EXPECT_EQ(scale(a, 1), a);
  EXPECT_TRUE(scale(a, 27).is_trivial());
  EXPECT_EQ(truncation(Subgroup2::cyclic(v(1, 0, ctx)), 1), Subgroup2::cyclic(v(9, 0, ctx)));
  EXPECT_EQ(truncation(Subgroup2::cyclic(v(4, 9, ctx)), 2), Subgroup2::cyclic(v(12, 0, ctx)));
  EXPECT_TRUE(truncation(a, 0).is_trivial());
  EXPECT_THROW(truncation(a, 4), DomainError);
  EXPECT_THROW(truncation(Subgroup2::full(ctx), 1), DomainError);
}

class ExhaustiveLattice : public ::testing::TestWithParam<std::pair<u64, unsigned>> {};

TEST_P(ExhaustiveLattice, CanonicalFormMatchesEnumeration) {
  const auto [p, n] = GetParam();
  const auto ctx = PrimePowerCtx::make(p, n);
  const i64 modulus = static_cast<i64>(ctx.modulus());
  const auto subgroups = bf::all_subgroups(modulus);
  const auto canon = canonical_subgroups(ctx);
  ASSERT_EQ(canon.size(), subgroups.size());
  // Uniqueness: every generating pair of the same element set lands on the same form.
  for (i64 a = 0; a < modulus; ++a)
    for (i64 b = 0; b < modulus; ++b)
      for (i64 c = 0; c < modulus; ++c)
        for (i64 d = 0; d < modulus; ++d) {
          const Subgroup2 s = gen({{a, b}, {c, d}}, ctx);
          ASSERT_EQ(s, canon.at(bf::span({{a, b}, {c, d}}, modulus)));
        }
  for (const auto& [elems, s] : canon) {
    EXPECT_EQ(s.order(), elems.size());
    EXPECT_EQ(static_cast<int>(s.log_order()), bf::log_exact(elems.size(), p));
    bool cyclic = false;
    for (const auto& x : elems) cyclic = cyclic || bf::span({x}, modulus) == elems;
    EXPECT_EQ(s.is_cyclic(), cyclic) << s.to_string();
    EXPECT_GE(s.h11(), 1);
    EXPECT_LE(s.h11(), modulus);
    EXPECT_LE(s.h22(), modulus);
    EXPECT_NE(bf::log_exact(static_cast<u64>(s.h11()), p), -1);
    EXPECT_NE(bf::log_exact(static_cast<u64>(s.h22()), p), -1);
    EXPECT_GE(s.h12(), 0);
    EXPECT_LT(s.h12(), s.h22());
  }
}

TEST_P(ExhaustiveLattice, JoinIntersectProductFormulaAndLaws) {
  const auto [p, n] = GetParam();
  const auto ctx = PrimePowerCtx::make(p, n);
  const i64 modulus = static_cast<i64>(ctx.modulus());
  const auto canon = canonical_subgroups(ctx);
  for (const auto& [ea, a] : canon) {
    for (const auto& [eb, b] : canon) {
      std::vector<bf::Elem> both(ea.begin(), ea.end());
      both.insert(both.end(), eb.begin(), eb.end());
      const ElemSet joined = bf::span(both, modulus);
      ElemSet common;
      for (const auto& x : ea)
        if (eb.count(x)) common.insert(x);
      const Subgroup2 j = join(a, b);
      const Subgroup2 i = intersect(a, b);
      ASSERT_EQ(bf::elements(j), joined);
      ASSERT_EQ(bf::elements(i), common);
      EXPECT_EQ(a.order() * b.order(), j.order() * i.order());
      EXPECT_EQ(j, join(b, a));
      EXPECT_EQ(i, intersect(b, a));
      EXPECT_TRUE(subgroup_contains(j, a));
      EXPECT_TRUE(subgroup_contains(a, i));
      EXPECT_EQ(subgroup_contains(a, b), std::includes(ea.begin(), ea.end(), eb.begin(), eb.end()));
    }
    EXPECT_EQ(join(a, a), a);
    EXPECT_EQ(intersect(a, a), a);
  }
}

TEST_P(ExhaustiveLattice, Associativity) {
  const auto [p, n] = GetParam();
  const auto ctx = PrimePowerCtx::make(p, n);
  std::vector<Subgroup2> all;
  for (const auto& [e, s] : canonical_subgroups(ctx)) all.push_back(s);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        EXPECT_EQ(join(join(a, b), c), join(a, join(b, c)));
        EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
      }
}

TEST_P(ExhaustiveLattice, ScaleKernelFormulaAndAnnihilator) {
  const auto [p, n] = GetParam();
  const auto ctx = PrimePowerCtx::make(p, n);
  const i64 modulus = static_cast<i64>(ctx.modulus());
  for (const auto& [elems, a] : canonical_subgroups(ctx)) {
    for (unsigned k = 0; k <= n; ++k) {
      const i64 f = static_cast<i64>(ctx.power(k));
      ElemSet image;
      std::size_t killed = 0;
      for (const auto& [x, y] : elems) {
        image.insert({x * f % modulus, y * f % modulus});
        if (x * f % modulus == 0 && y * f % modulus == 0) ++killed;
      }
      const Subgroup2 s = scale(a, static_cast<u64>(f));
      EXPECT_EQ(bf::elements(s), image);
      EXPECT_EQ(s.order() * killed, a.order());
    }
    ElemSet ann;
    for (i64 x = 0; x < modulus; ++x)
      for (i64 y = 0; y < modulus; ++y) {
        bool orthogonal = true;
        for (const auto& [u, w] : elems) orthogonal = orthogonal && (x * u + y * w) % modulus == 0;
        if (orthogonal) ann.insert({x, y});
      }
    EXPECT_EQ(bf::elements(annihilator(a)), ann);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallModuli, ExhaustiveLattice,
                         ::testing::Values(std::pair<u64, unsigned>{2, 1}, std::pair<u64, unsigned>{2, 2},
                                           std::pair<u64, unsigned>{3, 1}, std::pair<u64, unsigned>{2, 3}),
                         [](const auto& info) {
                           return "p" + std::to_string(info.param.first) + "n" + std::to_string(info.param.second);
                         });

TEST(Subgroup2, SubgroupCountOfZ4Squared) {
  // 1 + 3 + 7 + 3 + 1 by order.
  EXPECT_EQ(bf::all_subgroups(4).size(), 15U);
}

TEST(Subgroup2, TruncationChainsOnRandomCyclics) {
  std::mt19937_64 rng(5);
  const auto ctx = PrimePowerCtx::make(5, 3);
  std::uniform_int_distribution<i64> coord(0, 124);
  for (int t = 0; t < 200; ++t) {
    const Subgroup2 w = Subgroup2::cyclic(v(coord(rng), coord(rng), ctx));
    const unsigned eps = w.log_order();
    for (unsigned d = 0; d <= eps; ++d) {
      const Subgroup2 wd = truncation(w, d);
      EXPECT_EQ(wd.log_order(), d);
      EXPECT_TRUE(subgroup_contains(w, wd));
      for (unsigned d2 = d; d2 <= eps; ++d2) EXPECT_TRUE(subgroup_contains(truncation(w, d2), wd));
    }
  }
}

TEST(Subgroup2, HashAndPrintAgreeWithEquality) {
  const auto ctx = PrimePowerCtx::make(3, 2);
  const Subgroup2 a = gen({{3, 0}, {1, 1}}, ctx);
  const Subgroup2 b = gen({{1, 1}, {0, 3}}, ctx);
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::hash<Subgroup2>{}(a), std::hash<Subgroup2>{}(b));
  EXPECT_EQ(a.to_string(), b.to_string());
}

}  // namespace
}  // namespace kummer
