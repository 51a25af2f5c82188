#include "kummer/localdata.hpp"

#include <algorithm>
#include <string>

#include "kummer/errors.hpp"

namespace kummer {

unsigned vp(i64 x, u64 p) {
  if (x == 0) throw DomainError("vp: argument is zero");
  if (p < 2) throw DomainError("vp: base must be at least 2");
  u64 y = x < 0 ? static_cast<u64>(-(x + 1)) + 1 : static_cast<u64>(x);
  unsigned e = 0;
  while (y % p == 0) {
    y /= p;
    ++e;
  }
  return e;
}

u64 mult_order(i64 a, u64 l) {
  if (!is_prime(l)) throw DomainError("mult_order: modulus " + std::to_string(l) + " is not prime");
  const u64 r = static_cast<u64>(mod(a, static_cast<i64>(l)));
  if (r == 0) throw DomainError("mult_order: argument divisible by the modulus");
  u64 order = l - 1;
  for (u64 q : prime_factors(l - 1)) {
    while (order % q == 0 && pow_mod(r, order / q, l) == 1) order /= q;
  }
  return order;
}

unsigned unramified_exponent(unsigned n, unsigned s1, unsigned s2) {
  const int value = static_cast<int>(std::min(n, s1)) - (static_cast<int>(s1) - static_cast<int>(s2));
  return value > 0 ? static_cast<unsigned>(value) : 0U;
}

LocalProfile local_profile(u64 p, unsigned n, u64 l1, u64 l2) {
  if (!is_prime(l1) || !is_prime(l2)) {
    throw InvalidInstance("l-prime", "l1 and l2 must be primes");
  }
  if (l1 == l2) throw InvalidInstance("l-distinct", "l1 and l2 must be distinct");
  if (l1 == p || l2 == p) throw InvalidInstance("l-not-p", "l1 and l2 must differ from p");
  LocalProfile prof;
  prof.s1_at_l1 = vp(static_cast<i64>(l1 - 1), p);
  prof.s2_at_l1 = vp(static_cast<i64>(mult_order(static_cast<i64>(l2 % l1), l1)), p);
  prof.s1_at_l2 = vp(static_cast<i64>(l2 - 1), p);
  prof.s2_at_l2 = vp(static_cast<i64>(mult_order(static_cast<i64>(l1 % l2), l2)), p);
  prof.m12 = unramified_exponent(n, prof.s1_at_l1, prof.s2_at_l1);
  prof.m21 = unramified_exponent(n, prof.s1_at_l2, prof.s2_at_l2);
  return prof;
}

Subgroup2 localization_kernel_l1(const PrimePowerCtx& ctx, const LocalProfile& prof) {
  const Vec2Mod g = Vec2Mod::make(0, static_cast<i64>(ctx.power(prof.m12)), ctx);
  return Subgroup2::cyclic(g);
}

Subgroup2 localization_kernel_l2(const PrimePowerCtx& ctx, const LocalProfile& prof) {
  const Vec2Mod g = Vec2Mod::make(static_cast<i64>(ctx.power(prof.m21)), 0, ctx);
  return Subgroup2::cyclic(g);
}

namespace {

// v_p of a Hermite diagonal entry, reading the zero row p^n as infinite.
unsigned hermite_valuation(i64 h, const PrimePowerCtx& ctx) {
  if (static_cast<u64>(h) == ctx.modulus()) return ~0U;
  return ctx.log(static_cast<u64>(h));
}

}  // namespace

bool is_locally_cyclic(const Subgroup2& wc, const LocalProfile& prof, LocalCyclicityRule rule) {
  const auto& ctx = wc.ctx();
  switch (rule) {
    case LocalCyclicityRule::kHermiteCoordinates:
      return hermite_valuation(wc.h11(), ctx) >= prof.m21 &&
             hermite_valuation(wc.h22(), ctx) >= prof.m12;
    case LocalCyclicityRule::kQuotientImage:
      break;
  }
  return image_is_cyclic(wc, localization_kernel_l1(ctx, prof)) &&
         image_is_cyclic(wc, localization_kernel_l2(ctx, prof));
}

bool field_F_locally_cyclic(u64 p, unsigned n, u64 l1, u64 l2) {
  const LocalProfile prof = local_profile(p, n, l1, l2);
  return prof.m12 == 0 && prof.m21 == 0;
}

}  // namespace kummer
