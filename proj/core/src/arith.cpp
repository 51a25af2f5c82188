#include "kummer/arith.hpp"

#include <limits>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

}  // namespace

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(u64 x) {
  if (x < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kBases) {
    if (x % q == 0) return x == q;
  }
  u64 d = x - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : kBases) {
    u64 y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

i64 ext_gcd(i64 a, i64 b, i64& s, i64& t) {
  i64 old_r = a, r = b;
  i64 old_s = 1, cur_s = 0;
  i64 old_t = 0, cur_t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

i64 inverse_mod(i64 a, i64 m) {
  i64 s = 0, t = 0;
  i64 g = ext_gcd(mod(a, m), m, s, t);
  if (g != 1) throw DomainError("inverse_mod: argument is not a unit");
  return mod(s, m);
}

u64 ipow(u64 p, unsigned k) {
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > std::numeric_limits<u64>::max() / p) {
      throw DomainError("ipow: overflow");
    }
    r *= p;
  }
  return r;
}

std::vector<u64> prime_factors(u64 x) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= x; ++q) {
    if (x % q == 0) {
      out.push_back(q);
      while (x % q == 0) x /= q;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace kummer
