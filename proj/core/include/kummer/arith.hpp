#pragma once

#include <cstdint>
#include <vector>

namespace kummer {

using i64 = std::int64_t;
using u64 = std::uint64_t;
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

/// Deterministic primality test for 64-bit inputs (Miller-Rabin with the
/// first twelve prime bases).
bool is_prime(u64 x);

/// base^exp mod m, m >= 1.
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Non-negative residue of x mod m.
inline i64 mod(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a unit modulo m. Throws DomainError when gcd(a, m) != 1.
i64 inverse_mod(i64 a, i64 m);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
i64 ext_gcd(i64 a, i64 b, i64& s, i64& t);

/// Exact p^k; throws DomainError on 64-bit overflow.
u64 ipow(u64 p, unsigned k);

/// Distinct prime factors of x > 0 by trial division.
std::vector<u64> prime_factors(u64 x);

}  // namespace kummer
