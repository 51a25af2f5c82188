#pragma once

// Subgroups of W = (Z/p^n)^2. Under Kummer theory W is the group generated by
// the classes of l1 and l2 in k^x/(k^x)^{p^n}; inclusion, join and
// intersection of subgroups mirror inclusion, compositum and intersection of
// the corresponding subfields of k(l1^{1/p^n}, l2^{1/p^n}).

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>

#include "kummer/arith.hpp"

namespace kummer {

/// The pair (p, n) fixing W = (Z/p^n)^2. Requires p prime, n >= 1 and
/// p^n < 2^32 so that products of residues fit in 64 bits.
class PrimePowerCtx {
 public:
  static PrimePowerCtx make(u64 p, unsigned n);

  u64 p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  u64 modulus() const noexcept { return modulus_; }

  /// p^k for 0 <= k <= n.
  u64 power(unsigned k) const;
  /// Exponent k of a divisor p^k of the modulus; DomainError otherwise.
  unsigned log(u64 p_power) const;

  friend bool operator==(const PrimePowerCtx&, const PrimePowerCtx&) = default;

 private:
  PrimePowerCtx(u64 p, unsigned n, u64 modulus) : p_(p), n_(n), modulus_(modulus) {}
  u64 p_;
  unsigned n_;
  u64 modulus_;
};

/// An element (a, b) of W, components reduced mod p^n.
struct Vec2Mod {
  i64 a;
  i64 b;
  PrimePowerCtx ctx;

  static Vec2Mod make(i64 a, i64 b, const PrimePowerCtx& ctx);
  bool is_zero() const noexcept { return a == 0 && b == 0; }

  friend bool operator==(const Vec2Mod&, const Vec2Mod&) = default;
};

/// A subgroup of W in canonical Hermite form: the subgroup equals
/// <(h11, h12), (0, h22)> with h11, h22 powers of p dividing p^n (p^n standing
/// for a zero row) and 0 <= h12 < h22. Two subgroups are equal iff their
/// canonical forms are.
class Subgroup2 {
 public:
  static Subgroup2 trivial(const PrimePowerCtx& ctx);
  static Subgroup2 full(const PrimePowerCtx& ctx);
  /// Subgroup generated by `gens`; all generators must share `ctx`.
  static Subgroup2 from_generators(std::span<const Vec2Mod> gens, const PrimePowerCtx& ctx);
  static Subgroup2 cyclic(const Vec2Mod& g) { return from_generators({&g, 1}, g.ctx); }

  i64 h11() const noexcept { return h11_; }
  i64 h12() const noexcept { return h12_; }
  i64 h22() const noexcept { return h22_; }
  const PrimePowerCtx& ctx() const noexcept { return ctx_; }

  Vec2Mod row1() const { return Vec2Mod::make(h11_, h12_, ctx_); }
  Vec2Mod row2() const { return Vec2Mod::make(0, h22_, ctx_); }

  u64 order() const;
  /// log_p of the order.
  unsigned log_order() const;
  bool is_cyclic() const;
  bool is_trivial() const noexcept;
  bool contains(const Vec2Mod& x) const;

  std::string to_string() const;

  friend bool operator==(const Subgroup2&, const Subgroup2&) = default;

 private:
  Subgroup2(i64 h11, i64 h12, i64 h22, const PrimePowerCtx& ctx)
      : h11_(h11), h12_(h12), h22_(h22), ctx_(ctx) {}
  void insert(i64 x, i64 y);

  i64 h11_;
  i64 h12_;
  i64 h22_;
  PrimePowerCtx ctx_;
};

std::ostream& operator<<(std::ostream& os, const Subgroup2& s);

Subgroup2 subgroup_from_generators(std::span<const Vec2Mod> gens, const PrimePowerCtx& ctx);
Subgroup2 join(const Subgroup2& a, const Subgroup2& b);
Subgroup2 intersect(const Subgroup2& a, const Subgroup2& b);
bool contains(const Subgroup2& a, const Vec2Mod& x);
/// True iff b is a subgroup of a.
bool subgroup_contains(const Subgroup2& a, const Subgroup2& b);
/// k * A for k a power of p dividing p^n.
Subgroup2 scale(const Subgroup2& a, u64 k);
/// The unique subgroup of order p^d of a cyclic subgroup w (0 <= d <= log|w|).
Subgroup2 truncation(const Subgroup2& w, unsigned d);
/// Annihilator {y : <x, y> = 0 mod p^n for all x in a} under the dot product.
Subgroup2 annihilator(const Subgroup2& a);
/// Whether the image of `a` in W / `kernel` is cyclic, i.e. (a + kernel)/kernel.
bool image_is_cyclic(const Subgroup2& a, const Subgroup2& kernel);

}  // namespace kummer

template <>
struct std::hash<kummer::Subgroup2> {
  std::size_t operator()(const kummer::Subgroup2& s) const noexcept {
    std::size_t h = std::hash<long long>{}(s.h11());
    h = h * 1000003U ^ std::hash<long long>{}(s.h12());
    h = h * 1000003U ^ std::hash<long long>{}(s.h22());
    return h;
  }
};
