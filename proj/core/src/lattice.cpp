#include "kummer/lattice.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

constexpr u64 kModulusLimit = u64{1} << 32;

i64 reduce128(i128 x, i64 m) {
  i128 r = x % m;
  if (r < 0) r += m;
  return static_cast<i64>(r);
}

void require_same(const PrimePowerCtx& a, const PrimePowerCtx& b) {
  if (!(a == b)) throw ContextMismatch();
}

}  // namespace

PrimePowerCtx PrimePowerCtx::make(u64 p, unsigned n) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("n must be at least 1");
  u64 m = 1;
  for (unsigned i = 0; i < n; ++i) {
    const u128 next = static_cast<u128>(m) * p;
    if (next >= kModulusLimit) throw DomainError("p^n must be below 2^32");
    m = static_cast<u64>(next);
  }
  return PrimePowerCtx(p, n, m);
}

u64 PrimePowerCtx::power(unsigned k) const {
  if (k > n_) throw DomainError("power: exponent exceeds n");
  return ipow(p_, k);
}

unsigned PrimePowerCtx::log(u64 p_power) const {
  unsigned k = 0;
  u64 x = p_power;
  while (x > 1 && x % p_ == 0) {
    x /= p_;
    ++k;
  }
  if (x != 1 || k > n_) throw DomainError("log: argument is not a divisor of p^n");
  return k;
}

Vec2Mod Vec2Mod::make(i64 a, i64 b, const PrimePowerCtx& ctx) {
  const auto m = static_cast<i64>(ctx.modulus());
  return Vec2Mod{mod(a, m), mod(b, m), ctx};
}

Subgroup2 Subgroup2::trivial(const PrimePowerCtx& ctx) {
  const auto m = static_cast<i64>(ctx.modulus());
  return Subgroup2(m, 0, m, ctx);
}

Subgroup2 Subgroup2::full(const PrimePowerCtx& ctx) { return Subgroup2(1, 0, 1, ctx); }

// Adds the row (x, y) to the integer lattice spanned by the current rows and
// p^n Z^2, restoring Hermite form with one extended-gcd step on column 1.
void Subgroup2::insert(i64 x, i64 y) {
  const auto m = static_cast<i64>(ctx_.modulus());
  x = mod(x, m);
  y = mod(y, m);
  if (x == 0 && y == 0) return;
  i64 s = 0, t = 0;
  const i64 g = ext_gcd(h11_, x, s, t);
  const i64 new_h12 = reduce128(static_cast<i128>(s) * h12_ + static_cast<i128>(t) * y, m);
  const i64 leftover =
      reduce128(static_cast<i128>(x / g) * h12_ - static_cast<i128>(h11_ / g) * y, m);
  h11_ = g;
  h22_ = std::gcd(h22_, leftover);
  h12_ = mod(new_h12, h22_);
}

Subgroup2 Subgroup2::from_generators(std::span<const Vec2Mod> gens, const PrimePowerCtx& ctx) {
  Subgroup2 s = trivial(ctx);
  for (const auto& g : gens) {
    require_same(g.ctx, ctx);
    s.insert(g.a, g.b);
  }
  return s;
}

u64 Subgroup2::order() const {
  const u64 m = ctx_.modulus();
  return (m / static_cast<u64>(h11_)) * (m / static_cast<u64>(h22_));
}

unsigned Subgroup2::log_order() const {
  const unsigned n = ctx_.n();
  return (n - ctx_.log(static_cast<u64>(h11_))) + (n - ctx_.log(static_cast<u64>(h22_)));
}

bool Subgroup2::is_cyclic() const {
  // The relation matrix p^n * B^{-1} has first elementary divisor equal to the
  // gcd of its entries; the subgroup is cyclic iff that divisor is 1.
  const auto m = static_cast<i64>(ctx_.modulus());
  const i64 c11 = m / h11_;
  const i64 c22 = m / h22_;
  const auto c12 = static_cast<i64>((static_cast<i128>(h12_) * m) / (static_cast<i128>(h11_) * h22_));
  return std::gcd(std::gcd(c11, c12), c22) == 1;
}

bool Subgroup2::is_trivial() const noexcept {
  const auto m = static_cast<i64>(ctx_.modulus());
  return h11_ == m && h22_ == m;
}

bool Subgroup2::contains(const Vec2Mod& v) const {
  require_same(v.ctx, ctx_);
  if (v.a % h11_ != 0) return false;
  const auto m = static_cast<i64>(ctx_.modulus());
  const i64 k = v.a / h11_;
  const i64 rest = reduce128(static_cast<i128>(v.b) - static_cast<i128>(k) * h12_, m);
  return rest % h22_ == 0;
}

std::string Subgroup2::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Subgroup2& s) {
  const auto m = static_cast<i64>(s.ctx().modulus());
  if (s.is_trivial()) return os << "<0>";
  os << '<';
  bool first = true;
  if (s.h11() != m) {
    os << '(' << s.h11() << ',' << s.h12() << ')';
    first = false;
  }
  if (s.h22() != m) {
    if (!first) os << ',';
    os << "(0," << s.h22() << ')';
  }
  return os << '>';
}

Subgroup2 subgroup_from_generators(std::span<const Vec2Mod> gens, const PrimePowerCtx& ctx) {
  return Subgroup2::from_generators(gens, ctx);
}

Subgroup2 join(const Subgroup2& a, const Subgroup2& b) {
  require_same(a.ctx(), b.ctx());
  const Vec2Mod gens[] = {a.row1(), a.row2(), b.row1(), b.row2()};
  return Subgroup2::from_generators(gens, a.ctx());
}

Subgroup2 annihilator(const Subgroup2& a) {
  // The dual lattice of L = B Z^2 scaled by p^n is spanned by the columns of
  // p^n B^{-1}; it is integral because L contains p^n Z^2.
  const auto& ctx = a.ctx();
  const auto m = static_cast<i64>(ctx.modulus());
  const i64 c12 = static_cast<i64>((static_cast<i128>(a.h12()) * m) /
                                   (static_cast<i128>(a.h11()) * a.h22()));
  const Vec2Mod gens[] = {Vec2Mod::make(m / a.h11(), 0, ctx),
                          Vec2Mod::make(-c12, m / a.h22(), ctx)};
  return Subgroup2::from_generators(gens, ctx);
}

Subgroup2 intersect(const Subgroup2& a, const Subgroup2& b) {
  require_same(a.ctx(), b.ctx());
  return annihilator(join(annihilator(a), annihilator(b)));
}

bool contains(const Subgroup2& a, const Vec2Mod& x) { return a.contains(x); }

bool subgroup_contains(const Subgroup2& a, const Subgroup2& b) {
  require_same(a.ctx(), b.ctx());
  return a.contains(b.row1()) && a.contains(b.row2());
}

Subgroup2 scale(const Subgroup2& a, u64 k) {
  const auto& ctx = a.ctx();
  (void)ctx.log(k);  // validates k | p^n and k a p-power
  const auto kk = static_cast<i64>(k);
  const auto m = static_cast<i64>(ctx.modulus());
  const Vec2Mod gens[] = {
      Vec2Mod::make(reduce128(static_cast<i128>(kk) * a.h11(), m),
                    reduce128(static_cast<i128>(kk) * a.h12(), m), ctx),
      Vec2Mod::make(0, reduce128(static_cast<i128>(kk) * a.h22(), m), ctx)};
  return Subgroup2::from_generators(gens, ctx);
}

Subgroup2 truncation(const Subgroup2& w, unsigned d) {
  if (!w.is_cyclic()) throw DomainError("truncation: subgroup is not cyclic");
  const unsigned eps = w.log_order();
  if (d > eps) throw DomainError("truncation: d exceeds log_p |W|");
  return scale(w, w.ctx().power(eps - d));
}

bool image_is_cyclic(const Subgroup2& a, const Subgroup2& kernel) {
  // Q = (a + K)/K is a finite p-group; it is cyclic iff |Q / pQ| <= p, and
  // Q / pQ = (a + K) / (K + p a).
  const Subgroup2 top = join(a, kernel);
  const Subgroup2 bottom = join(kernel, scale(a, a.ctx().p()));
  return top.order() <= a.ctx().p() * bottom.order();
}

}  // namespace kummer
