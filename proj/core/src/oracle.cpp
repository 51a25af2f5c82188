#include "kummer/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "kummer/errors.hpp"
#include "kummer/localdata.hpp"

namespace kummer {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m{n, std::vector<i64>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.n != y.n) throw DomainError("IntMatrix sizes differ");
  IntMatrix z{x.n, std::vector<i64>(x.n * x.n, 0)};
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      const i64 v = x(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

namespace {

IntMatrix int_power(const IntMatrix& t, u64 k) {
  IntMatrix r = IntMatrix::identity(t.n);
  for (u64 i = 0; i < k; ++i) r = r * t;
  return r;
}

}  // namespace

GModule::GModule(u64 p, unsigned n1, unsigned n2, IntMatrix t1, IntMatrix t2)
    : p_(p), n1_(n1), n2_(n2), ord1_(ipow(p, n1)), ord2_(ipow(p, n2)), t1_(std::move(t1)), t2_(std::move(t2)) {
  if (!is_prime(p)) throw DomainError("GModule: p must be prime");
  if (t1_.n != t2_.n || t1_.a.size() != t1_.n * t1_.n || t2_.a.size() != t2_.n * t2_.n)
    throw DomainError("GModule: action matrices must be square of equal size");
  if (!(t1_ * t2_ == t2_ * t1_)) throw DomainError("GModule: action matrices do not commute");
  const IntMatrix id = IntMatrix::identity(rank());
  if (!(int_power(t1_, ord1_) == id) || !(int_power(t2_, ord2_) == id))
    throw DomainError("GModule: generator order does not divide the group exponent");
}

GModule GModule::trivial(u64 p, unsigned n1, unsigned n2, std::size_t rank) {
  return GModule(p, n1, n2, IntMatrix::identity(rank), IntMatrix::identity(rank));
}

GModule GModule::permutation(u64 p, unsigned n1, unsigned n2, const std::vector<std::size_t>& perm1,
                             const std::vector<std::size_t>& perm2) {
  const std::size_t n = perm1.size();
  if (perm2.size() != n) throw DomainError("GModule::permutation: permutation sizes differ");
  IntMatrix t1{n, std::vector<i64>(n * n, 0)};
  IntMatrix t2 = t1;
  for (std::size_t j = 0; j < n; ++j) {
    t1(perm1[j], j) = 1;
    t2(perm2[j], j) = 1;
  }
  return GModule(p, n1, n2, std::move(t1), std::move(t2));
}

std::vector<GroupElement> expand(const GModule& m, const SubgroupOfG& s) {
  std::set<GroupElement> seen{{0, 0}};
  std::vector<GroupElement> frontier{{0, 0}};
  while (!frontier.empty()) {
    const GroupElement x = frontier.back();
    frontier.pop_back();
    for (const auto& g : s.generators) {
      const GroupElement y{(x.first + g.first) % m.order1(), (x.second + g.second) % m.order2()};
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<SubgroupOfG> cyclic_subgroups(const GModule& m) {
  std::set<std::vector<GroupElement>> seen;
  std::vector<SubgroupOfG> out;
  for (u64 a = 0; a < m.order1(); ++a) {
    for (u64 b = 0; b < m.order2(); ++b) {
      SubgroupOfG s{{{a, b}}};
      if (seen.insert(expand(m, s)).second) out.push_back(std::move(s));
    }
  }
  return out;
}

GModule character_lattice(const TowerSpec& spec, const OracleBounds& bounds) {
  const PrimePowerCtx& ctx = spec.ctx;
  const u64 order = ctx.modulus() * ctx.modulus();
  if (order > bounds.max_group_order) {
    throw OracleOutOfRange("|G| = " + std::to_string(order) + " exceeds the oracle bound " +
                           std::to_string(bounds.max_group_order));
  }
  const InvariantTable table = build_table(spec);
  std::size_t total = 0;
  for (unsigned e : table.eps) total += ctx.power(e);
  const std::size_t rank = total - 1;
  if (rank > bounds.max_rank) {
    throw OracleOutOfRange("rank(T^) = " + std::to_string(rank) + " exceeds the oracle bound " +
                           std::to_string(bounds.max_rank));
  }
  // Coset t of G/H_i: the character (x, y) restricted to W_i, t = x a'_i + y b'_i mod p^eps_i.
  std::vector<std::size_t> perm1(total);
  std::vector<std::size_t> perm2(total);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    const u64 size = ctx.power(table.eps[i]);
    const u64 shrink = ctx.power(ctx.n() - table.eps[i]);
    const u64 a = static_cast<u64>(spec.pairs[i].a) / shrink % size;
    const u64 b = static_cast<u64>(spec.pairs[i].b) / shrink % size;
    for (u64 t = 0; t < size; ++t) {
      perm1[offset + t] = offset + (t + a) % size;
      perm2[offset + t] = offset + (t + b) % size;
    }
    offset += size;
  }
  // Quotient by the all-ones vector: the last coset becomes minus the sum of the others.
  auto project = [&](const std::vector<std::size_t>& perm) {
    IntMatrix t{rank, std::vector<i64>(rank * rank, 0)};
    for (std::size_t j = 0; j < rank; ++j) {
      if (perm[j] == rank) {
        for (std::size_t i = 0; i < rank; ++i) t(i, j) = -1;
      } else {
        t(perm[j], j) = 1;
      }
    }
    return t;
  };
  return GModule(ctx.p(), ctx.n(), ctx.n(), project(perm1), project(perm2));
}

namespace {

ModMatrix to_mod(const IntMatrix& t, const ModRing& ring) {
  ModMatrix m(t.n, t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) m(i, j) = ring.reduce(t(i, j));
  return m;
}

ModMatrix minus_identity(ModMatrix m, const ModRing& ring) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = ring.sub(m(i, i), 1);
  return m;
}

ModMatrix negated(const ModMatrix& m, const ModRing& ring) { return scaled(m, ring.modulus() - 1, ring); }

ModMatrix add(const ModMatrix& a, const ModMatrix& b, const ModRing& ring) {
  ModMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.add(a(i, j), b(i, j));
  return c;
}

unsigned log_group_order(const GModule& m) { return m.n1() + m.n2(); }

ModRing ring_for(const GModule& m) { return ModRing(m.p(), std::max(2 * log_group_order(m), 1U)); }

// T^k and 1 + T + ... + T^(k-1) for 0 <= k <= order.
struct PowerTable {
  std::vector<ModMatrix> pow;
  std::vector<ModMatrix> sum;

  PowerTable(const ModMatrix& t, u64 order, const ModRing& ring) {
    const std::size_t r = t.rows();
    pow.push_back(ModMatrix::identity(r));
    sum.push_back(ModMatrix(r, r));
    for (u64 k = 1; k <= order; ++k) {
      sum.push_back(add(sum.back(), pow.back(), ring));
      pow.push_back(multiply(pow.back(), t, ring));
    }
  }
};

// The space of cocycles killed by p^K (K = log_p |G|), which meets every class
// of H^1(G, M (x) Q/Z), parametrised as X = Z u.
class CocycleSpace {
 public:
  explicit CocycleSpace(const GModule& m)
      : m_(m),
        ring_(ring_for(m)),
        t1_(to_mod(m.t1(), ring_), m.order1(), ring_),
        t2_(to_mod(m.t2(), ring_), m.order2(), ring_) {
    const std::size_t r = m.rank();
    const ModMatrix zero(r, r);
    const ModMatrix& n1 = t1_.sum.back();
    const ModMatrix& n2 = t2_.sum.back();
    const ModMatrix d1 = minus_identity(t1_.pow[1], ring_);
    const ModMatrix d2 = minus_identity(t2_.pow[1], ring_);
    ModMatrix c = vstack(hstack(n1, zero), hstack(zero, n2));
    c = vstack(c, hstack(d2, negated(d1, ring_)));
    ModMatrix torsion = ModMatrix::identity(2 * r);
    torsion = scaled(torsion, ring_.power(log_group_order(m)), ring_);
    z_ = reduce_columns(kernel(vstack(c, torsion), ring_), ring_);

    // Coboundaries: X = ((T1 - 1) a, (T2 - 1) a).
    const ModMatrix delta = vstack(d1, d2);
    coboundaries_ = preimage(z_, delta);
  }

  const ModRing& ring() const noexcept { return ring_; }
  const ModMatrix& z() const noexcept { return z_; }
  const ModMatrix& coboundaries() const noexcept { return coboundaries_; }
  std::size_t dim() const noexcept { return z_.cols(); }

  // Generators of {w : (Z a) w restricts to a coboundary on <gens>}, as a
  // matrix with a.cols() rows.
  ModMatrix restriction_trivial(const ModMatrix& a, const std::vector<GroupElement>& gens) const {
    if (gens.empty() || a.cols() == 0) return ModMatrix::identity(a.cols());
    const std::size_t r = m_.rank();
    const ModMatrix za = multiply(z_, a, ring_);
    const ModMatrix top = za.row_block(0, r);
    const ModMatrix bottom = za.row_block(r, r);
    ModMatrix values;
    ModMatrix moves;
    for (const auto& [x, y] : gens) {
      // f(tau1^x tau2^y) = S1(x) x1 + T1^x S2(y) x2
      ModMatrix fg = add(multiply(t1_.sum[x], top, ring_),
                         multiply(t1_.pow[x], multiply(t2_.sum[y], bottom, ring_), ring_), ring_);
      ModMatrix gm = minus_identity(multiply(t1_.pow[x], t2_.pow[y], ring_), ring_);
      values = values.rows() == 0 ? fg : vstack(values, fg);
      moves = moves.rows() == 0 ? gm : vstack(moves, gm);
    }
    return projected_kernel(values, moves);
  }

  // Generators of the submodule of a's column span (in u-space) that is
  // trivial on the subgroup.
  ModMatrix restrict_span(const ModMatrix& a, const std::vector<GroupElement>& gens) const {
    return reduce_columns(multiply(a, restriction_trivial(a, gens), ring_), ring_);
  }

  // Structure of span(a) / coboundaries.
  std::vector<unsigned> quotient_by_coboundaries(const ModMatrix& a) const {
    const ModMatrix w = projected_kernel(a, coboundaries_);
    return cokernel_exponents(w, ring_);
  }

 private:
  // {w : a w = b v for some v}, projected to w.
  ModMatrix projected_kernel(const ModMatrix& a, const ModMatrix& b) const {
    const ModMatrix k = kernel(hstack(a, negated(b, ring_)), ring_);
    return reduce_columns(k.row_block(0, a.cols()), ring_);
  }

  ModMatrix preimage(const ModMatrix& a, const ModMatrix& b) const { return projected_kernel(a, b); }

  const GModule& m_;
  ModRing ring_;
  PowerTable t1_;
  PowerTable t2_;
  ModMatrix z_;
  ModMatrix coboundaries_;
};

AbelianPGroup group_from(u64 p, const std::vector<unsigned>& exponents) {
  return AbelianPGroup::from_exponents(p, exponents);
}

void check_group(const GModule& m, const SubgroupOfG& s) {
  for (const auto& [x, y] : s.generators)
    if (x >= m.order1() || y >= m.order2()) throw DomainError("subgroup generator outside G");
}

}  // namespace

std::vector<u64> act(const GModule& m, const ModRing& ring, const GroupElement& g, const std::vector<u64>& v) {
  const std::size_t r = m.rank();
  auto apply = [&](const IntMatrix& t, const std::vector<u64>& x) {
    std::vector<u64> y(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) y[i] = ring.add(y[i], ring.mul(ring.reduce(t(i, j)), x[j]));
    return y;
  };
  std::vector<u64> out = v;
  for (u64 k = 0; k < g.second % m.order2(); ++k) out = apply(m.t2(), out);
  for (u64 k = 0; k < g.first % m.order1(); ++k) out = apply(m.t1(), out);
  return out;
}

std::vector<u64> evaluate_cocycle(const GModule& m, const ModRing& ring, const std::vector<u64>& x,
                                  const GroupElement& g) {
  const std::size_t r = m.rank();
  if (x.size() != 2 * r) throw DomainError("cocycle vector must have length 2 * rank");
  const std::vector<u64> x1(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r));
  const std::vector<u64> x2(x.begin() + static_cast<std::ptrdiff_t>(r), x.end());
  auto accumulate = [&](const std::vector<u64>& xs, u64 count, const GroupElement& step) {
    std::vector<u64> total(r, 0);
    std::vector<u64> term = xs;
    for (u64 k = 0; k < count; ++k) {
      for (std::size_t i = 0; i < r; ++i) total[i] = ring.add(total[i], term[i]);
      term = act(m, ring, step, term);
    }
    return total;
  };
  const u64 a = g.first % m.order1();
  const u64 b = g.second % m.order2();
  std::vector<u64> out = accumulate(x1, a, {1, 0});
  const std::vector<u64> tail = act(m, ring, {a, 0}, accumulate(x2, b, {0, 1}));
  for (std::size_t i = 0; i < r; ++i) out[i] = ring.add(out[i], tail[i]);
  return out;
}

H2Result h2(const GModule& m) {
  H2Result result;
  const CocycleSpace space(m);
  const ModRing& ring = space.ring();
  result.precision = ring.e();

  // Diagonalise the coboundary lattice inside u-space, keeping the row
  // transform so that factor generators can be read off.
  const ModMatrix& cob = space.coboundaries();
  const std::size_t z = space.dim();
  ModMatrix work = cob;
  ModMatrix basis = ModMatrix::identity(z);  // columns: u-space basis adapted to cob
  const u64 q = ring.modulus();
  std::vector<unsigned> vals;
  for (std::size_t t = 0; t < std::min(work.rows(), work.cols()); ++t) {
    unsigned best = ring.e();
    std::size_t bi = t;
    std::size_t bj = t;
    for (std::size_t i = t; i < work.rows(); ++i)
      for (std::size_t j = t; j < work.cols(); ++j) {
        const unsigned v = ring.valuation(work(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best == ring.e()) break;
    for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work(t, j), work(bi, j));
    for (std::size_t i = 0; i < z; ++i) std::swap(basis(i, t), basis(i, bi));
    for (std::size_t i = 0; i < work.rows(); ++i) std::swap(work(i, t), work(i, bj));
    const u64 pv = ring.power(best);
    for (std::size_t i = t + 1; i < work.rows(); ++i) {
      if (work(i, t) == 0) continue;
      const u64 c = work(i, t) / pv * ring.inverse_unit(work(t, t) / pv) % q;
      // row_i -= c row_t; basis col_t += c basis col_i
      for (std::size_t j = 0; j < work.cols(); ++j) work(i, j) = ring.sub(work(i, j), ring.mul(c, work(t, j)));
      for (std::size_t k = 0; k < z; ++k) basis(k, t) = ring.add(basis(k, t), ring.mul(c, basis(k, i)));
    }
    for (std::size_t j = t + 1; j < work.cols(); ++j) {
      if (work(t, j) == 0) continue;
      const u64 c = work(t, j) / pv * ring.inverse_unit(work(t, t) / pv) % q;
      for (std::size_t i = 0; i < work.rows(); ++i) work(i, j) = ring.sub(work(i, j), ring.mul(c, work(i, t)));
    }
    vals.push_back(best);
  }
  std::vector<unsigned> exponents;
  auto emit = [&](std::size_t col, unsigned exponent) {
    std::vector<u64> u = basis.column(col);
    ModMatrix uc(z, 1);
    for (std::size_t i = 0; i < z; ++i) uc(i, 0) = u[i];
    result.cocycles.push_back(multiply(space.z(), uc, ring).column(0));
    exponents.push_back(exponent);
  };
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] > 0) emit(i, vals[i]);
  for (std::size_t i = vals.size(); i < z; ++i) emit(i, ring.e());
  result.group = group_from(m.p(), exponents);
  return result;
}

AbelianPGroup restriction_kernel(const GModule& m, const std::vector<SubgroupOfG>& subgroups) {
  const CocycleSpace space(m);
  ModMatrix a = ModMatrix::identity(space.dim());
  for (const auto& s : subgroups) {
    check_group(m, s);
    a = space.restrict_span(a, s.generators);
  }
  return group_from(m.p(), space.quotient_by_coboundaries(a));
}

std::pair<SubgroupOfG, SubgroupOfG> ramified_decomposition_groups(const TowerSpec& spec) {
  const PrimePowerCtx& ctx = spec.ctx;
  const LocalProfile prof = local_profile(ctx.p(), ctx.n(), spec.l1, spec.l2);
  const u64 n = ctx.modulus();
  SubgroupOfG at_l1{{{1 % n, 0}, {0, ctx.power(ctx.n() - prof.m12) % n}}};
  SubgroupOfG at_l2{{{ctx.power(ctx.n() - prof.m21) % n, 0}, {0, 1 % n}}};
  return {at_l1, at_l2};
}

OracleResult sha_oracle(const TowerSpec& spec, const OracleBounds& bounds) {
  const GModule m = character_lattice(spec, bounds);
  const CocycleSpace space(m);
  ModMatrix a = ModMatrix::identity(space.dim());
  for (const auto& s : cyclic_subgroups(m)) a = space.restrict_span(a, s.generators);
  OracleResult out;
  out.sha_omega = group_from(m.p(), space.quotient_by_coboundaries(a));
  const auto [at_l1, at_l2] = ramified_decomposition_groups(spec);
  a = space.restrict_span(a, at_l1.generators);
  a = space.restrict_span(a, at_l2.generators);
  out.sha = group_from(m.p(), space.quotient_by_coboundaries(a));
  return out;
}

}  // namespace kummer
