#include "kummer/modular_matrix.hpp"

#include <algorithm>
#include <utility>

#include "kummer/errors.hpp"

namespace kummer {

ModRing::ModRing(u64 p, unsigned e) : p_(p), e_(e), q_(1) {
  if (p < 2 || e == 0) throw DomainError("ModRing needs p >= 2 and e >= 1");
  for (unsigned k = 0; k < e; ++k) {
    q_ *= p;
    if (q_ >= (u64{1} << 31)) throw DomainError("ModRing modulus p^e must stay below 2^31");
  }
}

unsigned ModRing::valuation(u64 a) const noexcept {
  if (a % q_ == 0) return e_;
  unsigned v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

u64 ModRing::power(unsigned k) const noexcept {
  if (k >= e_) return 0;
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p_;
  return r;
}

u64 ModRing::inverse_unit(u64 a) const {
  return static_cast<u64>(inverse_mod(static_cast<i64>(a % q_), static_cast<i64>(q_)));
}

ModMatrix ModMatrix::identity(std::size_t n) {
  ModMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<u64> ModMatrix::column(std::size_t j) const {
  std::vector<u64> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

ModMatrix ModMatrix::row_block(std::size_t first, std::size_t count) const {
  ModMatrix out(count, cols_);
  std::copy(a_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            a_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.a_.begin());
  return out;
}

bool ModMatrix::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](u64 x) { return x == 0; });
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, const ModRing& ring) {
  if (a.cols() != b.rows()) throw DomainError("matrix shapes do not match");
  ModMatrix c(a.rows(), b.cols());
  const u64 q = ring.modulus();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const u64 x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + x * b(k, j)) % q;
    }
  }
  return c;
}

ModMatrix hstack(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hstack: row counts differ");
  ModMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

ModMatrix vstack(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols() != b.cols()) throw DomainError("vstack: column counts differ");
  ModMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

ModMatrix scaled(const ModMatrix& a, u64 c, const ModRing& ring) {
  ModMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.mul(a(i, j), c);
  return out;
}

namespace {

void swap_rows(ModMatrix& m, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(k, j));
}

void swap_cols(ModMatrix& m, std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, j), m(i, k));
}

// col_j -= c * col_t
void col_axpy(ModMatrix& m, std::size_t j, std::size_t t, u64 c, const ModRing& ring) {
  const u64 q = ring.modulus();
  const u64 neg = (q - c % q) % q;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = (m(i, j) + neg * m(i, t)) % q;
}

// Diagonalizes m in place by unimodular row and column operations; column
// operations are mirrored on *cols when given, so m_in * cols = (row ops)^-1 * m.
// Returns the pivot valuations in pivot order (non-decreasing).
std::vector<unsigned> diagonalize(ModMatrix& m, ModMatrix* cols, const ModRing& ring) {
  const u64 q = ring.modulus();
  std::vector<unsigned> vals;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    unsigned best = ring.e();
    std::size_t bi = t;
    std::size_t bj = t;
    for (std::size_t i = t; i < m.rows() && best > 0; ++i) {
      for (std::size_t j = t; j < m.cols(); ++j) {
        if (m(i, j) == 0) continue;
        const unsigned v = ring.valuation(m(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (best == ring.e()) break;
    swap_rows(m, t, bi);
    swap_cols(m, t, bj);
    if (cols != nullptr) swap_cols(*cols, t, bj);

    const u64 pv = ring.power(best);
    const u64 unit_inv = ring.inverse_unit(m(t, t) / pv);
    for (std::size_t j = t; j < m.cols(); ++j) m(t, j) = ring.mul(m(t, j), unit_inv);

    for (std::size_t i = t + 1; i < m.rows(); ++i) {
      if (m(i, t) == 0) continue;
      const u64 c = m(i, t) / pv;
      const u64 neg = (q - c) % q;
      for (std::size_t j = t; j < m.cols(); ++j) m(i, j) = (m(i, j) + neg * m(t, j)) % q;
    }
    for (std::size_t j = t + 1; j < m.cols(); ++j) {
      if (m(t, j) == 0) continue;
      const u64 c = m(t, j) / pv;
      m(t, j) = 0;
      if (cols != nullptr) col_axpy(*cols, j, t, c, ring);
    }
    vals.push_back(best);
  }
  return vals;
}

}  // namespace

std::vector<unsigned> smith_valuations(ModMatrix m, const ModRing& ring) {
  auto vals = diagonalize(m, nullptr, ring);
  std::sort(vals.begin(), vals.end());
  return vals;
}

ModMatrix kernel(const ModMatrix& m, const ModRing& ring) {
  ModMatrix work = m;
  ModMatrix q = ModMatrix::identity(m.cols());
  const auto vals = diagonalize(work, &q, ring);
  std::vector<std::vector<u64>> gens;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == 0) continue;
    const u64 s = ring.power(ring.e() - vals[i]);
    auto c = q.column(i);
    for (auto& x : c) x = ring.mul(x, s);
    gens.push_back(std::move(c));
  }
  for (std::size_t j = vals.size(); j < m.cols(); ++j) gens.push_back(q.column(j));
  ModMatrix out(m.cols(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) out(i, j) = gens[j][i];
  return out;
}

ModMatrix reduce_columns(ModMatrix g, const ModRing& ring) {
  const std::size_t n = g.cols();
  std::size_t lead = 0;  // columns [0, lead) are settled
  for (std::size_t i = 0; i < g.rows() && lead < n; ++i) {
    unsigned best = ring.e();
    std::size_t bj = lead;
    for (std::size_t j = lead; j < n; ++j) {
      const unsigned v = ring.valuation(g(i, j));
      if (v < best) {
        best = v;
        bj = j;
      }
    }
    if (best == ring.e()) continue;
    swap_cols(g, lead, bj);
    const u64 pv = ring.power(best);
    const u64 unit_inv = ring.inverse_unit(g(i, lead) / pv);
    for (std::size_t j = lead + 1; j < n; ++j) {
      if (g(i, j) == 0) continue;
      col_axpy(g, j, lead, ring.mul(g(i, j) / pv, unit_inv), ring);
    }
    ++lead;
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < g.rows() && !nonzero; ++i) nonzero = g(i, j) != 0;
    if (nonzero) keep.push_back(j);
  }
  ModMatrix out(g.rows(), keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t i = 0; i < g.rows(); ++i) out(i, k) = g(i, keep[k]);
  return out;
}

std::vector<unsigned> cokernel_exponents(const ModMatrix& g, const ModRing& ring) {
  const auto vals = smith_valuations(g, ring);
  std::vector<unsigned> out;
  for (unsigned v : vals)
    if (v > 0) out.push_back(v);
  for (std::size_t k = vals.size(); k < g.rows(); ++k) out.push_back(ring.e());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kummer
