#pragma once

// Dense linear algebra over the local ring Z/p^e.

#include <cstddef>
#include <vector>

#include "kummer/arith.hpp"

namespace kummer {

/// Z/p^e with p^e < 2^31, so products of two residues fit in 64 bits.
class ModRing {
 public:
  ModRing(u64 p, unsigned e);

  u64 p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  u64 modulus() const noexcept { return q_; }

  u64 reduce(i64 x) const noexcept { return static_cast<u64>(mod(x, static_cast<i64>(q_))); }
  u64 add(u64 a, u64 b) const noexcept { return (a + b) % q_; }
  u64 sub(u64 a, u64 b) const noexcept { return (a + q_ - b) % q_; }
  u64 mul(u64 a, u64 b) const noexcept { return (a * b) % q_; }
  /// v_p of a residue; e for zero.
  unsigned valuation(u64 a) const noexcept;
  /// p^k as a residue (0 for k >= e).
  u64 power(unsigned k) const noexcept;
  u64 inverse_unit(u64 a) const;

 private:
  u64 p_;
  unsigned e_;
  u64 q_;
};

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static ModMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  u64& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<u64> column(std::size_t j) const;
  /// Rows [first, first + count).
  ModMatrix row_block(std::size_t first, std::size_t count) const;
  bool is_zero() const noexcept;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<u64> a_;
};

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, const ModRing& ring);
ModMatrix hstack(const ModMatrix& a, const ModMatrix& b);
ModMatrix vstack(const ModMatrix& a, const ModMatrix& b);
ModMatrix scaled(const ModMatrix& a, u64 c, const ModRing& ring);

/// Valuations of the Smith diagonal, ascending; entries equal to e (zero) are
/// omitted.
std::vector<unsigned> smith_valuations(ModMatrix m, const ModRing& ring);

/// Generators, as columns, of {x : m x = 0}.
ModMatrix kernel(const ModMatrix& m, const ModRing& ring);

/// A generating set of the column span with at most rows() columns.
ModMatrix reduce_columns(ModMatrix g, const ModRing& ring);

/// Exponents k of the cyclic factors Z/p^k of R^rows / (column span of g),
/// ascending, zero exponents dropped.
std::vector<unsigned> cokernel_exponents(const ModMatrix& g, const ModRing& ring);

}  // namespace kummer
