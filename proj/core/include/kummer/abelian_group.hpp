#pragma once

#include <string>
#include <vector>

#include "kummer/arith.hpp"

namespace kummer {

/// A finite abelian p-group stored as the ascending list of the orders of its
/// cyclic factors, e.g. {9, 27} for Z/9 x Z/27. The empty list is the trivial
/// group.
class AbelianPGroup {
 public:
  AbelianPGroup() = default;
  /// Builds from cyclic factor orders; entries equal to 1 are dropped. Each
  /// entry must be a power of p.
  AbelianPGroup(u64 p, std::vector<u64> orders);

  static AbelianPGroup trivial(u64 p) { return AbelianPGroup(p, {}); }
  /// One factor Z/p^e per exponent, zero exponents dropped.
  static AbelianPGroup from_exponents(u64 p, const std::vector<unsigned>& exponents);

  u64 p() const noexcept { return p_; }
  const std::vector<u64>& orders() const noexcept { return orders_; }
  bool is_trivial() const noexcept { return orders_.empty(); }
  u64 order() const;
  /// Direct sum.
  AbelianPGroup operator+(const AbelianPGroup& other) const;

  /// "Z/9Z × Z/27Z"; the trivial group renders as "0".
  std::string to_string() const;

  friend bool operator==(const AbelianPGroup& a, const AbelianPGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  u64 p_ = 0;
  std::vector<u64> orders_;
};

}  // namespace kummer
