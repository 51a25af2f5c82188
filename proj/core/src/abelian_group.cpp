#include "kummer/abelian_group.hpp"

#include <algorithm>

#include "kummer/errors.hpp"

namespace kummer {

AbelianPGroup::AbelianPGroup(u64 p, std::vector<u64> orders) : p_(p) {
  for (u64 o : orders) {
    if (o == 0) throw DomainError("AbelianPGroup: zero order");
    u64 x = o;
    while (x % p == 0) x /= p;
    if (x != 1) throw DomainError("AbelianPGroup: factor order is not a power of p");
    if (o > 1) orders_.push_back(o);
  }
  std::sort(orders_.begin(), orders_.end());
}

AbelianPGroup AbelianPGroup::from_exponents(u64 p, const std::vector<unsigned>& exponents) {
  std::vector<u64> orders;
  orders.reserve(exponents.size());
  for (unsigned e : exponents) orders.push_back(ipow(p, e));
  return AbelianPGroup(p, std::move(orders));
}

u64 AbelianPGroup::order() const {
  u64 r = 1;
  for (u64 o : orders_) r *= o;
  return r;
}

AbelianPGroup AbelianPGroup::operator+(const AbelianPGroup& other) const {
  std::vector<u64> merged = orders_;
  merged.insert(merged.end(), other.orders_.begin(), other.orders_.end());
  return AbelianPGroup(p_ != 0 ? p_ : other.p_, std::move(merged));
}

std::string AbelianPGroup::to_string() const {
  if (orders_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i > 0) out += " × ";
    out += "Z/" + std::to_string(orders_[i]) + "Z";
  }
  return out;
}

}  // namespace kummer
