#include "polyadic/abelian_group.hpp"

#include "polyadic/errors.hpp"

namespace polyadic {

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  std::uint64_t s = 1;
  for (auto m : orders_) {
    if (m < 1) throw ContractError("cyclic orders must be positive");
    s *= m;
    if (s > (1u << 20)) throw BudgetExceeded("grading group larger than 2^20 elements");
  }
  size_ = static_cast<std::uint32_t>(s);
}

std::vector<std::uint32_t> AbelianGroup::components(GroupElement a) const {
  if (a >= size_) throw ContractError("group element out of range");
  std::vector<std::uint32_t> c(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    c[i] = a % orders_[i];
    a /= orders_[i];
  }
  return c;
}

GroupElement AbelianGroup::from_components(const std::vector<std::int64_t>& c) const {
  if (c.size() != orders_.size()) throw ContractError("wrong number of group components");
  GroupElement a = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::int64_t m = orders_[i];
    a = a * orders_[i] + static_cast<GroupElement>(((c[i] % m) + m) % m);
  }
  return a;
}

GroupElement AbelianGroup::add(GroupElement a, GroupElement b) const {
  GroupElement out = 0, w = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const std::uint32_t m = orders_[i];
    out += ((a % m + b % m) % m) * w;
    a /= m;
    b /= m;
    w *= m;
  }
  return out;
}

GroupElement AbelianGroup::neg(GroupElement a) const {
  GroupElement out = 0, w = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const std::uint32_t m = orders_[i];
    out += ((m - a % m) % m) * w;
    a /= m;
    w *= m;
  }
  return out;
}

std::string AbelianGroup::to_string(GroupElement a) const {
  if (orders_.size() == 1) return std::to_string(a);
  std::string s = "(";
  const auto c = components(a);
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace polyadic
