#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyadic {

// Dense index of a group element: mixed radix over the cyclic factors,
// first factor most significant.
using GroupElement = std::uint32_t;

// Z_m1 x ... x Z_mr. An empty list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::uint32_t> cyclic_orders);

  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::uint32_t size() const { return size_; }
  std::size_t rank() const { return orders_.size(); }

  GroupElement zero() const { return 0; }
  GroupElement add(GroupElement a, GroupElement b) const;
  GroupElement neg(GroupElement a) const;
  GroupElement sub(GroupElement a, GroupElement b) const { return add(a, neg(b)); }

  std::vector<std::uint32_t> components(GroupElement a) const;
  GroupElement from_components(const std::vector<std::int64_t>& c) const;
  std::string to_string(GroupElement a) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::uint32_t> orders_;
  std::uint32_t size_ = 1;
};

}  // namespace polyadic
