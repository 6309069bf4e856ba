#pragma once

#include <cstdint>
#include <string>

namespace polyadic {

enum class ScalarKind { prime_field, root_of_unity };

// A unit of F_p (value = residue) or a formal m-th root of unity
// (value = exponent t, standing for w^t).
struct UnitScalar {
  ScalarKind kind = ScalarKind::prime_field;
  std::uint32_t modulus = 2;
  std::uint32_t value = 1;

  UnitScalar operator*(UnitScalar o) const;
  UnitScalar inverse() const;
  UnitScalar pow(std::int64_t e) const;
  // -x; for roots of unity only when m is even (-1 = w^(m/2)).
  UnitScalar negated() const;
  bool is_one() const;
  std::string to_string() const;

  friend bool operator==(const UnitScalar&, const UnitScalar&) = default;
};

struct ScalarBackend {
  ScalarKind kind = ScalarKind::prime_field;
  std::uint32_t modulus = 2;

  static ScalarBackend prime_field(std::uint32_t p);
  static ScalarBackend roots_of_unity(std::uint32_t m);

  UnitScalar one() const { return {kind, modulus, kind == ScalarKind::prime_field ? 1u : 0u}; }
  // Residue (prime field, must be nonzero mod p) or exponent (roots).
  UnitScalar make(std::int64_t raw) const;
  // Order of the unit group: p-1 or m.
  std::uint32_t unit_group_order() const;
  // A primitive root of unity of exactly this order (which must divide
  // unit_group_order()). For F_p this is g^((p-1)/order) with g the
  // smallest primitive root.
  UnitScalar root(std::uint32_t order) const;
  bool owns(const UnitScalar& s) const { return s.kind == kind && s.modulus == modulus; }
  std::string to_string() const;

  friend bool operator==(const ScalarBackend&, const ScalarBackend&) = default;
};

bool is_prime(std::uint32_t p);
std::uint32_t smallest_primitive_root(std::uint32_t p);

}  // namespace polyadic
