#include "polyadic/scalar.hpp"

#include <vector>

#include "polyadic/errors.hpp"

namespace polyadic {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % m);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t m) {
  std::uint32_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

void same_backend(const UnitScalar& a, const UnitScalar& b) {
  if (a.kind != b.kind || a.modulus != b.modulus)
    throw ContractError("scalars from different backends");
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (!is_prime(p)) throw ContractError("modulus is not prime");
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t n = p - 1;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) factors.push_back(n);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors) ok = ok && powmod(g, (p - 1) / f, p) != 1;
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

UnitScalar UnitScalar::operator*(UnitScalar o) const {
  same_backend(*this, o);
  if (kind == ScalarKind::prime_field) return {kind, modulus, mulmod(value, o.value, modulus)};
  return {kind, modulus, (value + o.value) % modulus};
}

UnitScalar UnitScalar::inverse() const {
  if (kind == ScalarKind::prime_field) return {kind, modulus, powmod(value, modulus - 2, modulus)};
  return {kind, modulus, (modulus - value) % modulus};
}

UnitScalar UnitScalar::pow(std::int64_t e) const {
  const UnitScalar base = e < 0 ? inverse() : *this;
  const std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  if (kind == ScalarKind::prime_field) return {kind, modulus, powmod(base.value, k, modulus)};
  return {kind, modulus, static_cast<std::uint32_t>((base.value * (k % modulus)) % modulus)};
}

UnitScalar UnitScalar::negated() const {
  if (kind == ScalarKind::prime_field) return {kind, modulus, (modulus - value) % modulus};
  if (modulus % 2 != 0) throw ContractError("-1 is not an odd-order root of unity");
  return {kind, modulus, (value + modulus / 2) % modulus};
}

bool UnitScalar::is_one() const {
  return kind == ScalarKind::prime_field ? value == 1 % modulus : value == 0;
}

std::string UnitScalar::to_string() const {
  if (kind == ScalarKind::prime_field) return std::to_string(value);
  return "w^" + std::to_string(value);
}

ScalarBackend ScalarBackend::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw ContractError("prime-field backend needs a prime modulus");
  if (p > (1u << 31)) throw ContractError("prime too large");
  return {ScalarKind::prime_field, p};
}

ScalarBackend ScalarBackend::roots_of_unity(std::uint32_t m) {
  if (m < 1) throw ContractError("root-of-unity order must be positive");
  return {ScalarKind::root_of_unity, m};
}

UnitScalar ScalarBackend::make(std::int64_t raw) const {
  const std::int64_t m = modulus;
  const auto v = static_cast<std::uint32_t>(((raw % m) + m) % m);
  if (kind == ScalarKind::prime_field && v == 0) throw ContractError("zero is not a unit");
  return {kind, modulus, v};
}

std::uint32_t ScalarBackend::unit_group_order() const {
  return kind == ScalarKind::prime_field ? modulus - 1 : modulus;
}

UnitScalar ScalarBackend::root(std::uint32_t order) const {
  const std::uint32_t u = unit_group_order();
  if (order == 0 || u % order != 0)
    throw ContractError("no root of unity of order " + std::to_string(order) + " in " +
                        to_string());
  if (kind == ScalarKind::prime_field)
    return {kind, modulus, powmod(smallest_primitive_root(modulus), u / order, modulus)};
  return {kind, modulus, (u / order) % modulus};
}

std::string ScalarBackend::to_string() const {
  return (kind == ScalarKind::prime_field ? "F_" : "mu_") + std::to_string(modulus);
}

}  // namespace polyadic
