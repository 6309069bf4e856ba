#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polyadic/config.hpp"
#include "polyadic/factor_map.hpp"
#include "polyadic/graded_algebra.hpp"
#include "polyadic/nary_core.hpp"
#include "polyadic/report.hpp"

namespace polyadic {

// mu[x_1..x_n] = maps[0](x_1) + ... + maps[n-1](x_n) + c over an abelian
// group on the carrier 0..q-1 whose identity is label 0.
struct LinearPresentation {
  // Isomorphism type of the group, e.g. {2, 2} or {4}.
  std::vector<std::uint32_t> invariant_factors;
  // q*q addition table on carrier labels.
  std::vector<Label> group;
  std::vector<std::vector<Label>> maps;
  Label c = 0;

  std::uint32_t order() const { return static_cast<std::uint32_t>(maps.empty() ? 0 : maps[0].size()); }
  const std::vector<Label>& phi() const { return maps.at(0); }
  const std::vector<Label>& psi() const { return maps.at(1); }

  // Z_q with maps x -> m_i x.
  static LinearPresentation cyclic(std::uint32_t q, const std::vector<std::uint32_t>& multipliers,
                                   Label c);

  friend bool operator==(const LinearPresentation&, const LinearPresentation&) = default;
};

// Throws ContractError unless the group table is an abelian group with
// identity 0 and the maps are pairwise commuting automorphisms.
void validate(const LinearPresentation& pres);

NaryOp build_linear_quasigroup(const LinearPresentation& pres);

// Invariant-factor lists m_1 | m_2 | ... with product q, in lexicographic order.
std::vector<std::vector<std::uint32_t>> abelian_group_types(std::uint32_t q);

// Linear presentation reproducing `op`, or nullopt if `op` is not medial.
// The least candidate in (invariant factors, maps, c, group table) order is
// returned. Throws ContractError if `op` is not a quasigroup and
// BudgetExceeded for orders above max_order.
std::optional<LinearPresentation> toyoda_decompose(const NaryOp& op, const RunConfig& cfg = {},
                                                   std::uint32_t max_order = 6);

// mu_k[x_1..x_k] = phi_1(x_1) ... phi_k(x_k) h in the binary algebra `alg`
// (left-nested products), as a k-ary algebra with k = phis.size(). Throws
// ContractError if a map is not a grade-preserving algebra automorphism, if
// two maps fail to commute, or if h is not homogeneous.
GradedAlgebra theorem_product(const GradedAlgebra& alg, std::span<const BasisMap> phis,
                              const Element& h);

// Almost mediality of phi_1(a) phi_2(b) h with rho(a,b,c,d) = eps(b,c).
// `factor` overrides the factor; `basis_subset` restricts the scan. A child
// "cancellative" reports the basis-level hypothesis (skipped when unmet).
VerificationReport verify_theorem_binary(const GradedAlgebra& alg, const FactorMap& eps,
                                         const BasisMap& phi1, const BasisMap& phi2,
                                         const Element& h, const RunConfig& cfg = {},
                                         const FactorMap* factor = nullptr,
                                         std::span<const Basis> basis_subset = {});

// Ternary version with the six-factor rho^(9) built by ternary_theorem_factor.
VerificationReport verify_theorem_ternary(const GradedAlgebra& alg, const FactorMap& eps,
                                          const BasisMap& phi1, const BasisMap& phi2,
                                          const BasisMap& phi3, const Element& h,
                                          const RunConfig& cfg = {},
                                          const FactorMap* factor = nullptr,
                                          std::span<const Basis> basis_subset = {});

}  // namespace polyadic
