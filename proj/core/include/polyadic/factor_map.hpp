#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyadic/abelian_group.hpp"
#include "polyadic/scalar.hpp"

namespace polyadic {

// A unit-valued function on G^k. Small arities are stored as tables in
// lexicographic domain order; n^2-ary factors are rules composed from
// smaller factors and are never tabulated.
class FactorMap {
 public:
  using Rule = std::function<UnitScalar(std::span<const GroupElement>)>;

  FactorMap(unsigned arity, AbelianGroup group, ScalarBackend backend, Rule rule,
            std::string description = "rule");

  static FactorMap from_table(unsigned arity, AbelianGroup group, ScalarBackend backend,
                              std::vector<UnitScalar> values);
  static FactorMap constant(unsigned arity, AbelianGroup group, ScalarBackend backend,
                            UnitScalar value);

  unsigned arity() const { return arity_; }
  const AbelianGroup& group() const { return group_; }
  const ScalarBackend& backend() const { return backend_; }
  const std::string& description() const { return description_; }
  bool tabulated() const { return table_ != nullptr; }
  const std::vector<UnitScalar>* table() const { return table_.get(); }

  UnitScalar operator()(std::span<const GroupElement> args) const;
  UnitScalar operator()(std::initializer_list<GroupElement> args) const {
    return (*this)(std::span<const GroupElement>(args.begin(), args.size()));
  }

  // Materialize as a table; throws BudgetExceeded above 2^22 entries.
  FactorMap tabulate() const;

 private:
  unsigned arity_;
  AbelianGroup group_;
  ScalarBackend backend_;
  Rule rule_;
  std::shared_ptr<const std::vector<UnitScalar>> table_;
  std::string description_;
};

// Integer exponent matrix E (r x r) for a group of rank r.
using ExponentMatrix = std::vector<std::vector<std::int64_t>>;

// eps0(a,b) = prod_ij zeta_ij^(E_ij a_i b_j) with zeta_ij the backend's
// primitive root of order gcd(m_i, m_j); for a cyclic group this is
// w^(a E b). Throws ContractError if some m_i does not divide the backend's
// unit group order.
FactorMap build_bicharacter(const AbelianGroup& g, const ExponentMatrix& e,
                            const ScalarBackend& backend);

// f(a,b) -> f(b,a).
FactorMap convert_eps0_eps(const FactorMap& f);

// rho(a,b,c,d) = eps(b,c).
FactorMap bridge_factor(const FactorMap& eps);

// eps0(b,c) = rho(0,b,c,0); throws ContractError if rho depends on a or d.
FactorMap derive_eps_from_rho(const FactorMap& rho);

// prod_{i<j} eps(a_ij, a_ji) on n x n grade matrices.
FactorMap transpose_pair_factor(const FactorMap& eps, unsigned n);

// prod over pairs (x, y) with x before y in row-major order and y before x
// in column-major order of eps(x, y): the scalar an eps-commutative algebra
// picks up when a row-major word is reordered into the transposed word.
FactorMap medial_reorder_factor(const FactorMap& eps, unsigned n);

// The six-factor ternary mediality factor
// eps(a12,a31) eps(a12,a21) eps(a13,a31) eps(a13,a32) eps(a23,a32) eps(a23,a31).
FactorMap ternary_theorem_factor(const FactorMap& eps);

// Same six factors with the one at `dropped` (0..5) omitted.
FactorMap ternary_theorem_factor_without(const FactorMap& eps, unsigned dropped);

FactorMap product(const FactorMap& f, const FactorMap& g);
FactorMap inverse(const FactorMap& f);
// -f; prime-field backend (or even-order roots).
FactorMap negate(const FactorMap& f);
// f evaluated on the transpose of its n x n argument matrix.
FactorMap transposed_arguments(const FactorMap& f, unsigned n);
// f with a single domain point replaced by `value`.
FactorMap with_entry(const FactorMap& f, std::vector<GroupElement> point, UnitScalar value);

}  // namespace polyadic
