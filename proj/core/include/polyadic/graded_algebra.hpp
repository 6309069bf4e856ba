#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyadic/abelian_group.hpp"
#include "polyadic/scalar.hpp"

namespace polyadic {

using Basis = std::uint32_t;

struct Term {
  Basis basis;
  std::uint32_t coeff;
  friend bool operator==(const Term&, const Term&) = default;
};
using SparseVector = std::vector<Term>;

// Coefficient vector over F_p.
struct Element {
  std::vector<std::uint32_t> coeffs;
  bool is_zero() const;
  friend bool operator==(const Element&, const Element&) = default;
};

struct StructureEntry {
  std::vector<Basis> args;
  SparseVector out;
};

// n-ary algebra over F_p given by structure constants on a graded basis.
// Tuples missing from the structure list multiply to zero.
class GradedAlgebra {
 public:
  GradedAlgebra(unsigned arity, std::uint32_t dim, std::uint32_t p, AbelianGroup group,
                std::vector<GroupElement> grades, const std::vector<StructureEntry>& structure,
                std::optional<Basis> unit = std::nullopt);

  unsigned arity() const { return arity_; }
  std::uint32_t dim() const { return dim_; }
  std::uint32_t p() const { return p_; }
  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& grades() const { return grades_; }
  GroupElement grade(Basis i) const { return grades_.at(i); }
  std::optional<Basis> unit() const { return unit_; }
  ScalarBackend field() const { return ScalarBackend::prime_field(p_); }

  // Structure constant of a basis tuple.
  const SparseVector& product(std::span<const Basis> args) const;
  std::uint64_t tuple_index(std::span<const Basis> args) const;

  Element zero() const;
  Element basis(Basis i) const;
  Element from_terms(const SparseVector& terms) const;

  Element mul(std::span<const Element> args) const;
  Element mul(std::initializer_list<Element> args) const {
    return mul(std::span<const Element>(args.begin(), args.size()));
  }
  // Product of basis elements.
  Element mul_basis(std::span<const Basis> args) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(const Element& a, std::uint32_t c) const;
  Element scale(const Element& a, const UnitScalar& c) const;
  Element neg(const Element& a) const;

  // Converts a prime-field unit of this algebra's field to a coefficient.
  std::uint32_t coefficient(const UnitScalar& s) const;

  // Grade of a nonzero homogeneous element; nullopt for zero. Throws
  // ContractError if the element is not homogeneous.
  std::optional<GroupElement> grade_of(const Element& a) const;
  bool is_homogeneous(const Element& a) const;

  // Nonzero structure constants in tuple order.
  std::vector<StructureEntry> entries() const;

  std::string to_string(const Element& a) const;

 private:
  unsigned arity_;
  std::uint32_t dim_;
  std::uint32_t p_;
  AbelianGroup group_;
  std::vector<GroupElement> grades_;
  std::vector<SparseVector> table_;
  std::optional<Basis> unit_;
};

// e_i -> scale[i] * e_perm[i].
struct BasisMap {
  std::vector<Basis> perm;
  std::vector<std::uint32_t> scale;

  static BasisMap identity(std::uint32_t dim);
};

Element apply(const GradedAlgebra& alg, const BasisMap& f, const Element& a);

}  // namespace polyadic
