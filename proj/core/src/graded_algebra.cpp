#include "polyadic/graded_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "polyadic/errors.hpp"
#include "polyadic/scan.hpp"

namespace polyadic {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

}  // namespace

bool Element::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; });
}

GradedAlgebra::GradedAlgebra(unsigned arity, std::uint32_t dim, std::uint32_t p,
                             AbelianGroup group, std::vector<GroupElement> grades,
                             const std::vector<StructureEntry>& structure,
                             std::optional<Basis> unit)
    : arity_(arity),
      dim_(dim),
      p_(p),
      group_(std::move(group)),
      grades_(std::move(grades)),
      unit_(unit) {
  if (arity_ < 2) throw ContractError("algebra arity must be at least 2");
  if (dim_ < 1) throw ContractError("algebra dimension must be positive");
  if (!is_prime(p_)) throw ContractError("algebra scalars need a prime p");
  if (grades_.size() != dim_) throw ContractError("one grade per basis element required");
  for (auto g : grades_)
    if (g >= group_.size()) throw ContractError("grade outside the grading group");
  const auto size = detail::checked_pow(dim_, arity_, 1u << 22);
  if (!size) throw BudgetExceeded("structure constant table larger than 2^22 tuples");
  table_.assign(*size, {});
  for (const auto& e : structure) {
    if (e.args.size() != arity_) throw ContractError("structure entry with wrong arity");
    auto& slot = table_[tuple_index(e.args)];
    if (!slot.empty()) throw ContractError("duplicate structure entry");
    std::vector<std::uint32_t> acc(dim_, 0);
    for (const auto& t : e.out) {
      if (t.basis >= dim_) throw ContractError("structure output outside the basis");
      acc[t.basis] = (acc[t.basis] + t.coeff % p_) % p_;
    }
    for (Basis b = 0; b < dim_; ++b)
      if (acc[b]) slot.push_back({b, acc[b]});
  }
  if (unit_) {
    if (*unit_ >= dim_) throw ContractError("unit outside the basis");
    std::vector<Basis> args(arity_, *unit_);
    for (unsigned slot = 0; slot < arity_; ++slot)
      for (Basis a = 0; a < dim_; ++a) {
        std::fill(args.begin(), args.end(), *unit_);
        args[slot] = a;
        const auto& out = product(args);
        if (out.size() != 1 || out[0].basis != a || out[0].coeff != 1)
          throw ContractError("declared unit is not a unit");
      }
  }
}

std::uint64_t GradedAlgebra::tuple_index(std::span<const Basis> args) const {
  if (args.size() != arity_) throw ContractError("wrong number of arguments");
  std::uint64_t idx = 0;
  for (auto a : args) {
    if (a >= dim_) throw ContractError("basis index out of range");
    idx = idx * dim_ + a;
  }
  return idx;
}

const SparseVector& GradedAlgebra::product(std::span<const Basis> args) const {
  return table_[tuple_index(args)];
}

Element GradedAlgebra::zero() const { return Element{std::vector<std::uint32_t>(dim_, 0)}; }

Element GradedAlgebra::basis(Basis i) const {
  if (i >= dim_) throw ContractError("basis index out of range");
  auto e = zero();
  e.coeffs[i] = 1 % p_;
  return e;
}

Element GradedAlgebra::from_terms(const SparseVector& terms) const {
  auto e = zero();
  for (const auto& t : terms) e.coeffs.at(t.basis) = (e.coeffs.at(t.basis) + t.coeff) % p_;
  return e;
}

Element GradedAlgebra::mul_basis(std::span<const Basis> args) const {
  return from_terms(product(args));
}

Element GradedAlgebra::mul(std::span<const Element> args) const {
  if (args.size() != arity_) throw ContractError("wrong number of arguments");
  for (const auto& a : args)
    if (a.coeffs.size() != dim_) throw ContractError("element of another algebra");
  // Supports of the arguments; expand multilinearly over their product.
  std::vector<std::vector<Basis>> support(arity_);
  for (unsigned k = 0; k < arity_; ++k) {
    for (Basis b = 0; b < dim_; ++b)
      if (args[k].coeffs[b]) support[k].push_back(b);
    if (support[k].empty()) return zero();
  }
  auto out = zero();
  std::vector<std::size_t> pos(arity_, 0);
  std::vector<Basis> tuple(arity_);
  for (;;) {
    std::uint32_t c = 1 % p_;
    for (unsigned k = 0; k < arity_; ++k) {
      tuple[k] = support[k][pos[k]];
      c = mulmod(c, args[k].coeffs[tuple[k]], p_);
    }
    for (const auto& t : product(tuple))
      out.coeffs[t.basis] = (out.coeffs[t.basis] + mulmod(c, t.coeff, p_)) % p_;
    unsigned k = arity_;
    while (k > 0) {
      --k;
      if (++pos[k] < support[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
  }
}

Element GradedAlgebra::add(const Element& a, const Element& b) const {
  auto out = zero();
  for (Basis i = 0; i < dim_; ++i) out.coeffs[i] = (a.coeffs.at(i) + b.coeffs.at(i)) % p_;
  return out;
}

Element GradedAlgebra::sub(const Element& a, const Element& b) const {
  auto out = zero();
  for (Basis i = 0; i < dim_; ++i) out.coeffs[i] = (a.coeffs.at(i) + p_ - b.coeffs.at(i)) % p_;
  return out;
}

Element GradedAlgebra::scale(const Element& a, std::uint32_t c) const {
  auto out = zero();
  for (Basis i = 0; i < dim_; ++i) out.coeffs[i] = mulmod(a.coeffs.at(i), c % p_, p_);
  return out;
}

Element GradedAlgebra::scale(const Element& a, const UnitScalar& c) const {
  return scale(a, coefficient(c));
}

Element GradedAlgebra::neg(const Element& a) const { return scale(a, p_ - 1); }

std::uint32_t GradedAlgebra::coefficient(const UnitScalar& s) const {
  if (s.kind != ScalarKind::prime_field || s.modulus != p_)
    throw ContractError("factor values must live in F_" + std::to_string(p_));
  return s.value;
}

std::optional<GroupElement> GradedAlgebra::grade_of(const Element& a) const {
  std::optional<GroupElement> g;
  for (Basis i = 0; i < dim_; ++i) {
    if (!a.coeffs.at(i)) continue;
    if (g && *g != grades_[i]) throw ContractError("element is not homogeneous");
    g = grades_[i];
  }
  return g;
}

bool GradedAlgebra::is_homogeneous(const Element& a) const {
  std::optional<GroupElement> g;
  for (Basis i = 0; i < dim_; ++i) {
    if (!a.coeffs.at(i)) continue;
    if (g && *g != grades_[i]) return false;
    g = grades_[i];
  }
  return true;
}

std::vector<StructureEntry> GradedAlgebra::entries() const {
  std::vector<StructureEntry> out;
  std::vector<Basis> args(arity_);
  for (std::uint64_t i = 0; i < table_.size(); ++i) {
    if (table_[i].empty()) continue;
    detail::decode(i, dim_, args);
    out.push_back({args, table_[i]});
  }
  return out;
}

std::string GradedAlgebra::to_string(const Element& a) const {
  std::ostringstream os;
  bool first = true;
  for (Basis i = 0; i < dim_; ++i) {
    if (!a.coeffs.at(i)) continue;
    if (!first) os << "+";
    first = false;
    if (a.coeffs[i] != 1) os << a.coeffs[i] << "*";
    os << "e" << i;
  }
  return first ? "0" : os.str();
}

BasisMap BasisMap::identity(std::uint32_t dim) {
  BasisMap m;
  for (Basis i = 0; i < dim; ++i) m.perm.push_back(i);
  m.scale.assign(dim, 1);
  return m;
}

Element apply(const GradedAlgebra& alg, const BasisMap& f, const Element& a) {
  if (f.perm.size() != alg.dim() || f.scale.size() != alg.dim())
    throw ContractError("basis map has the wrong dimension");
  auto out = alg.zero();
  for (Basis i = 0; i < alg.dim(); ++i) {
    if (!a.coeffs.at(i)) continue;
    const Basis j = f.perm[i];
    out.coeffs.at(j) = static_cast<std::uint32_t>(
        (out.coeffs[j] + static_cast<std::uint64_t>(a.coeffs[i]) * f.scale[i]) % alg.p());
  }
  return out;
}

}  // namespace polyadic
