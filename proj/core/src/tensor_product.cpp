#include "polyadic/tensor_product.hpp"

#include <string>

#include "polyadic/algebra_laws.hpp"
#include "polyadic/errors.hpp"
#include "polyadic/scan.hpp"

namespace polyadic {

namespace {

struct Layout {
  std::vector<std::uint32_t> dims;
  std::uint32_t total = 1;

  std::vector<Basis> split(Basis i) const {
    std::vector<Basis> out(dims.size());
    for (std::size_t j = dims.size(); j-- > 0;) {
      out[j] = i % dims[j];
      i /= dims[j];
    }
    return out;
  }
  Basis join(std::span<const Basis> parts) const {
    Basis i = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) i = i * dims[j] + parts[j];
    return i;
  }
};

class Builder {
 public:
  Builder(std::span<const GradedAlgebra> algs, const FactorMap& factor)
      : algs_(algs), factor_(factor), n_(algs[0].arity()) {
    for (const auto& a : algs_) {
      layout_.dims.push_back(a.dim());
      if (static_cast<std::uint64_t>(layout_.total) * a.dim() > (1u << 22))
        throw BudgetExceeded("tensor product dimension too large");
      layout_.total *= a.dim();
    }
  }

  const Layout& layout() const { return layout_; }

  std::vector<GroupElement> grade_matrix(std::span<const Basis> inputs) const {
    std::vector<GroupElement> b(static_cast<std::size_t>(n_) * n_);
    for (unsigned r = 0; r < n_; ++r) {
      const auto parts = layout_.split(inputs[r]);
      for (unsigned j = 0; j < n_; ++j) b[r * n_ + j] = algs_[j].grade(parts[j]);
    }
    return b;
  }

  UnitScalar factor_at(std::span<const Basis> inputs) const {
    const auto b = grade_matrix(inputs);
    if (factor_.arity() == 2) return factor_({b[1], b[n_]});
    return factor_(b);
  }

  // Tensor of the column products, unscaled, as a sparse vector.
  SparseVector column_tensor(std::span<const Basis> inputs) const {
    const std::uint32_t p = algs_[0].p();
    std::vector<std::vector<Basis>> parts;
    for (unsigned r = 0; r < n_; ++r) parts.push_back(layout_.split(inputs[r]));
    SparseVector acc{{0, 1 % p}};
    std::vector<Basis> column(n_);
    for (unsigned j = 0; j < n_; ++j) {
      for (unsigned r = 0; r < n_; ++r) column[r] = parts[r][j];
      const auto& out = algs_[j].product(column);
      SparseVector next;
      for (const auto& t : acc)
        for (const auto& u : out)
          next.push_back({t.basis * layout_.dims[j] + u.basis,
                          static_cast<std::uint32_t>(std::uint64_t{t.coeff} * u.coeff % p)});
      acc = std::move(next);
      if (acc.empty()) break;
    }
    return acc;
  }

 private:
  std::span<const GradedAlgebra> algs_;
  const FactorMap& factor_;
  unsigned n_;
  Layout layout_;
};

}  // namespace

TensorProduct tensor_product_graded(std::span<const GradedAlgebra> algs, const FactorMap& factor,
                                    const RunConfig& cfg) {
  if (algs.empty()) throw ContractError("tensor product of no algebras");
  const unsigned n = algs[0].arity();
  if (algs.size() != n) throw ContractError("tensor product needs exactly n algebras");
  for (const auto& a : algs) {
    if (a.arity() != n) throw ContractError("mismatched arity");
    if (a.p() != algs[0].p()) throw ContractError("mismatched scalar field");
    if (!(a.group() == algs[0].group())) throw ContractError("mismatched grading group");
  }
  if (!(factor.group() == algs[0].group())) throw ContractError("factor over a different group");
  if (factor.arity() == 2 && n != 2) throw ContractError("a 2-ary factor needs binary algebras");
  if (factor.arity() != 2 && factor.arity() != n * n)
    throw ContractError("factor must have arity 2 or n^2");
  if (factor.backend().kind != ScalarKind::prime_field ||
      factor.backend().modulus != algs[0].p())
    throw ContractError("factor must take values in the algebras' field");

  Builder builder(algs, factor);
  const Layout& layout = builder.layout();
  const std::uint32_t p = algs[0].p();
  const auto tuples = detail::checked_pow(layout.total, n, std::uint64_t{1} << 22);
  if (!tuples) throw BudgetExceeded("tensor product structure table too large");

  std::vector<GroupElement> grades(layout.total);
  std::vector<std::vector<Basis>> components(layout.total);
  for (Basis i = 0; i < layout.total; ++i) {
    components[i] = layout.split(i);
    GroupElement g = 0;
    for (unsigned j = 0; j < n; ++j) g = algs[0].group().add(g, algs[j].grade(components[i][j]));
    grades[i] = g;
  }

  std::vector<StructureEntry> structure;
  std::vector<Basis> t(n);
  for (std::uint64_t i = 0; i < *tuples; ++i) {
    detail::decode(i, layout.total, t);
    auto out = builder.column_tensor(t);
    if (out.empty()) continue;
    const std::uint32_t s = algs[0].coefficient(builder.factor_at(t).inverse());
    for (auto& term : out) term.coeff = static_cast<std::uint32_t>(std::uint64_t{term.coeff} * s % p);
    structure.push_back({t, std::move(out)});
  }
  GradedAlgebra product(n, layout.total, p, algs[0].group(), std::move(grades), structure);

  std::vector<VerificationReport> checks;

  // Defining relation: factor(B) * mu*[x_1..x_n] equals the column tensor.
  {
    auto sides = [&](std::span<const Basis> x) {
      const Element lhs =
          product.scale(product.mul_basis(x), algs[0].coefficient(builder.factor_at(x)));
      return std::pair{lhs, product.from_terms(builder.column_tensor(x))};
    };
    auto make = [&] {
      return [&, x = std::vector<Basis>(n)](std::uint64_t i) mutable {
        detail::decode(i, layout.total, x);
        const auto [l, r] = sides(x);
        return !(l == r);
      };
    };
    auto describe = [&](std::uint64_t i) {
      std::vector<Basis> x(n);
      detail::decode(i, layout.total, x);
      const auto [l, r] = sides(x);
      return Witness{{x.begin(), x.end()}, product.to_string(l), product.to_string(r)};
    };
    checks.push_back(detail::run_scan("rb", tuples, cfg, make, describe));
  }

  bool all_assoc = true;
  for (const auto& a : algs) all_assoc = all_assoc && check_associativity(a, cfg).status == Status::pass;
  if (all_assoc) {
    auto r = check_associativity(product, cfg);
    r.law = "abe-assoc";
    checks.push_back(std::move(r));
  } else {
    checks.push_back(skipped("abe-assoc", "a component is not associative"));
  }

  if (factor.arity() == 2) {
    bool all_comm = true;
    for (const auto& a : algs)
      all_comm = all_comm && check_almost_commutative(a, factor, cfg).status == Status::pass;
    if (all_comm) {
      auto r = check_almost_commutative(product, factor, cfg);
      r.law = "em";
      checks.push_back(std::move(r));
    } else {
      checks.push_back(skipped("em", "a component is not eps0-commutative"));
    }
    checks.push_back(skipped("rm-medial", "factor is 2-ary"));
  } else {
    bool all_medial = true;
    for (const auto& a : algs)
      all_medial = all_medial && check_almost_medial(a, factor, cfg).status == Status::pass;
    if (all_medial) {
      auto r = check_almost_medial(product, factor, cfg);
      r.law = "rm-medial";
      checks.push_back(std::move(r));
    } else {
      checks.push_back(skipped("rm-medial", "a component is not rho0-medial"));
    }
  }

  return {std::move(product), std::move(components), combine("tensor-product", std::move(checks))};
}

}  // namespace polyadic
