#include "polyadic/algebra_laws.hpp"

#include <string>

#include "polyadic/errors.hpp"
#include "polyadic/scan.hpp"

namespace polyadic {

namespace {

std::vector<std::int64_t> widen(std::span<const Basis> xs) { return {xs.begin(), xs.end()}; }

// Scan over k-tuples of basis indices drawn from `subset` (all of the basis
// when empty). `fails(t)` decides, `describe(t)` gives (lhs, rhs) text.
template <class Fails, class Describe>
VerificationReport basis_scan(std::string law, const GradedAlgebra& alg, unsigned k,
                              const RunConfig& cfg, Fails fails, Describe describe,
                              std::span<const Basis> subset = {}) {
  std::vector<Basis> pool(subset.begin(), subset.end());
  if (pool.empty())
    for (Basis b = 0; b < alg.dim(); ++b) pool.push_back(b);
  for (auto b : pool)
    if (b >= alg.dim()) throw ContractError("basis subset index out of range");
  const auto base = static_cast<std::uint64_t>(pool.size());
  auto fill = [&pool, base](std::uint64_t i, std::vector<Basis>& t) {
    for (std::size_t j = t.size(); j-- > 0;) {
      t[j] = pool[i % base];
      i /= base;
    }
  };
  auto make = [&] {
    return [&, t = std::vector<Basis>(k)](std::uint64_t i) mutable {
      fill(i, t);
      return fails(std::span<const Basis>(t));
    };
  };
  auto witness = [&](std::uint64_t i) {
    std::vector<Basis> t(k);
    fill(i, t);
    auto [l, r] = describe(std::span<const Basis>(t));
    return Witness{widen(t), std::move(l), std::move(r)};
  };
  return detail::run_scan(std::move(law), detail::checked_pow(base, k, cfg.budget + 1), cfg, make,
                          witness);
}

GroupElement grade_sum(const GradedAlgebra& alg, std::span<const Basis> t) {
  GroupElement g = 0;
  for (auto b : t) g = alg.group().add(g, alg.grade(b));
  return g;
}

// Every basis element in the support of `e` has grade `g`.
bool lands_in(const GradedAlgebra& alg, const Element& e, GroupElement g) {
  for (Basis b = 0; b < alg.dim(); ++b)
    if (e.coeffs[b] && alg.grade(b) != g) return false;
  return true;
}

std::vector<GroupElement> grades_of(const GradedAlgebra& alg, std::span<const Basis> t) {
  std::vector<GroupElement> out;
  out.reserve(t.size());
  for (auto b : t) out.push_back(alg.grade(b));
  return out;
}

Element basis_matrix_product(const GradedAlgebra& alg, std::span<const Basis> t) {
  const unsigned n = alg.arity();
  std::vector<Element> rows;
  rows.reserve(n);
  for (unsigned i = 0; i < n; ++i) rows.push_back(alg.mul_basis(t.subspan(i * n, n)));
  return alg.mul(rows);
}

std::vector<Basis> transpose(std::span<const Basis> t, unsigned n) {
  std::vector<Basis> out(t.size());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) out[j * n + i] = t[i * n + j];
  return out;
}

}  // namespace

Element matrix_product(const GradedAlgebra& alg, std::span<const Element> entries) {
  const unsigned n = alg.arity();
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw ContractError("matrix polyad needs n*n entries");
  std::vector<Element> rows;
  rows.reserve(n);
  for (unsigned i = 0; i < n; ++i) rows.push_back(alg.mul(entries.subspan(i * n, n)));
  return alg.mul(rows);
}

VerificationReport check_graded(const GradedAlgebra& alg, GradingKind kind, const RunConfig& cfg) {
  const unsigned n = alg.arity();
  if (kind == GradingKind::standard) {
    return basis_scan(
        n == 2 ? "maa" : "graded", alg, n, cfg,
        [&](std::span<const Basis> t) {
          return !lands_in(alg, alg.from_terms(alg.product(t)), grade_sum(alg, t));
        },
        [&](std::span<const Basis> t) {
          return std::pair{alg.to_string(alg.from_terms(alg.product(t))),
                           "grade " + alg.group().to_string(grade_sum(alg, t))};
        });
  }
  return basis_scan(
      n == 2 ? "m4a" : "higher-graded", alg, n * n, cfg,
      [&](std::span<const Basis> t) {
        return !lands_in(alg, basis_matrix_product(alg, t), grade_sum(alg, t));
      },
      [&](std::span<const Basis> t) {
        return std::pair{alg.to_string(basis_matrix_product(alg, t)),
                         "grade " + alg.group().to_string(grade_sum(alg, t))};
      });
}

VerificationReport check_associativity(const GradedAlgebra& alg, const RunConfig& cfg) {
  const unsigned n = alg.arity(), len = 2 * n - 1;
  auto placement = [&](std::span<const Basis> t, unsigned pos) {
    std::vector<Element> outer;
    for (unsigned k = 0; k < pos; ++k) outer.push_back(alg.basis(t[k]));
    outer.push_back(alg.mul_basis(t.subspan(pos, n)));
    for (unsigned k = pos + n; k < len; ++k) outer.push_back(alg.basis(t[k]));
    return alg.mul(outer);
  };
  auto first_bad = [&](std::span<const Basis> t) -> unsigned {
    const auto ref = placement(t, 0);
    for (unsigned pos = 1; pos < n; ++pos)
      if (!(placement(t, pos) == ref)) return pos;
    return 0;
  };
  const std::string law = n == 2 ? "assoc" : n == 4 ? "mm4" : "mass";
  return basis_scan(
      law, alg, len, cfg, [&](std::span<const Basis> t) { return first_bad(t) != 0; },
      [&](std::span<const Basis> t) {
        const unsigned pos = first_bad(t);
        return std::pair{"placement 0 = " + alg.to_string(placement(t, 0)),
                         "placement " + std::to_string(pos) + " = " +
                             alg.to_string(placement(t, pos))};
      });
}

GradedAlgebra twisted_product(const GradedAlgebra& alg, const FactorMap& tau,
                              const RunConfig& cfg) {
  const unsigned n = alg.arity();
  if (!(tau.group() == alg.group())) throw ContractError("twist over a different group");
  if (tau.arity() != n && tau.arity() != n * n)
    throw ContractError("twist arity must be n or n^2");
  if (!check_graded(alg, GradingKind::standard, cfg).passed())
    throw ContractError("twisted product needs a graded algebra");
  const unsigned out_arity = tau.arity();
  const auto count = detail::checked_pow(alg.dim(), out_arity, 1u << 22);
  if (!count) throw BudgetExceeded("twisted product table too large");
  std::vector<StructureEntry> structure;
  std::vector<Basis> t(out_arity);
  for (std::uint64_t i = 0; i < *count; ++i) {
    detail::decode(i, alg.dim(), t);
    const Element base =
        out_arity == n ? alg.mul_basis(t) : basis_matrix_product(alg, std::span<const Basis>(t));
    if (base.is_zero()) continue;
    const Element scaled = alg.scale(base, tau(grades_of(alg, t)));
    StructureEntry e{t, {}};
    for (Basis b = 0; b < alg.dim(); ++b)
      if (scaled.coeffs[b]) e.out.push_back({b, scaled.coeffs[b]});
    structure.push_back(std::move(e));
  }
  return GradedAlgebra(out_arity, alg.dim(), alg.p(), alg.group(), alg.grades(), structure);
}

VerificationReport check_almost_commutative(const GradedAlgebra& alg, const FactorMap& eps0,
                                            const RunConfig& cfg) {
  if (alg.arity() != 2) throw ContractError("almost commutativity needs a binary algebra");
  if (eps0.arity() != 2) throw ContractError("expected a 2-ary commutation factor");
  auto sides = [&](std::span<const Basis> t) {
    const Basis ba[2] = {t[1], t[0]};
    return std::pair{
        alg.scale(alg.mul_basis(t), eps0({alg.grade(t[0]), alg.grade(t[1])})),
        alg.mul_basis(ba)};
  };
  return basis_scan(
      "e0", alg, 2, cfg,
      [&](std::span<const Basis> t) {
        const auto [l, r] = sides(t);
        return !(l == r);
      },
      [&](std::span<const Basis> t) {
        const auto [l, r] = sides(t);
        return std::pair{alg.to_string(l), alg.to_string(r)};
      });
}

VerificationReport check_almost_medial(const GradedAlgebra& alg, const FactorMap& rho0,
                                       const RunConfig& cfg, std::span<const Basis> basis_subset) {
  const unsigned n = alg.arity();
  if (rho0.arity() != n * n) throw ContractError("mediality factor must have arity n^2");
  if (!(rho0.group() == alg.group())) throw ContractError("factor over a different group");
  auto sides = [&](std::span<const Basis> t) {
    const auto tt = transpose(t, n);
    return std::pair{alg.scale(basis_matrix_product(alg, t), rho0(grades_of(alg, t))),
                     basis_matrix_product(alg, tt)};
  };
  return basis_scan(
      n == 2 ? "r2" : "rn2", alg, n * n, cfg,
      [&](std::span<const Basis> t) {
        const auto [l, r] = sides(t);
        return !(l == r);
      },
      [&](std::span<const Basis> t) {
        const auto [l, r] = sides(t);
        return std::pair{alg.to_string(l), alg.to_string(r)};
      },
      basis_subset);
}

VerificationReport check_basis_cancellative(const GradedAlgebra& alg, const RunConfig& cfg) {
  const unsigned n = alg.arity();
  const std::uint32_t d = alg.dim();
  // Tuple layout: (slot, other arguments...). Slot is encoded as the first
  // coordinate, so the domain is n * d^(n-1) in lexicographic order.
  auto image = [&](unsigned slot, std::span<const Basis> others, Basis x) -> std::int64_t {
    std::vector<Basis> args(n);
    for (unsigned k = 0, o = 0; k < n; ++k) args[k] = (k == slot) ? x : others[o++];
    const auto& out = alg.product(args);
    if (out.size() != 1) return -1;
    return out[0].basis;
  };
  auto defect = [&](unsigned slot, std::span<const Basis> others) -> std::optional<std::pair<Basis, Basis>> {
    std::vector<std::int64_t> seen(d, -1);
    for (Basis x = 0; x < d; ++x) {
      const auto v = image(slot, others, x);
      if (v < 0) return std::pair{x, x};
      if (seen[static_cast<std::size_t>(v)] >= 0)
        return std::pair{static_cast<Basis>(seen[static_cast<std::size_t>(v)]), x};
      seen[static_cast<std::size_t>(v)] = x;
    }
    return std::nullopt;
  };
  const auto per_slot = detail::checked_pow(d, n - 1, cfg.budget + 1);
  std::optional<std::uint64_t> domain;
  if (per_slot) domain = *per_slot * n;
  const std::uint64_t ps = per_slot.value_or(1);
  auto make = [&] {
    return [&, others = std::vector<Basis>(n - 1)](std::uint64_t i) mutable {
      detail::decode(i % ps, d, others);
      return defect(static_cast<unsigned>(i / ps), others).has_value();
    };
  };
  auto describe = [&](std::uint64_t i) {
    std::vector<Basis> others(n - 1);
    const auto slot = static_cast<unsigned>(i / ps);
    detail::decode(i % ps, d, others);
    const auto [x, y] = *defect(slot, others);
    std::vector<std::int64_t> in{slot};
    in.insert(in.end(), others.begin(), others.end());
    if (x == y)
      return Witness{in, "basis " + std::to_string(x) + " -> not a single basis element",
                     "expected a unit multiple of a basis element"};
    return Witness{in, "basis " + std::to_string(x) + " -> e" + std::to_string(image(slot, others, x)),
                   "basis " + std::to_string(y) + " -> e" + std::to_string(image(slot, others, y))};
  };
  return detail::run_scan("cancellative", domain, cfg, make, describe);
}

std::optional<NaryOp> induced_magma(const GradedAlgebra& alg) {
  const unsigned n = alg.arity();
  const auto count = detail::checked_pow(alg.dim(), n, 1u << 22);
  if (!count) return std::nullopt;
  std::vector<Label> table(*count);
  std::vector<Basis> t(n);
  for (std::uint64_t i = 0; i < *count; ++i) {
    detail::decode(i, alg.dim(), t);
    const auto& out = alg.product(t);
    if (out.size() != 1 || out[0].coeff != 1) return std::nullopt;
    table[i] = out[0].basis;
  }
  return NaryOp(n, alg.dim(), std::move(table));
}

}  // namespace polyadic
