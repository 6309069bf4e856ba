#include "polyadic/toyoda.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "polyadic/abelian_group.hpp"
#include "polyadic/algebra_laws.hpp"
#include "polyadic/errors.hpp"

namespace polyadic {

namespace {

struct CarrierGroup {
  std::uint32_t q;
  const std::vector<Label>& table;

  Label add(Label a, Label b) const { return table[a * q + b]; }
  Label neg(Label a) const {
    for (Label x = 0; x < q; ++x)
      if (add(a, x) == 0) return x;
    throw ContractError("group element without inverse");
  }
  Label sub(Label a, Label b) const { return add(a, neg(b)); }
};

bool is_abelian_group(std::uint32_t q, const std::vector<Label>& t) {
  if (t.size() != static_cast<std::size_t>(q) * q) return false;
  for (Label a = 0; a < q; ++a) {
    if (t[a] != a || t[a * q] != a) return false;
    bool has_inverse = false;
    for (Label b = 0; b < q; ++b) {
      if (t[a * q + b] >= q || t[a * q + b] != t[b * q + a]) return false;
      has_inverse = has_inverse || t[a * q + b] == 0;
      for (Label c = 0; c < q; ++c)
        if (t[t[a * q + b] * q + c] != t[a * q + t[b * q + c]]) return false;
    }
    if (!has_inverse) return false;
  }
  return true;
}

bool is_automorphism(const CarrierGroup& g, const std::vector<Label>& f) {
  if (f.size() != g.q) return false;
  std::vector<bool> seen(g.q, false);
  for (auto v : f) {
    if (v >= g.q || seen[v]) return false;
    seen[v] = true;
  }
  for (Label a = 0; a < g.q; ++a)
    for (Label b = 0; b < g.q; ++b)
      if (f[g.add(a, b)] != g.add(f[a], f[b])) return false;
  return true;
}

void append_types(std::uint32_t rest, std::uint32_t smallest, std::vector<std::uint32_t>& prefix,
                  std::vector<std::vector<std::uint32_t>>& out) {
  if (rest == 1) {
    out.push_back(prefix);
    return;
  }
  for (std::uint32_t m = std::max<std::uint32_t>(smallest, 2); m <= rest; ++m) {
    if (rest % m) continue;
    if (!prefix.empty() && m % prefix.back()) continue;
    prefix.push_back(m);
    append_types(rest / m, m, prefix, out);
    prefix.pop_back();
  }
}

void validate_map(const GradedAlgebra& alg, const BasisMap& f) {
  const std::uint32_t d = alg.dim();
  if (f.perm.size() != d || f.scale.size() != d) throw ContractError("basis map has the wrong dimension");
  std::vector<bool> seen(d, false);
  for (Basis i = 0; i < d; ++i) {
    const Basis j = f.perm[i];
    if (j >= d || seen[j]) throw ContractError("basis map is not a permutation");
    seen[j] = true;
    if (f.scale[i] % alg.p() == 0) throw ContractError("basis map has a zero scale");
    if (alg.grade(j) != alg.grade(i)) throw ContractError("basis map is not grade preserving");
  }
  for (Basis i = 0; i < d; ++i)
    for (Basis j = 0; j < d; ++j) {
      const Basis t[] = {i, j};
      const auto lhs = apply(alg, f, alg.mul_basis(t));
      const auto rhs = alg.mul({apply(alg, f, alg.basis(i)), apply(alg, f, alg.basis(j))});
      if (!(lhs == rhs)) throw ContractError("basis map is not an algebra automorphism");
    }
}

VerificationReport verify_theorem(const GradedAlgebra& alg, const FactorMap& eps,
                                  std::span<const BasisMap> phis, const Element& h,
                                  const RunConfig& cfg, const FactorMap& factor,
                                  std::span<const Basis> subset, std::string law) {
  if (eps.arity() != 2) throw ContractError("expected a 2-ary commutation factor");
  if (!(eps.group() == alg.group())) throw ContractError("factor over a different group");
  const GradedAlgebra mu = theorem_product(alg, phis, h);

  std::vector<VerificationReport> children;
  auto canc = check_basis_cancellative(alg, cfg);
  if (canc.status == Status::fail) {
    children.push_back(skipped("cancellative", "hypothesis not met on the basis; conclusion checked directly"));
    children.back().witness = canc.witness;
  } else {
    canc.law = "cancellative";
    children.push_back(std::move(canc));
  }
  children.push_back(check_almost_medial(mu, factor, cfg, subset));
  auto r = combine(std::move(law), std::move(children));
  r.facts.emplace_back("factor", factor.description());
  return r;
}

}  // namespace

LinearPresentation LinearPresentation::cyclic(std::uint32_t q,
                                              const std::vector<std::uint32_t>& multipliers,
                                              Label c) {
  if (q == 0) throw ContractError("empty carrier");
  LinearPresentation p;
  if (q > 1) p.invariant_factors = {q};
  p.group.resize(static_cast<std::size_t>(q) * q);
  for (Label a = 0; a < q; ++a)
    for (Label b = 0; b < q; ++b) p.group[a * q + b] = (a + b) % q;
  for (auto m : multipliers) {
    std::vector<Label> f(q);
    for (Label a = 0; a < q; ++a) f[a] = static_cast<Label>(std::uint64_t{m} * a % q);
    p.maps.push_back(std::move(f));
  }
  p.c = c % q;
  return p;
}

void validate(const LinearPresentation& pres) {
  if (pres.maps.size() < 2) throw ContractError("a presentation needs at least two maps");
  const std::uint32_t q = pres.order();
  if (q == 0) throw ContractError("empty carrier");
  if (!is_abelian_group(q, pres.group)) throw ContractError("group table is not an abelian group with identity 0");
  if (pres.c >= q) throw ContractError("constant out of range");
  const CarrierGroup g{q, pres.group};
  for (const auto& f : pres.maps)
    if (!is_automorphism(g, f)) throw ContractError("map is not a group automorphism");
  for (std::size_t i = 0; i < pres.maps.size(); ++i)
    for (std::size_t j = i + 1; j < pres.maps.size(); ++j)
      for (Label a = 0; a < q; ++a)
        if (pres.maps[i][pres.maps[j][a]] != pres.maps[j][pres.maps[i][a]])
          throw ContractError("maps do not commute");
}

NaryOp build_linear_quasigroup(const LinearPresentation& pres) {
  validate(pres);
  const CarrierGroup g{pres.order(), pres.group};
  const auto n = static_cast<unsigned>(pres.maps.size());
  return NaryOp::from_function(n, pres.order(), [&](std::span<const Label> x) {
    Label s = pres.c;
    for (unsigned i = 0; i < n; ++i) s = g.add(s, pres.maps[i][x[i]]);
    return s;
  });
}

std::vector<std::vector<std::uint32_t>> abelian_group_types(std::uint32_t q) {
  std::vector<std::vector<std::uint32_t>> out;
  if (q == 0) return out;
  std::vector<std::uint32_t> prefix;
  append_types(q, 2, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<LinearPresentation> toyoda_decompose(const NaryOp& op, const RunConfig& cfg,
                                                   std::uint32_t max_order) {
  const std::uint32_t q = op.order();
  if (q > max_order) throw BudgetExceeded("carrier order above the decomposition budget");
  if (check_quasigroup(op, cfg).status != Status::pass)
    throw ContractError("decomposition needs a quasigroup");
  if (check_mediality(op, cfg).status != Status::pass) return std::nullopt;

  const unsigned n = op.arity();
  std::optional<LinearPresentation> best;
  auto key = [](const LinearPresentation& p) {
    return std::tie(p.invariant_factors, p.maps, p.c, p.group);
  };
  for (const auto& type : abelian_group_types(q)) {
    const AbelianGroup abstract(type);
    std::vector<Label> label(q);  // abstract element -> carrier label
    std::iota(label.begin(), label.end(), 0);
    std::set<std::vector<Label>> seen;
    do {
      std::vector<Label> table(static_cast<std::size_t>(q) * q);
      for (GroupElement a = 0; a < q; ++a)
        for (GroupElement b = 0; b < q; ++b) table[label[a] * q + label[b]] = label[abstract.add(a, b)];
      if (!seen.insert(table).second) continue;
      const CarrierGroup g{q, table};

      LinearPresentation cand;
      cand.invariant_factors = type;
      std::vector<Label> args(n, 0);
      cand.c = op(args);
      for (unsigned i = 0; i < n; ++i) {
        std::vector<Label> f(q);
        for (Label a = 0; a < q; ++a) {
          args[i] = a;
          f[a] = g.sub(op(args), cand.c);
        }
        args[i] = 0;
        cand.maps.push_back(std::move(f));
      }
      bool ok = true;
      for (const auto& f : cand.maps) ok = ok && is_automorphism(g, f);
      cand.group = std::move(table);
      if (!ok) continue;
      try {
        if (!(build_linear_quasigroup(cand) == op)) continue;
      } catch (const ContractError&) {
        continue;
      }
      if (!best || key(cand) < key(*best)) best = std::move(cand);
    } while (std::next_permutation(label.begin() + (q > 0 ? 1 : 0), label.end()));
  }
  return best;
}

GradedAlgebra theorem_product(const GradedAlgebra& alg, std::span<const BasisMap> phis,
                              const Element& h) {
  if (alg.arity() != 2) throw ContractError("theorem products need a binary algebra");
  if (phis.size() < 2) throw ContractError("need at least two maps");
  for (const auto& f : phis) validate_map(alg, f);
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (std::size_t j = i + 1; j < phis.size(); ++j)
      for (Basis b = 0; b < alg.dim(); ++b) {
        const auto e = alg.basis(b);
        if (!(apply(alg, phis[i], apply(alg, phis[j], e)) == apply(alg, phis[j], apply(alg, phis[i], e))))
          throw ContractError("maps do not commute");
      }
  (void)alg.grade_of(h);  // throws if h is not homogeneous

  const auto k = static_cast<unsigned>(phis.size());
  std::vector<StructureEntry> structure;
  std::vector<Basis> t(k, 0);
  while (true) {
    Element acc = apply(alg, phis[0], alg.basis(t[0]));
    for (unsigned i = 1; i < k; ++i) acc = alg.mul({acc, apply(alg, phis[i], alg.basis(t[i]))});
    acc = alg.mul({acc, h});
    if (!acc.is_zero()) {
      SparseVector out;
      for (Basis b = 0; b < alg.dim(); ++b)
        if (acc.coeffs[b]) out.push_back({b, acc.coeffs[b]});
      structure.push_back({t, std::move(out)});
    }
    unsigned pos = k;
    while (pos > 0 && ++t[pos - 1] == alg.dim()) t[--pos] = 0;
    if (pos == 0) break;
  }
  return GradedAlgebra(k, alg.dim(), alg.p(), alg.group(), alg.grades(), structure);
}

VerificationReport verify_theorem_binary(const GradedAlgebra& alg, const FactorMap& eps,
                                         const BasisMap& phi1, const BasisMap& phi2,
                                         const Element& h, const RunConfig& cfg,
                                         const FactorMap* factor,
                                         std::span<const Basis> basis_subset) {
  const BasisMap phis[] = {phi1, phi2};
  const FactorMap rho = factor ? *factor : bridge_factor(eps);
  return verify_theorem(alg, eps, phis, h, cfg, rho, basis_subset, "theorem-binary");
}

VerificationReport verify_theorem_ternary(const GradedAlgebra& alg, const FactorMap& eps,
                                          const BasisMap& phi1, const BasisMap& phi2,
                                          const BasisMap& phi3, const Element& h,
                                          const RunConfig& cfg, const FactorMap* factor,
                                          std::span<const Basis> basis_subset) {
  const BasisMap phis[] = {phi1, phi2, phi3};
  const FactorMap rho = factor ? *factor : ternary_theorem_factor(eps);
  return verify_theorem(alg, eps, phis, h, cfg, rho, basis_subset, "theorem-ternary");
}

}  // namespace polyadic
