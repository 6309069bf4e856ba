#include "polyadic/factor_map.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "polyadic/errors.hpp"
#include "polyadic/scan.hpp"

namespace polyadic {

FactorMap::FactorMap(unsigned arity, AbelianGroup group, ScalarBackend backend, Rule rule,
                     std::string description)
    : arity_(arity),
      group_(std::move(group)),
      backend_(backend),
      rule_(std::move(rule)),
      description_(std::move(description)) {
  if (arity_ < 1) throw ContractError("factor arity must be positive");
  if (!rule_) throw ContractError("factor rule is empty");
}

FactorMap FactorMap::from_table(unsigned arity, AbelianGroup group, ScalarBackend backend,
                                std::vector<UnitScalar> values) {
  const auto size = detail::checked_pow(group.size(), arity, 1u << 22);
  if (!size) throw BudgetExceeded("factor table too large");
  if (values.size() != *size) throw ContractError("factor table has the wrong length");
  for (const auto& v : values)
    if (!backend.owns(v)) throw ContractError("factor table value from another backend");
  auto table = std::make_shared<const std::vector<UnitScalar>>(std::move(values));
  const std::uint32_t base = group.size();
  FactorMap f(
      arity, std::move(group), backend,
      [table, base](std::span<const GroupElement> args) {
        std::uint64_t idx = 0;
        for (auto a : args) idx = idx * base + a;
        return (*table)[idx];
      },
      "table");
  f.table_ = std::move(table);
  return f;
}

FactorMap FactorMap::constant(unsigned arity, AbelianGroup group, ScalarBackend backend,
                              UnitScalar value) {
  if (!backend.owns(value)) throw ContractError("constant from another backend");
  return FactorMap(
      arity, std::move(group), backend,
      [value](std::span<const GroupElement>) { return value; }, "constant");
}

UnitScalar FactorMap::operator()(std::span<const GroupElement> args) const {
  if (args.size() != arity_) throw ContractError("factor called with the wrong arity");
  for (auto a : args)
    if (a >= group_.size()) throw ContractError("factor argument outside the group");
  return rule_(args);
}

FactorMap FactorMap::tabulate() const {
  const auto size = detail::checked_pow(group_.size(), arity_, 1u << 22);
  if (!size) throw BudgetExceeded("factor table too large");
  std::vector<UnitScalar> values(*size);
  std::vector<GroupElement> args(arity_);
  for (std::uint64_t i = 0; i < *size; ++i) {
    detail::decode(i, group_.size(), args);
    values[i] = (*this)(args);
  }
  return from_table(arity_, group_, backend_, std::move(values));
}

FactorMap build_bicharacter(const AbelianGroup& g, const ExponentMatrix& e,
                            const ScalarBackend& backend) {
  const std::size_t r = g.rank();
  if (e.size() != r) throw ContractError("exponent matrix must be r x r");
  for (const auto& row : e)
    if (row.size() != r) throw ContractError("exponent matrix must be r x r");
  const std::uint32_t u = backend.unit_group_order();
  for (auto m : g.orders())
    if (u % m != 0)
      throw ContractError("cyclic order " + std::to_string(m) + " does not divide the order " +
                          std::to_string(u) + " of the unit group of " + backend.to_string());
  // zeta[i][j] has order gcd(m_i, m_j), so zeta^(a_i b_j) is well defined.
  std::vector<std::vector<UnitScalar>> zeta(r, std::vector<UnitScalar>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      zeta[i][j] = backend.root(std::gcd(g.orders()[i], g.orders()[j]));
  std::vector<UnitScalar> values(static_cast<std::size_t>(g.size()) * g.size());
  for (GroupElement a = 0; a < g.size(); ++a) {
    const auto ca = g.components(a);
    for (GroupElement b = 0; b < g.size(); ++b) {
      const auto cb = g.components(b);
      UnitScalar v = backend.one();
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          v = v * zeta[i][j].pow(e[i][j] * static_cast<std::int64_t>(ca[i]) *
                                 static_cast<std::int64_t>(cb[j]));
      values[static_cast<std::size_t>(a) * g.size() + b] = v;
    }
  }
  return FactorMap::from_table(2, g, backend, std::move(values));
}

FactorMap convert_eps0_eps(const FactorMap& f) {
  if (f.arity() != 2) throw ContractError("argument swap needs a 2-ary factor");
  return FactorMap(
      2, f.group(), f.backend(),
      [f](std::span<const GroupElement> x) { return f({x[1], x[0]}); }, "swap");
}

FactorMap bridge_factor(const FactorMap& eps) {
  if (eps.arity() != 2) throw ContractError("bridge factor needs a 2-ary factor");
  return FactorMap(
      4, eps.group(), eps.backend(),
      [eps](std::span<const GroupElement> x) { return eps({x[1], x[2]}); }, "bridge");
}

FactorMap derive_eps_from_rho(const FactorMap& rho) {
  if (rho.arity() != 4) throw ContractError("expected a 4-ary factor");
  const auto& g = rho.group();
  for (GroupElement a = 0; a < g.size(); ++a)
    for (GroupElement b = 0; b < g.size(); ++b)
      for (GroupElement c = 0; c < g.size(); ++c)
        for (GroupElement d = 0; d < g.size(); ++d)
          if (rho({a, b, c, d}) != rho({0, b, c, 0}))
            throw ContractError("factor depends on its outer arguments at (" + g.to_string(a) +
                                "," + g.to_string(b) + "," + g.to_string(c) + "," +
                                g.to_string(d) + "); no commutation factor");
  std::vector<UnitScalar> values;
  values.reserve(static_cast<std::size_t>(g.size()) * g.size());
  for (GroupElement b = 0; b < g.size(); ++b)
    for (GroupElement c = 0; c < g.size(); ++c) values.push_back(rho({0, b, c, 0}));
  return FactorMap::from_table(2, g, rho.backend(), std::move(values));
}

FactorMap transpose_pair_factor(const FactorMap& eps, unsigned n) {
  if (eps.arity() != 2) throw ContractError("expected a 2-ary factor");
  return FactorMap(
      n * n, eps.group(), eps.backend(),
      [eps, n](std::span<const GroupElement> a) {
        UnitScalar v = eps.backend().one();
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = i + 1; j < n; ++j) v = v * eps({a[i * n + j], a[j * n + i]});
        return v;
      },
      "transpose-pairs");
}

FactorMap medial_reorder_factor(const FactorMap& eps, unsigned n) {
  if (eps.arity() != 2) throw ContractError("expected a 2-ary factor");
  // Cell p = (i,j) sits at p in the row-major word and at j*n+i in the
  // transposed word.
  std::vector<std::pair<unsigned, unsigned>> inversions;
  for (unsigned p = 0; p < n * n; ++p)
    for (unsigned s = p + 1; s < n * n; ++s) {
      const unsigned tp = (p % n) * n + p / n, ts = (s % n) * n + s / n;
      if (ts < tp) inversions.emplace_back(p, s);
    }
  return FactorMap(
      n * n, eps.group(), eps.backend(),
      [eps, inversions](std::span<const GroupElement> a) {
        UnitScalar v = eps.backend().one();
        for (auto [x, y] : inversions) v = v * eps({a[x], a[y]});
        return v;
      },
      "medial-reorder");
}

namespace {

// Cells (row-major, 0-based) of the six factors.
constexpr std::array<std::pair<unsigned, unsigned>, 6> kTernaryPairs{{
    {1, 6},  // (a12, a31)
    {1, 3},  // (a12, a21)
    {2, 6},  // (a13, a31)
    {2, 7},  // (a13, a32)
    {5, 7},  // (a23, a32)
    {5, 6},  // (a23, a31)
}};

FactorMap ternary_from_pairs(const FactorMap& eps, std::vector<std::pair<unsigned, unsigned>> ps,
                             std::string description) {
  if (eps.arity() != 2) throw ContractError("expected a 2-ary factor");
  return FactorMap(
      9, eps.group(), eps.backend(),
      [eps, ps](std::span<const GroupElement> a) {
        UnitScalar v = eps.backend().one();
        for (auto [x, y] : ps) v = v * eps({a[x], a[y]});
        return v;
      },
      std::move(description));
}

}  // namespace

FactorMap ternary_theorem_factor(const FactorMap& eps) {
  return ternary_from_pairs(eps, {kTernaryPairs.begin(), kTernaryPairs.end()}, "r3");
}

FactorMap ternary_theorem_factor_without(const FactorMap& eps, unsigned dropped) {
  if (dropped >= kTernaryPairs.size()) throw ContractError("no such factor");
  std::vector<std::pair<unsigned, unsigned>> ps;
  for (unsigned k = 0; k < kTernaryPairs.size(); ++k)
    if (k != dropped) ps.push_back(kTernaryPairs[k]);
  return ternary_from_pairs(eps, std::move(ps), "r3-without-" + std::to_string(dropped));
}

FactorMap product(const FactorMap& f, const FactorMap& g) {
  if (f.arity() != g.arity() || !(f.group() == g.group()) || !(f.backend() == g.backend()))
    throw ContractError("factors of different shape");
  return FactorMap(
      f.arity(), f.group(), f.backend(),
      [f, g](std::span<const GroupElement> x) { return f(x) * g(x); }, "product");
}

FactorMap inverse(const FactorMap& f) {
  return FactorMap(
      f.arity(), f.group(), f.backend(),
      [f](std::span<const GroupElement> x) { return f(x).inverse(); }, "inverse");
}

FactorMap negate(const FactorMap& f) {
  f.backend().one().negated();  // rejects odd-order roots of unity up front
  return FactorMap(
      f.arity(), f.group(), f.backend(),
      [f](std::span<const GroupElement> x) { return f(x).negated(); }, "negate");
}

FactorMap transposed_arguments(const FactorMap& f, unsigned n) {
  if (f.arity() != n * n) throw ContractError("factor arity is not n*n");
  return FactorMap(
      f.arity(), f.group(), f.backend(),
      [f, n](std::span<const GroupElement> a) {
        std::vector<GroupElement> t(a.size());
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
        return f(t);
      },
      "transposed");
}

FactorMap with_entry(const FactorMap& f, std::vector<GroupElement> point, UnitScalar value) {
  if (point.size() != f.arity()) throw ContractError("point has the wrong arity");
  if (!f.backend().owns(value)) throw ContractError("value from another backend");
  return FactorMap(
      f.arity(), f.group(), f.backend(),
      [f, point, value](std::span<const GroupElement> x) {
        return std::equal(x.begin(), x.end(), point.begin()) ? value : f(x);
      },
      "mutated");
}

}  // namespace polyadic
