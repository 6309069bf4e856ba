#include "polyadic/brackets.hpp"

#include <string>

#include "polyadic/algebra_laws.hpp"
#include "polyadic/errors.hpp"
#include "polyadic/scan.hpp"

namespace polyadic {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % p);
}

void require_binary_factor(const GradedAlgebra& alg, const FactorMap& f) {
  if (f.arity() != 2) throw ContractError("expected a 2-ary factor");
  if (!(f.group() == alg.group())) throw ContractError("factor over a different group");
}

std::uint32_t eval2(const GradedAlgebra& alg, const FactorMap& f, GroupElement x,
                    GroupElement y) {
  return alg.coefficient(f({x, y}));
}

VerificationReport single(std::string law, const GradedAlgebra& alg, const Element& lhs,
                          const Element& rhs) {
  VerificationReport r;
  r.law = std::move(law);
  r.domain = r.probes = 1;
  if (!(lhs == rhs)) {
    r.status = Status::fail;
    r.witness = Witness{{}, alg.to_string(lhs), alg.to_string(rhs)};
  }
  return r;
}

// eps0(x',y') xy - yx without any cross-check.
Element raw_L0(const GradedAlgebra& alg, const FactorMap& eps0, const Element& x,
               const Element& y) {
  const auto gx = alg.grade_of(x), gy = alg.grade_of(y);
  if (!gx || !gy) return alg.zero();
  return alg.sub(alg.scale(alg.mul({x, y}), eval2(alg, eps0, *gx, *gy)), alg.mul({y, x}));
}

std::vector<GroupElement> grade_matrix(const GradedAlgebra& alg, std::span<const Element> args,
                                       bool& any_zero) {
  std::vector<GroupElement> g;
  any_zero = false;
  for (const auto& e : args) {
    const auto ge = alg.grade_of(e);
    if (!ge) {
      any_zero = true;
      g.push_back(0);
    } else {
      g.push_back(*ge);
    }
  }
  return g;
}

template <class T>
std::vector<T> transposed(std::span<const T> xs, unsigned n) {
  std::vector<T> out(xs.begin(), xs.end());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) out[j * n + i] = xs[i * n + j];
  return out;
}

void require_matrix(const GradedAlgebra& alg, const FactorMap& rho, std::size_t args) {
  const unsigned n = alg.arity();
  if (args != static_cast<std::size_t>(n) * n) throw ContractError("expected n*n arguments");
  if (rho.arity() != n * n) throw ContractError("mediality factor must have arity n^2");
  if (!(rho.group() == alg.group())) throw ContractError("factor over a different group");
}

}  // namespace

Element lie_bracket_eps(const GradedAlgebra& alg, const FactorMap& eps, const Element& a,
                        const Element& b) {
  require_binary_factor(alg, eps);
  if (alg.arity() != 2) throw ContractError("brackets need a binary algebra");
  const auto ga = alg.grade_of(a), gb = alg.grade_of(b);
  if (!ga || !gb) return alg.zero();
  return alg.sub(alg.mul({a, b}), alg.scale(alg.mul({b, a}), eval2(alg, eps, *ga, *gb)));
}

BracketValue bracket_L0(const GradedAlgebra& alg, const FactorMap& eps0, const Element& a,
                        const Element& b) {
  require_binary_factor(alg, eps0);
  if (alg.arity() != 2) throw ContractError("brackets need a binary algebra");
  BracketValue out{raw_L0(alg, eps0, a, b), {}};
  const auto ga = alg.grade_of(a), gb = alg.grade_of(b);
  Element rhs = alg.zero();
  if (ga && gb)
    rhs = alg.scale(lie_bracket_eps(alg, convert_eps0_eps(eps0), a, b),
                    eval2(alg, eps0, *ga, *gb));
  out.cross_check = combine("L0-cross-check", {single("ll", alg, out.value, rhs)});
  return out;
}

VerificationReport check_ll_identity(const GradedAlgebra& alg, const FactorMap& eps0,
                                     const RunConfig& cfg) {
  require_binary_factor(alg, eps0);
  const std::uint32_t d = alg.dim();
  auto sides = [&](std::uint64_t i) {
    const auto a = alg.basis(static_cast<Basis>(i / d)), b = alg.basis(static_cast<Basis>(i % d));
    const auto ga = alg.grade(static_cast<Basis>(i / d)), gb = alg.grade(static_cast<Basis>(i % d));
    return std::pair{raw_L0(alg, eps0, a, b),
                     alg.scale(lie_bracket_eps(alg, convert_eps0_eps(eps0), a, b),
                               eval2(alg, eps0, ga, gb))};
  };
  auto make = [&] {
    return [&](std::uint64_t i) {
      const auto [l, r] = sides(i);
      return !(l == r);
    };
  };
  auto describe = [&](std::uint64_t i) {
    const auto [l, r] = sides(i);
    return Witness{{static_cast<std::int64_t>(i / d), static_cast<std::int64_t>(i % d)},
                   alg.to_string(l), alg.to_string(r)};
  };
  return detail::run_scan("ll", std::uint64_t{d} * d, cfg, make, describe);
}

VerificationReport check_eps_jacobi(const GradedAlgebra& alg, const FactorMap& eps0,
                                    const RunConfig& cfg) {
  require_binary_factor(alg, eps0);
  if (alg.arity() != 2) throw ContractError("brackets need a binary algebra");
  const std::uint32_t d = alg.dim();
  auto L = [&](const Element& x, const Element& y) { return raw_L0(alg, eps0, x, y); };
  auto e = [&](Basis x, Basis y) { return eval2(alg, eps0, alg.grade(x), alg.grade(y)); };

  auto j0 = [&](std::span<const Basis> t) {
    const Basis a = t[0], b = t[1], c = t[2];
    const auto A = alg.basis(a), B = alg.basis(b), C = alg.basis(c);
    Element s = alg.scale(L(L(A, B), C), e(c, a));
    s = alg.add(s, alg.scale(L(L(B, C), A), e(a, b)));
    s = alg.add(s, alg.scale(L(L(C, A), B), e(b, c)));
    return s;
  };
  auto j1 = [&](std::span<const Basis> t) {
    const Basis a = t[0], b = t[1], c = t[2], dd = t[3];
    const auto A = alg.basis(a), B = alg.basis(b), C = alg.basis(c), D = alg.basis(dd);
    Element s = alg.scale(L(L(A, B), L(C, D)), mulmod(e(c, b), e(dd, a), alg.p()));
    s = alg.add(s, alg.scale(L(L(B, C), L(D, A)), mulmod(e(dd, c), e(a, b), alg.p())));
    s = alg.add(s, alg.scale(L(L(C, D), L(A, B)), mulmod(e(a, dd), e(b, c), alg.p())));
    s = alg.add(s, alg.scale(L(L(D, A), L(B, C)), mulmod(e(b, a), e(c, dd), alg.p())));
    return s;
  };
  auto scan = [&](std::string law, unsigned k, auto sum) {
    auto make = [&] {
      return [&, t = std::vector<Basis>(k)](std::uint64_t i) mutable {
        detail::decode(i, d, t);
        return !sum(std::span<const Basis>(t)).is_zero();
      };
    };
    auto describe = [&](std::uint64_t i) {
      std::vector<Basis> t(k);
      detail::decode(i, d, t);
      return Witness{{t.begin(), t.end()}, alg.to_string(sum(std::span<const Basis>(t))), "0"};
    };
    return detail::run_scan(std::move(law), detail::checked_pow(d, k, cfg.budget + 1), cfg, make,
                            describe);
  };
  return combine("eps-jacobi", {scan("j0", 3, j0), scan("j1", 4, j1)});
}

BracketValue bracket_tower_L(const GradedAlgebra& alg, std::span<const FactorMap> factors,
                             unsigned k, const Element& a, const Element& b) {
  if (k < 1) throw ContractError("tower level must be at least 1");
  if (factors.size() < k + 1) throw ContractError("need factors eps_0..eps_k");
  for (const auto& f : factors) require_binary_factor(alg, f);
  const std::uint32_t p = alg.p();
  auto base = bracket_L0(alg, factors[0], a, b);
  const Element L0ab = base.value;
  Element x = L0ab, y = raw_L0(alg, factors[0], b, a);
  const auto ga = alg.grade_of(a), gb = alg.grade_of(b);
  std::vector<VerificationReport> checks = std::move(base.cross_check.children);
  if (!ga || !gb) {
    checks.push_back(skipped("L-unrolled", "zero argument"));
    return {alg.zero(), combine("L-tower-cross-check", std::move(checks))};
  }
  auto e = [&](unsigned i, GroupElement u, GroupElement v) {
    return eval2(alg, factors[i], u, v);
  };
  std::uint32_t cab = 1 % p, cba = 1 % p;
  for (unsigned i = 1; i <= k; ++i) {
    Element nx = alg.sub(alg.scale(x, e(i, *ga, *gb)), y);
    Element ny = alg.sub(alg.scale(y, e(i, *gb, *ga)), x);
    x = std::move(nx);
    y = std::move(ny);
    const std::uint32_t ncab = addmod(mulmod(e(i, *ga, *gb), cab, p), mulmod(cba, e(0, *gb, *ga), p), p);
    const std::uint32_t ncba = addmod(mulmod(e(i, *gb, *ga), cba, p), mulmod(cab, e(0, *ga, *gb), p), p);
    cab = ncab;
    cba = ncba;
    if (i == 1) {
      const std::uint32_t c1 = addmod(e(1, *ga, *gb), e(0, *gb, *ga), p);
      checks.push_back(single("L1-closed", alg, x, alg.scale(L0ab, c1)));
    }
    if (i == 2) {
      const std::uint32_t c1 = addmod(e(1, *ga, *gb), e(0, *gb, *ga), p);
      std::uint32_t c2 = mulmod(e(2, *ga, *gb), c1, p);
      c2 = addmod(c2, mulmod(e(1, *ga, *gb), e(0, *gb, *ga), p), p);
      c2 = addmod(c2, 1 % p, p);
      checks.push_back(single("L2-closed", alg, x, alg.scale(L0ab, c2)));
    }
  }
  checks.push_back(single("L-unrolled", alg, x, alg.scale(L0ab, cab)));
  return {x, combine("L-tower-cross-check", std::move(checks))};
}

Element medial_bracket_M0(const GradedAlgebra& alg, const FactorMap& rho0,
                          std::span<const Element> args) {
  require_matrix(alg, rho0, args.size());
  bool any_zero = false;
  const auto g = grade_matrix(alg, args, any_zero);
  if (any_zero) return alg.zero();
  const auto t = transposed(args, alg.arity());
  return alg.sub(alg.scale(matrix_product(alg, args), rho0(g)), matrix_product(alg, t));
}

VerificationReport check_medial_bracket_factor(const GradedAlgebra& alg, const FactorMap& rho0,
                                               const RunConfig& cfg) {
  const unsigned n = alg.arity();
  require_matrix(alg, rho0, static_cast<std::size_t>(n) * n);
  const std::uint32_t d = alg.dim();
  auto sides = [&](std::span<const Basis> t) {
    std::vector<Element> m;
    std::vector<GroupElement> g;
    for (auto b : t) {
      m.push_back(alg.basis(b));
      g.push_back(alg.grade(b));
    }
    const auto mt = transposed(std::span<const Element>(m), n);
    const UnitScalar factor = rho0(g).inverse().negated();
    return std::pair{alg.scale(medial_bracket_M0(alg, rho0, m), factor),
                     medial_bracket_M0(alg, rho0, mt)};
  };
  auto make = [&] {
    return [&, t = std::vector<Basis>(n * n)](std::uint64_t i) mutable {
      detail::decode(i, d, t);
      const auto [l, r] = sides(t);
      return !(l == r);
    };
  };
  auto describe = [&](std::uint64_t i) {
    std::vector<Basis> t(n * n);
    detail::decode(i, d, t);
    const auto [l, r] = sides(t);
    return Witness{{t.begin(), t.end()}, alg.to_string(l), alg.to_string(r)};
  };
  return detail::run_scan(n == 2 ? "M0" : "mm0", detail::checked_pow(d, n * n, cfg.budget + 1),
                          cfg, make, describe);
}

BracketValue bracket_tower_M(const GradedAlgebra& alg, std::span<const FactorMap> factors,
                             unsigned k, std::span<const Element> args) {
  if (k < 1) throw ContractError("tower level must be at least 1");
  if (factors.size() < k + 1) throw ContractError("need factors rho_0..rho_k");
  for (const auto& f : factors) require_matrix(alg, f, args.size());
  const unsigned n = alg.arity();
  const std::uint32_t p = alg.p();
  bool any_zero = false;
  const auto g = grade_matrix(alg, args, any_zero);
  if (any_zero)
    return {alg.zero(), combine("M-tower-cross-check", {skipped("M-unrolled", "zero argument")})};
  const auto gt = transposed(std::span<const GroupElement>(g), n);
  const auto at = transposed(args, n);
  const Element M0 = medial_bracket_M0(alg, factors[0], args);
  Element x = M0, y = medial_bracket_M0(alg, factors[0], at);
  auto r = [&](unsigned i, const std::vector<GroupElement>& gg) {
    return alg.coefficient(factors[i](gg));
  };
  std::uint32_t ca = 1 % p, ct = 1 % p;
  for (unsigned i = 1; i <= k; ++i) {
    Element nx = alg.sub(alg.scale(x, r(i, g)), y);
    Element ny = alg.sub(alg.scale(y, r(i, gt)), x);
    x = std::move(nx);
    y = std::move(ny);
    const std::uint32_t nca = addmod(mulmod(r(i, g), ca, p), mulmod(ct, r(0, gt), p), p);
    const std::uint32_t nct = addmod(mulmod(r(i, gt), ct, p), mulmod(ca, r(0, g), p), p);
    ca = nca;
    ct = nct;
  }
  return {x, combine("M-tower-cross-check", {single("M-unrolled", alg, x, alg.scale(M0, ca))})};
}

}  // namespace polyadic
