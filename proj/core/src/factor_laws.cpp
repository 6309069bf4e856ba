#include "polyadic/factor_laws.hpp"

#include <random>

#include "polyadic/errors.hpp"
#include "polyadic/scan.hpp"

namespace polyadic {

namespace {

std::vector<std::int64_t> widen(std::span<const GroupElement> xs) {
  return {xs.begin(), xs.end()};
}

// Scan of G^k where `sides(x)` returns (lhs, rhs) for the law at tuple x.
template <class Sides>
VerificationReport law_scan(std::string law, const FactorMap& f, unsigned k,
                            const RunConfig& cfg, Sides sides) {
  const std::uint32_t base = f.group().size();
  auto make = [&] {
    return [&, x = std::vector<GroupElement>(k)](std::uint64_t i) mutable {
      detail::decode(i, base, x);
      const auto [l, r] = sides(x);
      return !(l == r);
    };
  };
  auto describe = [&](std::uint64_t i) {
    std::vector<GroupElement> x(k);
    detail::decode(i, base, x);
    const auto [l, r] = sides(x);
    return Witness{widen(x), l.to_string(), r.to_string()};
  };
  return detail::run_scan(std::move(law), detail::checked_pow(base, k, cfg.budget + 1), cfg, make,
                          describe);
}

void require_arity(const FactorMap& f, unsigned k) {
  if (f.arity() != k)
    throw ContractError("expected a " + std::to_string(k) + "-ary factor, got arity " +
                        std::to_string(f.arity()));
}

}  // namespace

VerificationReport check_commutation_factor(const FactorMap& f, const RunConfig& cfg) {
  require_arity(f, 2);
  const auto& g = f.group();
  const UnitScalar one = f.backend().one();
  using P = std::pair<UnitScalar, UnitScalar>;
  std::vector<VerificationReport> parts;
  parts.push_back(law_scan("e01", f, 2, cfg, [&](std::span<const GroupElement> x) {
    return P{f({x[0], x[1]}) * f({x[1], x[0]}), one};
  }));
  parts.push_back(law_scan("e02", f, 3, cfg, [&](std::span<const GroupElement> x) {
    return P{f({g.add(x[0], x[1]), x[2]}), f({x[0], x[2]}) * f({x[1], x[2]})};
  }));
  parts.push_back(law_scan("e03", f, 3, cfg, [&](std::span<const GroupElement> x) {
    return P{f({x[0], g.add(x[1], x[2])}), f({x[0], x[1]}) * f({x[0], x[2]})};
  }));
  parts.push_back(law_scan("e00", f, 4, cfg, [&](std::span<const GroupElement> x) {
    return P{f({g.add(x[0], x[1]), g.add(x[2], x[3])}),
             f({x[0], x[2]}) * f({x[1], x[2]}) * f({x[0], x[3]}) * f({x[1], x[3]})};
  }));
  parts.push_back(law_scan("e0-unit", f, 1, cfg, [&](std::span<const GroupElement> x) {
    return P{f({0, x[0]}), one};
  }));
  parts.push_back(law_scan("e0-square", f, 1, cfg, [&](std::span<const GroupElement> x) {
    const auto v = f({x[0], x[0]});
    return P{v * v, one};
  }));
  return combine("commutation-factor", std::move(parts));
}

VerificationReport check_cocycle(const FactorMap& f, const RunConfig& cfg) {
  require_arity(f, 2);
  const auto& g = f.group();
  return law_scan("s", f, 3, cfg, [&](std::span<const GroupElement> x) {
    return std::pair{f({x[0], x[1]}) * f({g.add(x[0], x[1]), x[2]}),
                     f({x[0], g.add(x[1], x[2])}) * f({x[1], x[2]})};
  });
}

VerificationReport check_mediality_factor4(const FactorMap& f, const RunConfig& cfg) {
  require_arity(f, 4);
  const auto& g = f.group();
  const UnitScalar one = f.backend().one();
  using P = std::pair<UnitScalar, UnitScalar>;
  std::vector<VerificationReport> parts;
  parts.push_back(law_scan("r01", f, 4, cfg, [&](std::span<const GroupElement> x) {
    return P{f({x[0], x[1], x[2], x[3]}) * f({x[0], x[2], x[1], x[3]}), one};
  }));
  parts.push_back(law_scan("raa", f, 1, cfg, [&](std::span<const GroupElement> x) {
    return P{f({x[0], x[0], x[0], x[0]}), one};
  }));
  // Seven-argument laws; tuple order (a,b,c,d,f,g,h).
  parts.push_back(law_scan("r02", f, 7, cfg, [&](std::span<const GroupElement> x) {
    const auto a = x[0], b = x[1], c = x[2], d = x[3], ff = x[4], gg = x[5], h = x[6];
    return P{f({a, g.add(g.add(c, d), g.add(ff, gg)), b, h}),
             f({a, c, b, d}) * f({c, d, b, ff}) * f({d, ff, b, gg}) * f({ff, gg, b, h})};
  }));
  parts.push_back(law_scan("r03", f, 7, cfg, [&](std::span<const GroupElement> x) {
    const auto a = x[0], b = x[1], c = x[2], d = x[3], ff = x[4], gg = x[5], h = x[6];
    return P{f({a, gg, g.add(g.add(b, c), g.add(d, ff)), h}),
             f({a, gg, b, c}) * f({c, gg, d, ff}) * f({d, gg, ff, h}) * f({b, gg, c, d})};
  }));
  return combine("mediality-factor", std::move(parts));
}

VerificationReport check_nary_mediality_factor(const FactorMap& f, unsigned n,
                                               const RunConfig& cfg) {
  require_arity(f, n * n);
  const std::uint32_t base = f.group().size();
  const UnitScalar one = f.backend().one();
  auto rr_sides = [&](std::span<const GroupElement> a, std::vector<GroupElement>& t) {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
    return std::pair{f(a) * f(t), one};
  };

  std::vector<VerificationReport> parts;
  const auto domain = detail::checked_pow(base, n * n, cfg.budget);
  if (domain) {
    auto make = [&] {
      return [&, a = std::vector<GroupElement>(n * n),
              t = std::vector<GroupElement>(n * n)](std::uint64_t i) mutable {
        detail::decode(i, base, a);
        const auto [l, r] = rr_sides(a, t);
        return !(l == r);
      };
    };
    auto describe = [&](std::uint64_t i) {
      std::vector<GroupElement> a(n * n), t(n * n);
      detail::decode(i, base, a);
      const auto [l, r] = rr_sides(a, t);
      return Witness{widen(a), l.to_string(), r.to_string()};
    };
    parts.push_back(detail::run_scan("rr", domain, cfg, make, describe));
  } else {
    VerificationReport r;
    r.law = "rr";
    r.seed = cfg.seed;
    r.domain = cfg.budget;
    r.note = "sampled";
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<GroupElement> pick(0, base - 1);
    std::vector<GroupElement> a(n * n), t(n * n);
    for (std::uint64_t s = 0; s < cfg.budget; ++s) {
      for (auto& x : a) x = pick(rng);
      ++r.probes;
      const auto [l, rhs] = rr_sides(a, t);
      if (!(l == rhs)) {
        r.status = Status::fail;
        r.witness = Witness{widen(a), l.to_string(), rhs.to_string()};
        break;
      }
    }
    parts.push_back(std::move(r));
  }
  parts.push_back(law_scan("rr-norm", f, 1, cfg, [&](std::span<const GroupElement> x) {
    const std::vector<GroupElement> diag(n * n, x[0]);
    return std::pair{f(diag), one};
  }));
  return combine("nary-mediality-factor", std::move(parts));
}

}  // namespace polyadic
