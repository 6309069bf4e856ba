#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "polyadic.hpp"

namespace fixtures {

using namespace polyadic;

inline NaryOp sum_mod(unsigned n, std::uint32_t m, std::uint32_t shift = 0) {
  return NaryOp::from_function(n, m, [=](std::span<const Label> a) {
    std::uint64_t s = shift;
    for (auto x : a) s += x;
    return static_cast<Label>(s % m);
  });
}

inline NaryOp binary(std::uint32_t q, Label (*f)(Label, Label, std::uint32_t)) {
  return NaryOp::from_function(2, q, [=](std::span<const Label> a) { return f(a[0], a[1], q); });
}

inline NaryOp linear_mod(std::uint32_t q, std::uint32_t x, std::uint32_t y, std::uint32_t c) {
  return NaryOp::from_function(2, q, [=](std::span<const Label> a) {
    return static_cast<Label>((x * a[0] + y * a[1] + c) % q);
  });
}

inline NaryOp subtraction_mod(std::uint32_t q) {
  return NaryOp::from_function(2, q, [=](std::span<const Label> a) { return (a[0] + q - a[1]) % q; });
}

inline NaryOp product_mod(std::uint32_t q) {
  return NaryOp::from_function(2, q, [=](std::span<const Label> a) { return a[0] * a[1] % q; });
}

// S3 as maps on {0,1,2}, labels 0=e 1=(12) 2=(13) 3=(23) 4=(123) 5=(132),
// (st)(x) = s(t(x)).
inline const std::vector<std::vector<unsigned>>& s3_perms() {
  static const std::vector<std::vector<unsigned>> p{{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                                    {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  return p;
}

inline NaryOp s3() {
  const auto& p = s3_perms();
  return NaryOp::from_function(2, 6, [&](std::span<const Label> a) {
    std::vector<unsigned> c(3);
    for (unsigned x = 0; x < 3; ++x) c[x] = p[a[0]][p[a[1]][x]];
    return static_cast<Label>(std::find(p.begin(), p.end(), c) - p.begin());
  });
}

// Exterior algebra on `gens` generators over F_p, basis = subsets in
// binary-counting order, Z2 grading by parity.
inline GradedAlgebra grassmann(unsigned gens, std::uint32_t p = 3) {
  const std::uint32_t d = 1u << gens;
  std::vector<GroupElement> grades(d);
  for (std::uint32_t s = 0; s < d; ++s) grades[s] = __builtin_popcount(s) % 2;
  std::vector<StructureEntry> st;
  for (std::uint32_t a = 0; a < d; ++a)
    for (std::uint32_t b = 0; b < d; ++b) {
      if (a & b) continue;
      unsigned swaps = 0;
      for (unsigned i = 0; i < gens; ++i)
        if (b & (1u << i)) swaps += __builtin_popcount(a >> (i + 1));
      st.push_back({{a, b}, {{a | b, swaps % 2 ? p - 1 : 1}}});
    }
  return GradedAlgebra(2, d, p, AbelianGroup({2}), grades, st, 0);
}

// Basis 1, t1, t2, t1t2 as in the usual presentation.
inline GradedAlgebra grassmann2() { return grassmann(2); }

inline FactorMap super_sign(std::uint32_t p = 3) {
  return build_bicharacter(AbelianGroup({2}), {{1}}, ScalarBackend::prime_field(p));
}

inline FactorMap trivial_factor(unsigned arity, const AbelianGroup& g, std::uint32_t p) {
  const auto b = ScalarBackend::prime_field(p);
  return FactorMap::constant(arity, g, b, b.one());
}

// Group algebra F_p[Z_m] with trivial grading.
inline GradedAlgebra group_algebra(std::uint32_t m, std::uint32_t p) {
  std::vector<StructureEntry> st;
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) st.push_back({{a, b}, {{(a + b) % m, 1}}});
  return GradedAlgebra(2, m, p, AbelianGroup(), std::vector<GroupElement>(m, 0), st, 0);
}

// F_p[x]/(x^d), graded by degree mod g (g = 1 for trivial grading).
inline GradedAlgebra truncated_poly(std::uint32_t d, std::uint32_t p, std::uint32_t g) {
  std::vector<StructureEntry> st;
  std::vector<GroupElement> grades(d);
  for (std::uint32_t a = 0; a < d; ++a) {
    grades[a] = g > 1 ? a % g : 0;
    for (std::uint32_t b = 0; a + b < d; ++b) st.push_back({{a, b}, {{a + b, 1}}});
  }
  return GradedAlgebra(2, d, p, g > 1 ? AbelianGroup({g}) : AbelianGroup(), grades, st, 0);
}

inline std::vector<Element> basis_of(const GradedAlgebra& alg) {
  std::vector<Element> out;
  for (Basis b = 0; b < alg.dim(); ++b) out.push_back(alg.basis(b));
  return out;
}

// F_p[a,b]/(a^2, b^2) with a, b odd: basis 1, a, b, ab.
inline GradedAlgebra dual_numbers2(std::uint32_t p = 3) {
  std::vector<StructureEntry> st;
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y)
      if (!(x & y)) st.push_back({{x, y}, {{x | y, 1}}});
  return GradedAlgebra(2, 4, p, AbelianGroup({2}), {0, 1, 1, 0}, st, 0);
}

// 2x2 matrices over F_p, basis E11 E12 E21 E22, off-diagonal entries odd.
inline GradedAlgebra matrix_superalgebra(std::uint32_t p = 3) {
  std::vector<StructureEntry> st;
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y)
      if ((x & 1) == (y >> 1)) st.push_back({{x, y}, {{(x & 2) | (y & 1), 1}}});
  return GradedAlgebra(2, 4, p, AbelianGroup({2}), {0, 1, 1, 0}, st);
}

// F_p[Z_m] graded by Z_m.
inline GradedAlgebra graded_group_algebra(std::uint32_t m, std::uint32_t p) {
  std::vector<StructureEntry> st;
  std::vector<GroupElement> grades;
  for (std::uint32_t a = 0; a < m; ++a) {
    grades.push_back(a);
    for (std::uint32_t b = 0; b < m; ++b) st.push_back({{a, b}, {{(a + b) % m, 1}}});
  }
  return GradedAlgebra(2, m, p, AbelianGroup({m}), grades, st, 0);
}

inline FactorMap table2(const AbelianGroup& g, std::uint32_t p, const std::vector<std::int64_t>& raw) {
  const auto b = ScalarBackend::prime_field(p);
  std::vector<UnitScalar> v;
  for (auto x : raw) v.push_back(b.make(x));
  return FactorMap::from_table(2, g, b, v);
}

}  // namespace fixtures
