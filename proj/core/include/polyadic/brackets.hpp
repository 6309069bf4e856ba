#pragma once

#include <span>
#include <vector>

#include "polyadic/config.hpp"
#include "polyadic/factor_map.hpp"
#include "polyadic/graded_algebra.hpp"
#include "polyadic/report.hpp"

namespace polyadic {

// A bracket value together with the identities cross-checked while computing it.
struct BracketValue {
  Element value;
  VerificationReport cross_check;
};

// ab - eps(a',b') ba. Inputs must be homogeneous (zero is allowed).
Element lie_bracket_eps(const GradedAlgebra& alg, const FactorMap& eps, const Element& a,
                        const Element& b);

// L0 = eps0(a',b') ab - ba, cross-checked against eps0(a',b') [a,b]_eps with
// eps(x,y) = eps0(y,x) (law "ll").
BracketValue bracket_L0(const GradedAlgebra& alg, const FactorMap& eps0, const Element& a,
                        const Element& b);

// "ll" on every pair of basis elements.
VerificationReport check_ll_identity(const GradedAlgebra& alg, const FactorMap& eps0,
                                     const RunConfig& cfg = {});

// j0 on basis triples and j1 on basis quadruples.
VerificationReport check_eps_jacobi(const GradedAlgebra& alg, const FactorMap& eps0,
                                    const RunConfig& cfg = {});

// L_k = eps_k(a',b') L_{k-1}(a,b) - L_{k-1}(b,a) with factors[i] = eps_i.
// Cross-checks: "ll"; "L-unrolled" (coefficient recursion, valid under e01);
// "L1-closed"; "L2-closed" in the closed form with eps1(a',b') eps0(b',a').
BracketValue bracket_tower_L(const GradedAlgebra& alg, std::span<const FactorMap> factors,
                             unsigned k, const Element& a, const Element& b);

// M0(A) = rho0(A') (row-major product of A) - (row-major product of A^T),
// for an n x n matrix of homogeneous elements (the quadruple a,b,c,d when n=2).
Element medial_bracket_M0(const GradedAlgebra& alg, const FactorMap& rho0,
                          std::span<const Element> args);

// (-rho0(A')^{-1}) M0(A) = M0(A^T) on basis matrices ("M0"; "mm0" for n > 2).
VerificationReport check_medial_bracket_factor(const GradedAlgebra& alg, const FactorMap& rho0,
                                               const RunConfig& cfg = {});

// M_k(A) = rho_k(A') M_{k-1}(A) - M_{k-1}(A^T), cross-checked against the
// unrolled form c_k(A) M0(A) (valid when rho0 satisfies rr).
BracketValue bracket_tower_M(const GradedAlgebra& alg, std::span<const FactorMap> factors,
                             unsigned k, std::span<const Element> args);

}  // namespace polyadic
