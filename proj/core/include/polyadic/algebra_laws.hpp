#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyadic/config.hpp"
#include "polyadic/factor_map.hpp"
#include "polyadic/graded_algebra.hpp"
#include "polyadic/nary_core.hpp"
#include "polyadic/report.hpp"

namespace polyadic {

enum class GradingKind {
  // each n-product lands in the grade sum of its arguments (maa)
  standard,
  // each full matrix-polyad product lands in the sum of its n^2 grades (m4a)
  higher,
};

VerificationReport check_graded(const GradedAlgebra& alg, GradingKind kind = GradingKind::standard,
                                const RunConfig& cfg = {});

// Binary: (ab)c = a(bc) on basis triples. n-ary: all n placements of the
// inner product agree on basis (2n-1)-tuples (law id "mm4" for arity 4).
VerificationReport check_associativity(const GradedAlgebra& alg, const RunConfig& cfg = {});

// tau of arity n rescales the n-ary product (mt); tau of arity n^2 yields
// the n^2-ary product tau(A') * (matrix-polyad product of A) (m4 for n=2).
GradedAlgebra twisted_product(const GradedAlgebra& alg, const FactorMap& tau,
                              const RunConfig& cfg = {});

// e0: eps0(a',b') ab = ba on basis pairs.
VerificationReport check_almost_commutative(const GradedAlgebra& alg, const FactorMap& eps0,
                                            const RunConfig& cfg = {});

// r2 / rn2: rho0(A') (row-major product of A) = (row-major product of A^T)
// on basis matrices, optionally restricted to a subset of the basis.
VerificationReport check_almost_medial(const GradedAlgebra& alg, const FactorMap& rho0,
                                       const RunConfig& cfg = {},
                                       std::span<const Basis> basis_subset = {});

// Basis-level cancellativity: every basis product is a unit multiple of a
// single basis element and each unary section is injective on the basis.
VerificationReport check_basis_cancellative(const GradedAlgebra& alg, const RunConfig& cfg = {});

// The finite magma on basis indices when every basis product is exactly
// one basis element with coefficient 1.
std::optional<NaryOp> induced_magma(const GradedAlgebra& alg);

// Row-major matrix-polyad product mu[mu[row 1], ..., mu[row n]].
Element matrix_product(const GradedAlgebra& alg, std::span<const Element> entries);

}  // namespace polyadic
