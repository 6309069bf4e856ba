#pragma once

#include "polyadic/config.hpp"
#include "polyadic/factor_map.hpp"
#include "polyadic/report.hpp"

namespace polyadic {

// e01, e02, e03 and the symmetric form e00, plus the consequences
// eps0(0,b) = 1 ("e0-unit") and eps0(a,a)^2 = 1 ("e0-square").
VerificationReport check_commutation_factor(const FactorMap& f, const RunConfig& cfg = {});

// s: sigma(a,b) sigma(a+b,c) = sigma(a,b+c) sigma(b,c).
VerificationReport check_cocycle(const FactorMap& f, const RunConfig& cfg = {});

// r01, raa, r02, r03 for a 4-ary factor.
VerificationReport check_mediality_factor4(const FactorMap& f, const RunConfig& cfg = {});

// rr: rho(A) rho(A^T) = 1 and rho(a,...,a) = 1 on n x n grade matrices.
// Exhaustive when |G|^(n^2) fits the budget, otherwise cfg.budget samples
// drawn from a generator seeded with cfg.seed.
VerificationReport check_nary_mediality_factor(const FactorMap& f, unsigned n,
                                               const RunConfig& cfg = {});

}  // namespace polyadic
