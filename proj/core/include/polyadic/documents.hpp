#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "polyadic/config.hpp"
#include "polyadic/factor_map.hpp"
#include "polyadic/graded_algebra.hpp"
#include "polyadic/nary_core.hpp"
#include "polyadic/report.hpp"
#include "polyadic/toyoda.hpp"

namespace polyadic {

// Insertion-ordered so emitted documents have a stable field order.
using Json = nlohmann::ordered_json;

// All readers throw ParseError on malformed input and on schema violations.
Json parse_document(const std::string& text);
std::string dump_document(const Json& doc);

// {"arity": n, "order": q, "table": nested arrays, last argument innermost}
Json op_to_json(const NaryOp& op);
NaryOp op_from_json(const Json& doc);

// {"group": [m...], "backend": {"kind": "prime-field"|"roots-of-unity",
// "modulus": m}, "kind": "bicharacter"|"table", "data": ...}. Bicharacter
// data is the exponent matrix; table data lists residues (prime field) or
// exponents (roots) in lexicographic domain order, with an optional
// "arity" (default 2).
Json factor_to_json(const FactorMap& f);
FactorMap factor_from_json(const Json& doc);
Json bicharacter_to_json(const AbelianGroup& g, const ExponentMatrix& e, const ScalarBackend& b);

// {"arity", "dim", "p", "group", "grades", "structure": [{"args", "out"}]}
// plus an optional "unit" basis index. Grades are dense element indices or
// component arrays.
Json algebra_to_json(const GradedAlgebra& alg);
GradedAlgebra algebra_from_json(const Json& doc);

// {"medial": true, "invariant_factors", "group", "phi", "psi", "maps", "c",
// "certificate": op document} or {"medial": false, "witness": ...}.
Json decomposition_to_json(const std::optional<LinearPresentation>& pres,
                           const VerificationReport& mediality);

Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& doc);

Json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const Json& doc);

}  // namespace polyadic
