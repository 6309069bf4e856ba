#include "polyadic/documents.hpp"

#include "polyadic/errors.hpp"

namespace polyadic {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) bad("expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T as(const Json& v, const char* what) {
  if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) bad(std::string(what) + ": expected a string");
    return v.get<std::string>();
  } else if constexpr (std::is_same_v<T, bool>) {
    if (!v.is_boolean()) bad(std::string(what) + ": expected a boolean");
    return v.get<bool>();
  } else if constexpr (std::is_signed_v<T>) {
    if (!v.is_number_integer()) bad(std::string(what) + ": expected an integer");
    return v.get<T>();
  } else {
    if (!v.is_number_unsigned()) bad(std::string(what) + ": expected a non-negative integer");
    const auto x = v.get<std::uint64_t>();
    if (x > std::numeric_limits<T>::max()) bad(std::string(what) + ": value out of range");
    return static_cast<T>(x);
  }
}

template <class T>
std::vector<T> as_vector(const Json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + ": expected an array");
  std::vector<T> out;
  for (const auto& x : v) out.push_back(as<T>(x, what));
  return out;
}

void flatten_table(const Json& v, unsigned depth, std::uint32_t q, std::vector<Label>& out) {
  if (depth == 0) {
    out.push_back(as<Label>(v, "table entry"));
    return;
  }
  if (!v.is_array() || v.size() != q) bad("table: expected nested arrays of length order");
  for (const auto& x : v) flatten_table(x, depth - 1, q, out);
}

Json nest_table(const std::vector<Label>& t, std::size_t& pos, unsigned depth, std::uint32_t q) {
  if (depth == 0) return t[pos++];
  Json a = Json::array();
  for (std::uint32_t i = 0; i < q; ++i) a.push_back(nest_table(t, pos, depth - 1, q));
  return a;
}

ScalarBackend backend_from_json(const Json& doc) {
  const auto kind = as<std::string>(field(doc, "kind"), "backend.kind");
  const auto m = as<std::uint32_t>(field(doc, "modulus"), "backend.modulus");
  try {
    if (kind == "prime-field") return ScalarBackend::prime_field(m);
    if (kind == "roots-of-unity") return ScalarBackend::roots_of_unity(m);
  } catch (const ContractError& e) {
    bad(std::string("backend: ") + e.what());
  }
  bad("backend.kind must be prime-field or roots-of-unity");
}

Json backend_to_json(const ScalarBackend& b) {
  Json j;
  j["kind"] = b.kind == ScalarKind::prime_field ? "prime-field" : "roots-of-unity";
  j["modulus"] = b.modulus;
  return j;
}

GroupElement grade_from_json(const AbelianGroup& g, const Json& v) {
  if (v.is_array()) {
    const auto c = as_vector<std::int64_t>(v, "grade");
    if (c.size() != g.rank()) bad("grade: component count differs from group rank");
    return g.from_components(c);
  }
  const auto x = as<std::uint32_t>(v, "grade");
  if (x >= g.size()) bad("grade: index out of range");
  return x;
}

Json grade_to_json(const AbelianGroup& g, GroupElement a) {
  if (g.rank() == 1) return a;
  Json c = Json::array();
  for (auto x : g.components(a)) c.push_back(x);
  return c;
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["input"] = w.input;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  return j;
}

}  // namespace

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json op_to_json(const NaryOp& op) {
  Json j;
  j["arity"] = op.arity();
  j["order"] = op.order();
  std::size_t pos = 0;
  j["table"] = nest_table(op.table(), pos, op.arity(), op.order());
  return j;
}

NaryOp op_from_json(const Json& doc) {
  const auto n = as<unsigned>(field(doc, "arity"), "arity");
  const auto q = as<std::uint32_t>(field(doc, "order"), "order");
  if (n < 2) bad("arity must be at least 2");
  if (q < 1) bad("order must be positive");
  std::vector<Label> table;
  flatten_table(field(doc, "table"), n, q, table);
  try {
    return NaryOp(n, q, std::move(table));
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json bicharacter_to_json(const AbelianGroup& g, const ExponentMatrix& e, const ScalarBackend& b) {
  Json j;
  j["group"] = g.orders();
  j["backend"] = backend_to_json(b);
  j["kind"] = "bicharacter";
  j["data"] = e;
  return j;
}

Json factor_to_json(const FactorMap& f) {
  const FactorMap t = f.tabulated() ? f : f.tabulate();
  Json j;
  j["group"] = f.group().orders();
  j["backend"] = backend_to_json(f.backend());
  j["kind"] = "table";
  j["arity"] = f.arity();
  Json data = Json::array();
  for (const auto& s : *t.table()) data.push_back(s.value);
  j["data"] = std::move(data);
  return j;
}

FactorMap factor_from_json(const Json& doc) {
  const AbelianGroup g(as_vector<std::uint32_t>(field(doc, "group"), "group"));
  for (auto m : g.orders())
    if (m == 0) bad("group: cyclic orders must be positive");
  const ScalarBackend b = backend_from_json(field(doc, "backend"));
  const auto kind = as<std::string>(field(doc, "kind"), "kind");
  const Json& data = field(doc, "data");
  try {
    if (kind == "bicharacter") {
      if (!data.is_array() || data.size() != g.rank()) bad("data: expected an r x r exponent matrix");
      ExponentMatrix e;
      for (const auto& row : data) {
        e.push_back(as_vector<std::int64_t>(row, "data"));
        if (e.back().size() != g.rank()) bad("data: expected an r x r exponent matrix");
      }
      return build_bicharacter(g, e, b);
    }
    if (kind == "table") {
      unsigned arity = 2;
      if (doc.contains("arity")) arity = as<unsigned>(doc["arity"], "arity");
      if (arity < 1 || arity > 8) bad("arity out of range");
      const auto raw = as_vector<std::int64_t>(data, "data");
      std::uint64_t expect = 1;
      for (unsigned i = 0; i < arity; ++i) expect *= g.size();
      if (raw.size() != expect) bad("data: table length must be |G|^arity");
      std::vector<UnitScalar> values;
      for (auto x : raw) values.push_back(b.make(x));
      return FactorMap::from_table(arity, g, b, std::move(values));
    }
  } catch (const ContractError& e) {
    bad(e.what());
  }
  bad("kind must be bicharacter or table");
}

Json algebra_to_json(const GradedAlgebra& alg) {
  Json j;
  j["arity"] = alg.arity();
  j["dim"] = alg.dim();
  j["p"] = alg.p();
  j["group"] = alg.group().orders();
  Json grades = Json::array();
  for (auto g : alg.grades()) grades.push_back(grade_to_json(alg.group(), g));
  j["grades"] = std::move(grades);
  if (alg.unit()) j["unit"] = *alg.unit();
  Json structure = Json::array();
  for (const auto& e : alg.entries()) {
    Json s;
    s["args"] = e.args;
    Json out = Json::array();
    for (const auto& t : e.out) out.push_back(Json::array({t.basis, t.coeff}));
    s["out"] = std::move(out);
    structure.push_back(std::move(s));
  }
  j["structure"] = std::move(structure);
  return j;
}

GradedAlgebra algebra_from_json(const Json& doc) {
  const auto n = as<unsigned>(field(doc, "arity"), "arity");
  const auto d = as<std::uint32_t>(field(doc, "dim"), "dim");
  const auto p = as<std::uint32_t>(field(doc, "p"), "p");
  const AbelianGroup g(as_vector<std::uint32_t>(field(doc, "group"), "group"));
  for (auto m : g.orders())
    if (m == 0) bad("group: cyclic orders must be positive");
  const Json& gj = field(doc, "grades");
  if (!gj.is_array() || gj.size() != d) bad("grades: expected dim entries");
  std::vector<GroupElement> grades;
  for (const auto& x : gj) grades.push_back(grade_from_json(g, x));
  std::vector<StructureEntry> structure;
  const Json& sj = field(doc, "structure");
  if (!sj.is_array()) bad("structure: expected an array");
  for (const auto& s : sj) {
    StructureEntry e;
    e.args = as_vector<Basis>(field(s, "args"), "structure.args");
    const Json& out = field(s, "out");
    if (!out.is_array()) bad("structure.out: expected an array");
    for (const auto& t : out) {
      if (!t.is_array() || t.size() != 2) bad("structure.out: expected [basis, coeff] pairs");
      e.out.push_back({as<Basis>(t[0], "basis"), as<std::uint32_t>(t[1], "coeff")});
    }
    structure.push_back(std::move(e));
  }
  std::optional<Basis> unit;
  if (doc.contains("unit")) unit = as<Basis>(doc["unit"], "unit");
  try {
    return GradedAlgebra(n, d, p, g, std::move(grades), structure, unit);
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json decomposition_to_json(const std::optional<LinearPresentation>& pres,
                           const VerificationReport& mediality) {
  Json j;
  j["medial"] = pres.has_value();
  if (!pres) {
    if (mediality.witness) j["witness"] = witness_to_json(*mediality.witness);
    return j;
  }
  const auto q = pres->order();
  j["invariant_factors"] = pres->invariant_factors;
  Json group = Json::array();
  for (std::uint32_t a = 0; a < q; ++a)
    group.push_back(std::vector<Label>(pres->group.begin() + a * q, pres->group.begin() + (a + 1) * q));
  j["group"] = std::move(group);
  if (pres->maps.size() == 2) {
    j["phi"] = pres->phi();
    j["psi"] = pres->psi();
  }
  j["maps"] = pres->maps;
  j["c"] = pres->c;
  j["certificate"] = op_to_json(build_linear_quasigroup(*pres));
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["law"] = r.law;
  j["status"] = std::string(to_string(r.status));
  j["probes"] = r.probes;
  j["domain"] = r.domain;
  if (r.seed) j["seed"] = *r.seed;
  if (r.witness) j["witness"] = witness_to_json(*r.witness);
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.facts.empty()) {
    Json f = Json::object();
    for (const auto& [k, v] : r.facts) f[k] = v;
    j["facts"] = std::move(f);
  }
  if (!r.children.empty()) {
    Json c = Json::array();
    for (const auto& ch : r.children) c.push_back(report_to_json(ch));
    j["children"] = std::move(c);
  }
  return j;
}

VerificationReport report_from_json(const Json& doc) {
  VerificationReport r;
  r.law = as<std::string>(field(doc, "law"), "law");
  const auto status = as<std::string>(field(doc, "status"), "status");
  if (status == "pass") r.status = Status::pass;
  else if (status == "fail") r.status = Status::fail;
  else if (status == "skipped") r.status = Status::skipped;
  else if (status == "budget-exceeded") r.status = Status::budget_exceeded;
  else bad("status: unknown value " + status);
  r.probes = as<std::uint64_t>(field(doc, "probes"), "probes");
  r.domain = as<std::uint64_t>(field(doc, "domain"), "domain");
  if (doc.contains("seed")) r.seed = as<std::uint64_t>(doc["seed"], "seed");
  if (doc.contains("witness")) {
    const Json& w = doc["witness"];
    r.witness = Witness{as_vector<std::int64_t>(field(w, "input"), "witness.input"),
                        as<std::string>(field(w, "lhs"), "witness.lhs"),
                        as<std::string>(field(w, "rhs"), "witness.rhs")};
  }
  if (doc.contains("note")) r.note = as<std::string>(doc["note"], "note");
  if (doc.contains("facts")) {
    const Json& f = doc["facts"];
    if (!f.is_object()) bad("facts: expected an object");
    for (auto it = f.begin(); it != f.end(); ++it)
      r.facts.emplace_back(it.key(), as<std::string>(it.value(), "facts"));
  }
  if (doc.contains("children")) {
    const Json& c = doc["children"];
    if (!c.is_array()) bad("children: expected an array");
    for (const auto& ch : c) r.children.push_back(report_from_json(ch));
  }
  if (r.status == Status::fail && !r.witness && r.children.empty())
    bad("a failing leaf report must carry a witness");
  return r;
}

Json config_to_json(const RunConfig& cfg) {
  Json j;
  j["budget"] = cfg.budget;
  j["jobs"] = cfg.jobs;
  j["seed"] = cfg.seed;
  return j;
}

RunConfig config_from_json(const Json& doc) {
  RunConfig cfg;
  if (doc.contains("budget")) cfg.budget = as<std::uint64_t>(doc["budget"], "budget");
  if (doc.contains("jobs")) cfg.jobs = as<unsigned>(doc["jobs"], "jobs");
  if (doc.contains("seed")) cfg.seed = as<std::uint64_t>(doc["seed"], "seed");
  if (cfg.budget == 0) bad("budget must be positive");
  if (cfg.jobs == 0) bad("jobs must be positive");
  return cfg;
}

}  // namespace polyadic
