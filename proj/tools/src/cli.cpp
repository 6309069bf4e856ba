#include "polyadic_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polyadic.hpp"

namespace polyadic::cli {

namespace {

struct Options {
  std::string format = "json";
  std::uint64_t budget = RunConfig{}.budget;
  std::uint64_t seed = RunConfig{}.seed;
  unsigned jobs = 1;
  std::string suite = "full";

  RunConfig config() const { return RunConfig{budget, jobs, seed}; }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code(const VerificationReport& r) {
  switch (r.status) {
    case Status::fail: return exit_fail;
    case Status::budget_exceeded: return exit_budget;
    default: return exit_pass;
  }
}

int emit(const Options& o, std::ostream& out, Json header, const VerificationReport& r) {
  if (o.format == "text") {
    out << to_text(r);
  } else {
    header["config"] = config_to_json(o.config());
    header["report"] = report_to_json(r);
    out << dump_document(header);
  }
  return exit_code(r);
}

// --- verify ---------------------------------------------------------------

VerificationReport verify_op(const NaryOp& op, const std::string& suite, const RunConfig& cfg) {
  std::vector<VerificationReport> parts;
  const bool full = suite == "full";
  if (full || suite == "quasigroup") parts.push_back(check_quasigroup(op, cfg));
  if (full || suite == "cancellative") parts.push_back(check_cancellative(op, cfg));
  if (full || suite == "associativity") parts.push_back(check_total_associativity(op, cfg));
  if (full || suite == "mediality") parts.push_back(check_mediality(op, cfg));
  if (suite == "groupal") {
    try {
      parts.push_back(check_groupal_model(SkeletalGroupModel(op, cfg)));
    } catch (const ContractError& e) {
      parts.push_back(skipped("groupal-model", std::string("not-applicable: ") + e.what()));
    }
  }
  if (parts.empty()) throw UsageError("unknown suite '" + suite + "' for an operation table");
  if (parts.size() == 1) return parts.front();
  return combine(suite, std::move(parts));
}

VerificationReport verify_factor(const FactorMap& f, const std::string& suite, const RunConfig& cfg) {
  std::vector<VerificationReport> parts;
  const bool full = suite == "full";
  if (f.arity() == 2) {
    if (full || suite == "commutation") parts.push_back(check_commutation_factor(f, cfg));
    if (full || suite == "cocycle") parts.push_back(check_cocycle(f, cfg));
    if (full || suite == "bridge") parts.push_back(check_mediality_factor4(bridge_factor(f), cfg));
  } else if (f.arity() == 4) {
    if (full || suite == "mediality4") parts.push_back(check_mediality_factor4(f, cfg));
  } else {
    unsigned n = 2;
    while (n * n < f.arity()) ++n;
    if (n * n == f.arity() && (full || suite == "mediality"))
      parts.push_back(check_nary_mediality_factor(f, n, cfg));
  }
  if (parts.empty())
    throw UsageError("suite '" + suite + "' does not apply to a factor of arity " +
                     std::to_string(f.arity()));
  if (parts.size() == 1) return parts.front();
  return combine(suite, std::move(parts));
}

VerificationReport verify_algebra(const GradedAlgebra& alg, const std::optional<FactorMap>& eps,
                                  const std::string& suite, const RunConfig& cfg) {
  std::vector<VerificationReport> parts;
  const bool full = suite == "full";
  auto needs_factor = [&](const std::string& law) {
    parts.push_back(skipped(law, "no --factor document given"));
  };
  if (full || suite == "graded") parts.push_back(check_graded(alg, GradingKind::standard, cfg));
  if (full || suite == "associativity") parts.push_back(check_associativity(alg, cfg));
  if (full || suite == "cancellative") parts.push_back(check_basis_cancellative(alg, cfg));
  if (full || suite == "almost-commutative") {
    if (alg.arity() != 2)
      parts.push_back(skipped("e0", "almost commutativity is a binary law"));
    else if (eps)
      parts.push_back(check_almost_commutative(alg, *eps, cfg));
    else
      needs_factor("e0");
  }
  if (full || suite == "almost-medial") {
    const std::string law = alg.arity() == 2 ? "r2" : "rn2";
    if (!eps) {
      needs_factor(law);
    } else if (eps->arity() == alg.arity() * alg.arity()) {
      parts.push_back(check_almost_medial(alg, *eps, cfg));
    } else if (eps->arity() == 2) {
      const FactorMap rho = alg.arity() == 2 ? bridge_factor(*eps) : medial_reorder_factor(*eps, alg.arity());
      parts.push_back(check_almost_medial(alg, rho, cfg));
    } else {
      throw UsageError("factor arity fits neither eps nor rho");
    }
  }
  if (full || suite == "brackets") {
    if (alg.arity() != 2 || (eps && eps->arity() != 2)) {
      parts.push_back(skipped("brackets", "bracket identities need a binary algebra and a 2-ary factor"));
    } else if (eps) {
      parts.push_back(check_ll_identity(alg, *eps, cfg));
      parts.push_back(check_eps_jacobi(alg, *eps, cfg));
    } else {
      needs_factor("brackets");
    }
  }
  if (parts.empty()) throw UsageError("unknown suite '" + suite + "' for an algebra");
  if (parts.size() == 1) return parts.front();
  return combine(suite, std::move(parts));
}

int cmd_verify(const Options& o, const std::string& input, const std::string& factor_path,
               std::ostream& out) {
  const Json doc = parse_document(read_file(input));
  const RunConfig cfg = o.config();
  Json header;
  header["command"] = "verify";
  header["suite"] = o.suite;
  if (doc.contains("table")) {
    header["kind"] = "operation";
    return emit(o, out, header, verify_op(op_from_json(doc), o.suite, cfg));
  }
  if (doc.contains("structure")) {
    header["kind"] = "algebra";
    std::optional<FactorMap> eps;
    if (!factor_path.empty()) eps = factor_from_json(parse_document(read_file(factor_path)));
    return emit(o, out, header, verify_algebra(algebra_from_json(doc), eps, o.suite, cfg));
  }
  if (doc.contains("backend")) {
    header["kind"] = "factor";
    return emit(o, out, header, verify_factor(factor_from_json(doc), o.suite, cfg));
  }
  throw ParseError("unrecognised document: expected an operation, algebra or factor");
}

// --- enumerate ------------------------------------------------------------

int cmd_enumerate(const Options& o, const std::string& kind, std::uint32_t order, unsigned arity,
                  const std::string& predicate, std::size_t emit_limit, std::ostream& out) {
  const RunConfig cfg = o.config();
  std::function<bool(const NaryOp&)> keep;
  if (predicate == "any") keep = [](const NaryOp&) { return true; };
  else if (predicate == "medial") keep = [&](const NaryOp& op) { return check_mediality(op, cfg).passed(); };
  else if (predicate == "associative")
    keep = [&](const NaryOp& op) { return check_total_associativity(op, cfg).passed(); };
  else if (predicate == "unital") keep = [](const NaryOp& op) { return find_unit(op).has_value(); };
  else if (predicate == "idempotent")
    keep = [](const NaryOp& op) { return find_idempotents(op).size() == op.order(); };
  else throw UsageError("unknown predicate '" + predicate + "'");

  std::uint64_t count = 0;
  Json tables = Json::array();
  auto visit = [&](const NaryOp& op) {
    if (keep(op)) {
      ++count;
      if (tables.size() < emit_limit) tables.push_back(op_to_json(op));
    }
    return true;
  };
  std::uint64_t visited = 0;
  if (kind == "quasigroup") visited = for_each_quasigroup(arity, order, visit, cfg.budget * 10);
  else if (kind == "magma") visited = for_each_magma(arity, order, visit, cfg.budget);
  else throw UsageError("unknown kind '" + kind + "'");

  if (o.format == "text") {
    out << kind << " order=" << order << " arity=" << arity << " predicate=" << predicate
        << " visited=" << visited << " count=" << count << "\n";
    return exit_pass;
  }
  Json doc;
  doc["command"] = "enumerate";
  doc["kind"] = kind;
  doc["order"] = order;
  doc["arity"] = arity;
  doc["predicate"] = predicate;
  doc["visited"] = visited;
  doc["count"] = count;
  if (emit_limit > 0) doc["tables"] = std::move(tables);
  out << dump_document(doc);
  return exit_pass;
}

// --- decompose ------------------------------------------------------------

int cmd_decompose(const Options& o, const std::string& input, std::ostream& out) {
  const NaryOp op = op_from_json(parse_document(read_file(input)));
  const RunConfig cfg = o.config();
  const auto mediality = check_mediality(op, cfg);
  if (mediality.status == Status::budget_exceeded) throw BudgetExceeded("mediality scan over budget");
  const auto pres = toyoda_decompose(op, cfg);
  const bool ok = pres && build_linear_quasigroup(*pres) == op;
  if (o.format == "text") {
    if (!pres) {
      out << "not medial";
      if (mediality.witness) out << ": " << mediality.witness->lhs << " vs " << mediality.witness->rhs;
      out << "\n";
    } else {
      out << "group Z" << pres->invariant_factors.front();
      for (std::size_t i = 1; i < pres->invariant_factors.size(); ++i) out << " x Z" << pres->invariant_factors[i];
      for (std::size_t i = 0; i < pres->maps.size(); ++i) {
        out << "\nmap" << i + 1 << ":";
        for (auto v : pres->maps[i]) out << ' ' << v;
      }
      out << "\nc " << pres->c << "\ncertificate " << (ok ? "matches" : "MISMATCH") << "\n";
    }
  } else {
    Json doc;
    doc["command"] = "decompose";
    auto body = decomposition_to_json(pres, mediality);
    for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
    if (pres) doc["certificate_matches"] = ok;
    out << dump_document(doc);
  }
  return ok ? exit_pass : exit_fail;
}

// --- coherence ------------------------------------------------------------

NaryOp sum_mod(unsigned n, std::uint32_t m) {
  return NaryOp::from_function(n, m, [m](std::span<const Label> a) {
    std::uint64_t s = 0;
    for (auto x : a) s += x;
    return static_cast<Label>(s % m);
  });
}

std::vector<VerificationReport> coherence_suite(unsigned n, const std::string& suite,
                                                const std::vector<unsigned>& sigma,
                                                const std::optional<NaryOp>& model,
                                                const RunConfig& cfg) {
  std::vector<VerificationReport> parts;
  const bool all = suite == "all";
  bool known = all;
  auto wants = [&](const char* name) {
    if (all || suite == name) {
      known = true;
      return true;
    }
    return false;
  };
  if (wants("polygon")) parts.push_back(check_polygon(n));
  if (wants("triangle")) {
    if (n == 2 || n == 3) parts.push_back(check_triangle_units(n));
    else parts.push_back(skipped("triangle", "unit diagrams are drawn for n = 2, 3"));
  }
  if (wants("hexagon")) {
    if (n == 2) parts.push_back(check_hexagon());
    else parts.push_back(skipped("diag9", "the hexagon is binary"));
  }
  if (wants("decagon")) {
    if (n == 3) parts.push_back(check_braiding_decagon());
    else parts.push_back(skipped("diag12", "the braiding decagon is ternary"));
  }
  if (wants("braid")) {
    std::vector<unsigned> s = sigma;
    if (s.empty())
      for (unsigned i = 0; i < n; ++i) s.push_back(n - 1 - i);
    parts.push_back(check_braid_relation(n, s));
  }
  if (wants("medial")) {
    if (n == 2) parts.push_back(check_medial_coherence());
    else parts.push_back(skipped("diag16", "medial coherence diagrams are binary"));
  }
  if (wants("groupal")) {
    const NaryOp op = model ? *model : sum_mod(n, 4);
    if (op.arity() != n) throw UsageError("model arity differs from --n");
    parts.push_back(check_groupal_model(SkeletalGroupModel(op, cfg)));
  }
  if (!known) throw UsageError("unknown coherence suite '" + suite + "'");
  return parts;
}

int cmd_coherence(const Options& o, unsigned n, const std::vector<unsigned>& sigma,
                  const std::string& model_path, std::ostream& out) {
  if (n < 2) throw UsageError("--n must be at least 2");
  if (n > 4) throw BudgetExceeded("coherence suites are limited to n <= 4");
  std::optional<NaryOp> model;
  if (!model_path.empty()) model = op_from_json(parse_document(read_file(model_path)));
  const std::string suite = o.suite == "full" ? "all" : o.suite;
  auto parts = coherence_suite(n, suite, sigma, model, o.config());
  VerificationReport r = parts.size() == 1 ? parts.front() : combine("coherence-" + suite, std::move(parts));
  Json header;
  header["command"] = "coherence";
  header["n"] = n;
  header["suite"] = suite;
  return emit(o, out, header, r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks laws of polyadic operations, graded algebras and coherence diagrams"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--budget", o.budget, "Maximum probes per exhaustive scan")->check(CLI::PositiveNumber);
    c->add_option("--seed", o.seed, "Seed for sampled checks");
    c->add_option("--jobs", o.jobs, "Worker threads for scans")->check(CLI::PositiveNumber);
  };

  std::string input, factor_path, model_path, kind = "quasigroup", predicate = "any";
  std::uint32_t order = 3;
  unsigned arity = 2, n = 2;
  std::size_t emit_limit = 0;
  std::vector<unsigned> sigma;

  auto* verify = app.add_subcommand("verify", "Run a law suite on an operation, factor or algebra document");
  common(verify);
  verify->add_option("input", input, "Input document")->required();
  verify->add_option("--suite", o.suite, "Suite name (default: full)");
  verify->add_option("--factor", factor_path, "Factor document for algebra suites");

  auto* enumerate = app.add_subcommand("enumerate", "Count small structures satisfying a predicate");
  common(enumerate);
  enumerate->add_option("--kind", kind, "quasigroup or magma")->check(CLI::IsMember({"quasigroup", "magma"}));
  enumerate->add_option("--order", order, "Carrier size")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--arity", arity, "Arity")->check(CLI::Range(2u, 8u));
  enumerate->add_option("--predicate", predicate, "any, medial, associative, unital, idempotent");
  enumerate->add_option("--emit-tables", emit_limit, "Emit at most this many matching tables");

  auto* decompose = app.add_subcommand("decompose", "Find a linear presentation of a medial quasigroup");
  common(decompose);
  decompose->add_option("input", input, "Operation table document")->required();

  auto* coherence = app.add_subcommand("coherence", "Check coherence diagrams in arity n");
  common(coherence);
  coherence->add_option("--n", n, "Arity")->required();
  coherence->add_option("--suite", o.suite,
                        "polygon, triangle, hexagon, decagon, braid, medial, groupal or all");
  coherence->add_option("--sigma", sigma, "Braiding permutation for the braid suite")->delimiter(',');
  coherence->add_option("--model", model_path, "Operation table for the groupal suite");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_parse;
  }

  try {
    if (*verify) return cmd_verify(o, input, factor_path, out);
    if (*enumerate) return cmd_enumerate(o, kind, order, arity, predicate, emit_limit, out);
    if (*decompose) return cmd_decompose(o, input, out);
    if (*coherence) return cmd_coherence(o, n, sigma, model_path, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_parse;
}

}  // namespace polyadic::cli
