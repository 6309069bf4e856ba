#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "polyadic.hpp"
#include "polyadic_cli/cli.hpp"

using polyadic::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json doc() const { return polyadic::parse_document(out); }
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polyadic");
  std::ostringstream out, err;
  const int code = polyadic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return std::string(POLYADIC_EXAMPLES_DIR) + "/" + name; }

std::string scratch(const std::string& name, const std::string& text) {
  const std::string path = testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, S3MedialityFailsWithWitness) {
  const auto r = cli({"verify", example("s3.json"), "--suite", "mediality"});
  EXPECT_EQ(r.code, polyadic::cli::exit_fail);
  const auto doc = r.doc();
  EXPECT_EQ(doc["kind"], "operation");
  EXPECT_EQ(doc["report"]["status"], "fail");
  EXPECT_EQ(doc["report"]["witness"]["input"], Json::array({0, 1, 2, 0}));
}

TEST(Cli, AddMod5FullSuitePasses) {
  const auto r = cli({"verify", example("add_mod5.json")});
  EXPECT_EQ(r.code, polyadic::cli::exit_pass);
  const auto rep = polyadic::report_from_json(r.doc()["report"]);
  EXPECT_EQ(rep.status, polyadic::Status::pass);
  ASSERT_EQ(rep.children.size(), 4u);
  for (const auto& c : rep.children) EXPECT_EQ(c.status, polyadic::Status::pass) << c.law;
}

TEST(Cli, GrassmannAlmostCommutativeWithSuperSign) {
  const auto r = cli({"verify", example("grassmann_f3.json"), "--suite", "almost-commutative", "--factor",
                      example("super_sign_f3.json")});
  EXPECT_EQ(r.code, polyadic::cli::exit_pass);
  EXPECT_EQ(r.doc()["report"]["law"], "e0");
  EXPECT_EQ(r.doc()["report"]["probes"], 16);
  const auto missing = cli({"verify", example("grassmann_f3.json"), "--suite", "almost-commutative"});
  EXPECT_EQ(missing.code, polyadic::cli::exit_pass);
  EXPECT_EQ(missing.doc()["report"]["status"], "skipped");
}

TEST(Cli, GrassmannFullSuiteFailsOnlyCancellativity) {
  // theta1 * theta1 = 0, so the basis is not cancellative; every graded law holds.
  const auto r = cli({"verify", example("grassmann_f3.json"), "--factor", example("super_sign_f3.json")});
  EXPECT_EQ(r.code, polyadic::cli::exit_fail);
  const auto rep = polyadic::report_from_json(r.doc()["report"]);
  for (const auto& c : rep.children)
    EXPECT_EQ(c.status == polyadic::Status::fail, c.law == "cancellative") << c.law;
}

TEST(Cli, FactorSuites) {
  const auto r = cli({"verify", example("super_sign_f3.json"), "--suite", "commutation"});
  EXPECT_EQ(r.code, polyadic::cli::exit_pass);
  EXPECT_EQ(r.doc()["kind"], "factor");
  EXPECT_EQ(cli({"verify", example("super_sign_f3.json"), "--suite", "mediality4"}).code,
            polyadic::cli::exit_parse);
}

TEST(Cli, EnumerateOrderThree) {
  for (const char* pred : {"medial", "any"}) {
    const auto r = cli({"enumerate", "--kind", "quasigroup", "--order", "3", "--predicate", pred});
    EXPECT_EQ(r.code, polyadic::cli::exit_pass);
    EXPECT_EQ(r.doc()["count"], 12) << pred;
  }
}

TEST(Cli, EnumerateOrderFourMatchesOracle) {
  std::uint64_t want = 0;
  for (const auto& t : oracle::latin_squares(4))
    if (oracle::medial([&](const std::vector<unsigned>& a) { return t[a[0] * 4 + a[1]]; }, 2, 4)) ++want;
  const auto r = cli({"enumerate", "--kind", "quasigroup", "--order", "4", "--predicate", "medial"});
  EXPECT_EQ(r.code, polyadic::cli::exit_pass);
  EXPECT_EQ(r.doc()["count"], want);
  EXPECT_EQ(r.doc()["visited"], 576);
}

TEST(Cli, EnumerateCapsEmittedTables) {
  const auto r = cli({"enumerate", "--order", "3", "--emit-tables", "5"});
  const auto doc = r.doc();
  EXPECT_EQ(doc["count"], 12);
  ASSERT_EQ(doc["tables"].size(), 5u);
  for (const auto& t : doc["tables"]) EXPECT_NO_THROW(polyadic::op_from_json(t));
  EXPECT_FALSE(cli({"enumerate", "--order", "3"}).doc().contains("tables"));
  const auto text = cli({"enumerate", "--order", "3", "--format", "text"});
  EXPECT_EQ(text.out, "quasigroup order=3 arity=2 predicate=any visited=12 count=12\n");
}

TEST(Cli, DecomposeLinear) {
  const auto r = cli({"decompose", example("linear_mod5.json")});
  EXPECT_EQ(r.code, polyadic::cli::exit_pass);
  const auto doc = r.doc();
  EXPECT_EQ(doc["medial"], true);
  EXPECT_EQ(doc["certificate_matches"], true);
  std::ifstream in(example("linear_mod5.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(polyadic::op_from_json(doc["certificate"]), polyadic::op_from_json(polyadic::parse_document(ss.str())));
}

TEST(Cli, DecomposeAddMod3) {
  const auto r = cli({"decompose", example("add_mod3.json"), "--format", "text"});
  EXPECT_EQ(r.code, polyadic::cli::exit_pass);
  EXPECT_EQ(r.out, "group Z3\nmap1: 0 1 2\nmap2: 0 1 2\nc 0\ncertificate matches\n");
}

TEST(Cli, DecomposeS3NotMedial) {
  const auto r = cli({"decompose", example("s3.json")});
  EXPECT_EQ(r.code, polyadic::cli::exit_fail);
  EXPECT_EQ(r.doc()["medial"], false);
  EXPECT_EQ(r.doc()["witness"]["input"], Json::array({0, 1, 2, 0}));
  const auto text = cli({"decompose", example("s3.json"), "--format", "text"});
  EXPECT_EQ(text.out.rfind("not medial: ", 0), 0u);
}

TEST(Cli, CoherencePolygons) {
  const auto two = cli({"coherence", "--n", "2", "--suite", "polygon"});
  EXPECT_EQ(two.code, polyadic::cli::exit_pass);
  EXPECT_EQ(polyadic::report_from_json(two.doc()["report"]).fact("vertices"), "5");
  const auto three = cli({"coherence", "--n", "3", "--suite", "polygon"});
  EXPECT_EQ(three.code, polyadic::cli::exit_pass);
  const auto rep = polyadic::report_from_json(three.doc()["report"]);
  EXPECT_EQ(rep.fact("vertices"), "12");
  ASSERT_NE(rep.find("diag4"), nullptr);
  EXPECT_EQ(rep.find("diag4")->status, polyadic::Status::pass);
}

TEST(Cli, CoherenceBraid) {
  const auto r = cli({"coherence", "--n", "3", "--suite", "braid", "--sigma", "2,1,0"});
  EXPECT_EQ(r.code, polyadic::cli::exit_pass);
  EXPECT_EQ(cli({"coherence", "--n", "3", "--suite", "braid"}).out, r.out);
}

TEST(Cli, CoherenceAllSuites) {
  for (const char* n : {"2", "3"}) {
    const auto r = cli({"coherence", "--n", n});
    EXPECT_EQ(r.code, polyadic::cli::exit_pass) << n << "\n" << r.out;
  }
  const auto groupal = cli({"coherence", "--n", "3", "--suite", "groupal", "--model", example("ternary_sum_mod4.json")});
  EXPECT_EQ(groupal.code, polyadic::cli::exit_pass);
  EXPECT_EQ(cli({"coherence", "--n", "2", "--suite", "groupal", "--model", example("ternary_sum_mod4.json")}).code,
            polyadic::cli::exit_parse);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"coherence", "--n", "5"}).code, polyadic::cli::exit_budget);
  EXPECT_EQ(cli({"verify", example("add_mod5.json"), "--budget", "10"}).code, polyadic::cli::exit_budget);
  EXPECT_EQ(cli({}).code, polyadic::cli::exit_parse);
  EXPECT_EQ(cli({"frobnicate"}).code, polyadic::cli::exit_parse);
  EXPECT_EQ(cli({"verify", "/nonexistent/x.json"}).code, polyadic::cli::exit_parse);
  EXPECT_EQ(cli({"verify", scratch("broken.json", "{\"arity\":2,")}).code, polyadic::cli::exit_parse);
  EXPECT_EQ(cli({"verify", scratch("other.json", "{\"colour\":1}")}).code, polyadic::cli::exit_parse);
  EXPECT_EQ(cli({"verify", example("s3.json"), "--suite", "nonsense"}).code, polyadic::cli::exit_parse);
  EXPECT_EQ(cli({"verify", example("s3.json"), "--format", "xml"}).code, polyadic::cli::exit_parse);
  EXPECT_EQ(cli({"enumerate", "--order", "3", "--predicate", "pretty"}).code, polyadic::cli::exit_parse);
  const auto help = cli({"--help"});
  EXPECT_EQ(help.code, polyadic::cli::exit_pass);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", example("s3.json"), "--jobs", "1"},
      {"verify", example("grassmann_f3.json"), "--factor", example("super_sign_f3.json"), "--seed", "11"},
      {"enumerate", "--order", "4", "--predicate", "medial", "--emit-tables", "3"},
      {"decompose", example("linear_mod5.json")},
      {"coherence", "--n", "3"},
  };
  for (const auto& c : commands) {
    const auto a = cli(c), b = cli(c);
    EXPECT_EQ(a.out, b.out) << c.front();
    EXPECT_EQ(a.code, b.code);
  }
  auto parallel = commands.front();
  parallel.back() = "4";
  EXPECT_EQ(cli(parallel).doc()["report"], cli(commands.front()).doc()["report"]);
}
