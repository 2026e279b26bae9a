#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "rfdepth/cli.hpp"
#include "rfdepth/textio.hpp"

namespace rfdepth {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(Cli, Classify) {
  const CliRun ok = run({"classify", "w^2+1"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out, "realizable: successor of limit ordinal w^2\n");
  EXPECT_EQ(run({"classify", "w^w"}).out, "realizable: limit ordinal w^w\n");
  EXPECT_EQ(run({"classify", "0"}).out, "realizable: zero (trivial group)\n");

  const CliRun bad = run({"classify", "7"});
  EXPECT_EQ(bad.code, kExitShape);
  EXPECT_EQ(bad.out, "not realizable: finite ordinal greater than 1\n");
  EXPECT_EQ(run({"classify", "w+2"}).out, "not realizable: successor of the successor w + 1\n");
}

TEST(Cli, Depth) {
  const CliRun r = run({"depth", "fp(C(2), C(2))"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(first_line(r.out), "w");
  EXPECT_NE(r.out.find("certified: yes"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, DepthInapplicable) {
  const CliRun r = run({"depth", "wr(C(2), Z)"});
  EXPECT_EQ(r.code, kExitInapplicable);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("base group must be perfect"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("wreath product"), std::string::npos) << r.err;
}

TEST(Cli, DepthUndefined) {
  const CliRun r = run({"depth", "fp(NQ, Z)"});
  EXPECT_EQ(r.code, kExitUndefined);
  EXPECT_EQ(first_line(r.out), "undefined");
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(run({"depth", "wr(A5"}).code, kExitParse);
  EXPECT_EQ(run({"classify", "w^"}).code, kExitParse);
  EXPECT_EQ(run({"classify", "e0"}).code, kExitParse);
  EXPECT_EQ(run({"depth", "M(2, 4)"}).code, kExitParse);
  EXPECT_EQ(run({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(run({}).code, kExitParse);
  EXPECT_EQ(run({"depth"}).code, kExitParse);
  EXPECT_EQ(run({"selftest", "--height", "9"}).code, kExitParse);
}

TEST(Cli, Synth) {
  const CliRun r = run({"synth", "w*3", "--fg"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(first_line(r.out), "wr(A5, wr(A5, Z))");
  EXPECT_EQ(run({"synth", "w+2"}).code, kExitShape);
  EXPECT_EQ(first_line(run({"synth", "w^2"}).out), "fpfam(w^2)");
  EXPECT_EQ(first_line(run({"synth", "w^2", "--fg"}).out), "embed3(fpfam(w^2))");
}

TEST(Cli, CoresigAndFundseq) {
  EXPECT_EQ(run({"coresig", "w*3+1"}).out, "(3, finite_nontrivial)\n");
  EXPECT_EQ(run({"coresig", "w^2"}).out, "(w, trivial)\n");
  EXPECT_EQ(run({"coresig", "w+2"}).code, kExitShape);
  EXPECT_EQ(run({"fundseq", "w^2", "--count", "3"}).out, "1: w\n2: w*2\n3: w*3\n");
  EXPECT_EQ(run({"fundseq", "w+1"}).code, kExitShape);
}

TEST(Cli, SelftestSmall) {
  const CliRun r = run({"selftest", "--bound", "4", "--height", "2"});
  EXPECT_EQ(r.code, kExitOk);
  const std::string body = r.out.substr(0, r.out.size() - 1);
  const std::string last = body.substr(body.rfind('\n') + 1);
  const auto summary = nlohmann::json::parse(last);
  EXPECT_EQ(summary["success"], true);
  EXPECT_EQ(summary["arithmetic"]["cases"], 625);
  EXPECT_EQ(summary["enumeration"]["violations"], 0);
}

void expect_schema(const nlohmann::json& node) {
  for (const char* key : {"constructor", "rule_id", "paper_ref", "ordinal"}) {
    ASSERT_TRUE(node.contains(key) && node[key].is_string()) << key;
  }
  ASSERT_TRUE(node["preconditions"].is_array());
  ASSERT_TRUE(node["children"].is_array());
  for (const auto& c : node["children"]) expect_schema(c);
  if (node.contains("members")) {
    for (const auto& m : node["members"]) {
      ASSERT_TRUE(m["index"].is_number_unsigned());
      ASSERT_TRUE(m.contains("certificate") || m.contains("certificate_ref"));
      if (m.contains("certificate")) expect_schema(m["certificate"]);
    }
  }
}

TEST(Cli, JsonSchemaAndRoundTrip) {
  for (const char* term : {"wr(A5, wr(A5, Z))", "E(LamBar(3), Z)", "embed3(fpfam(w^2*2))",
                           "fp(NQ, Z)", "succwit(w^w)"}) {
    const CliRun r = run({"depth", term, "--json"});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    EXPECT_EQ(j["certified"], true);
    expect_schema(j["certificate"]);
    // Re-running on the printed input gives the same ordinal.
    const CliRun again = run({"depth", j["input"].get<std::string>(), "--json"});
    EXPECT_EQ(nlohmann::json::parse(again.out)["result"], j["result"]) << term;
  }
  const auto s = nlohmann::json::parse(run({"synth", "w^2+1", "--fg", "--json"}).out);
  EXPECT_EQ(s["target"], "w^2 + 1");
  EXPECT_EQ(s["result"], "w^2 + 1");
  EXPECT_EQ(s["finitely_generated"], true);
  expect_schema(s["certificate"]);
}

TEST(Cli, Deterministic) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"synth", "w^3*2+w+1", "--fg", "--json"},
        std::vector<std::string>{"depth", "E(LamBar(3), wr(A5, Lam))"},
        std::vector<std::string>{"selftest", "--bound", "3", "--height", "2"}}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, Samples) {
  const auto j = nlohmann::json::parse(run({"depth", "fpfam(w^2)", "--json", "--samples", "5"}).out);
  EXPECT_EQ(j["certificate"]["members"].size(), 5u);
}

}  // namespace
}  // namespace rfdepth
