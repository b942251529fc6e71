#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "fglie/json_io.hpp"

using namespace fglie;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(FGLIE_TEST_DATA_DIR) + "/data/" + name; }

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  Result r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

void expect_metadata(const Json &j) {
  EXPECT_TRUE(j.contains("tool_version"));
  EXPECT_EQ(j["basis_convention"], "lyndon");
  EXPECT_TRUE(j["ring"].contains("kind"));
}

} // namespace

TEST(Cli, BchTable) {
  Json j = run_json({"bch", "table", "--degree", "4"});
  expect_metadata(j);
  EXPECT_EQ(j["degree_bound"], 4);
  EXPECT_EQ(j["basis"], "lyndon");
  EXPECT_EQ(j["terms"].size(), 6u);
  EXPECT_EQ(j["terms"][4]["lyndon_word"], "122");
  EXPECT_EQ(j["terms"][4]["coefficient"], "1/12");
  EXPECT_EQ(j["valuation_audit"]["2"], "pass");
  Result text = run({"bch", "table", "--degree", "3"});
  EXPECT_NE(text.out.find("1/12  [x1,[x1,x2]]"), std::string::npos);
}

TEST(Cli, BchAudit) {
  Json j = run_json({"bch", "audit", "--degree", "8"});
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["audits"].size(), 4u);
  EXPECT_EQ(run_json({"bch", "audit", "--degree", "6", "--prime", "11"})["audits"][0]["prime"], 11);
}

TEST(Cli, ExplogVerifyExample) {
  Json j = run_json({"law", "explog-verify", "--law", "heisenberg", "--prime", "3", "--trials", "20", "--seed", "42"});
  expect_metadata(j);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["report"]["comparison"], "exact");
  for (const auto &c : j["report"]["checks"])
    EXPECT_EQ(c["failed"], 0) << c["name"];
}

TEST(Cli, ExplogVerifyPAdic) {
  Json j = run_json({"law", "explog-verify", "--law", "multiplicative", "--prime", "3", "--precision", "8", "--trials", "5"});
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["report"]["comparison"], "mod 3^8");
  EXPECT_EQ(j["ring"]["kind"], "padic");
}

TEST(Cli, NonTerminatingRationalSeriesIsAnInputError) {
  Result r = run({"law", "explog-verify", "--law", "multiplicative", "--trials", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ring"), std::string::npos);
}

TEST(Cli, LieReportFlagsSolvable2) {
  Json j = run_json({"lie", "report", "--structure", data("solvable2.json")});
  expect_metadata(j);
  EXPECT_EQ(j["status"], "FLAG");
  EXPECT_EQ(j["radical_report"]["radical"]["dimension"], 2);
  Result text = run({"lie", "report", "--structure", data("solvable2.json")});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("FLAG"), std::string::npos);
}

TEST(Cli, LieRadicalOfDirectSumFile) {
  Json j = run_json({"lie", "radical", "--structure", data("sl2_heisenberg.json")});
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["radical_report"]["radical"]["basis"],
            Json::parse(R"([["0","0","0","1","0","0"],["0","0","0","0","1","0"],["0","0","0","0","0","1"]])"));
}

TEST(Cli, LieJacobiFailureExitsOne) {
  Json j = run_json({"lie", "jacobi", "--structure", data("not_jacobi.json")}, 1);
  EXPECT_EQ(j["status"], "FAIL");
  EXPECT_EQ(j["jacobi"]["witness"], Json::parse("[1,2,3]"));
  EXPECT_EQ(run({"lie", "report", "--structure", data("not_jacobi.json")}).code, 1);
}

TEST(Cli, LieNilpotent) {
  Json j = run_json({"lie", "nilpotent", "--structure", "free_nilpotent:2:3"});
  EXPECT_EQ(j["nilpotent"], true);
  EXPECT_EQ(j["nilpotency_class"], 3);
  EXPECT_EQ(j["lower_central_series"], Json::parse("[5,3,2,0]"));
}

TEST(Cli, LawCheckAndLie) {
  EXPECT_EQ(run_json({"law", "check", "--law", "unitriangular:4", "--degree", "6"})["status"], "PASS");
  Json bad = run_json({"law", "check", "--law", data("nonassociative_law.json")}, 1);
  EXPECT_EQ(bad["axioms"]["associativity"], false);
  Json lie = run_json({"law", "lie", "--law", "heisenberg"});
  EXPECT_EQ(lie["structure"]["brackets"], Json::parse(R"([{"i":1,"j":2,"result":[{"k":3,"coeff":"1"}]}])"));
  EXPECT_EQ(lie["correspondence"]["status"], "PASS");
}

TEST(Cli, LawFromFile) {
  Json j = run_json({"group", "mul", "--law", data("heisenberg_z3.json"), "--x", "3,0,0", "--y", "0,3,0"});
  EXPECT_EQ(j["ring"]["kind"], "padic");
  EXPECT_EQ(j["result"][2], "1*3^2 mod 3^10");
  EXPECT_EQ(run({"group", "mul", "--law", data("heisenberg_z3.json"), "--precision", "5", "--x", "3,0,0", "--y", "0,3,0"}).code, 2);
}

TEST(Cli, GroupOperations) {
  EXPECT_EQ(run_json({"group", "inv", "--law", "heisenberg", "--x", "3,6,9"})["result"], Json::parse(R"(["-3","-6","9"])"));
  Json log = run_json({"group", "log", "--law", "heisenberg", "--x", "[\"3\",\"3\",\"0\"]"});
  EXPECT_EQ(log["result"], Json::parse(R"(["3","3","-9/2"])"));
  EXPECT_EQ(log["exact"], true);
  EXPECT_EQ(run_json({"group", "exp", "--law", "heisenberg", "--x", "3,3,-9/2"})["result"], Json::parse(R"(["3","3","0"])"));
  Json trunc = run_json({"group", "log", "--law", "multiplicative", "--degree", "6", "--x", "3"});
  EXPECT_EQ(trunc["exact"], false);
  EXPECT_EQ(trunc["result"][0], "-1713/20");
}

TEST(Cli, AdjointAndUnipotent) {
  EXPECT_EQ(run_json({"law", "adjoint-verify", "--law", "heisenberg", "--trials", "4"})["status"], "PASS");
  EXPECT_EQ(run_json({"law", "unipotent", "--law", "unitriangular:3", "--trials", "3", "--k", "4"})["status"], "PASS");
}

TEST(Cli, UsageErrorsNameTheField) {
  struct Case {
    std::vector<std::string> args;
    std::string field;
  };
  for (const Case &c : std::vector<Case>{
           {{"law", "check", "--law", "nope"}, "--law"},
           {{"law", "check", "--precision", "4"}, "--precision"},
           {{"law", "check", "--prime", "4", "--precision", "4"}, "--prime"},
           {{"lie", "report", "--structure", data("malformed.json")}, "malformed.json"},
           {{"lie", "report", "--structure", data("bad_index.json")}, "brackets[0].j"},
           {{"lie", "report", "--structure", data("missing.json")}, "missing.json"},
           {{"group", "mul", "--law", "heisenberg", "--x", "3,0", "--y", "0,0,0"}, "--x"},
           {{"group", "mul", "--law", "heisenberg", "--x", "3,0,0", "--y", "0,zz,0"}, "--y[1]"},
           {{"group", "log", "--law", "heisenberg", "--prime", "3", "--precision", "5", "--x", "1,0,0"}, "--x"},
           {{"bch", "table", "--degree", "0"}, "--degree"},
           {{"law", "frobnicate"}, "subcommand"},
       }) {
    Result r = run(c.args);
    EXPECT_EQ(r.code, 2) << c.args[0] << " " << c.args[1];
    EXPECT_NE(r.err.find(c.field), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, Determinism) {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"law", "explog-verify", "--law", "unitriangular:3", "--prime", "2", "--precision", "8", "--trials", "3",
            "--seed", "9", "--format", "json"},
           {"law", "adjoint-verify", "--law", "heisenberg", "--trials", "3", "--seed", "1", "--format", "json"},
           {"bch", "audit", "--format", "json"}}) {
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}
