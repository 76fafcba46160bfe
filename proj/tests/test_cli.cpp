#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "avoid/cli.hpp"

using namespace avoid;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json result_of(const RunResult& r) {
  const json envelope = json::parse(r.out);
  REQUIRE(envelope.contains("result"));
  return envelope["result"];
}

}  // namespace

TEST_CASE("check reports occurrences and avoidance") {
  const RunResult hit = run({"check", "--formula", "AA", "--word", "0110"});
  CHECK(hit.code == 1);
  const json rh = result_of(hit);
  CHECK(rh["avoided"] == false);
  CHECK(rh["witness"]["A"] == "1");

  const RunResult miss = run({"check", "--formula", "AA", "--word", "012", "--alphabet", "3"});
  CHECK(miss.code == 0);
  CHECK(result_of(miss)["avoided"] == true);
}

TEST_CASE("bad usage exits with 2") {
  CHECK(run({"check", "--word", "0110"}).code == 2);          // missing --formula
  CHECK(run({"nonsense"}).code == 2);                         // unknown subcommand
  CHECK(run({"check", "--formula", "A..A", "--word", "0"}).code == 2);
  CHECK(run({"enumerate", "--formula", "AAA", "-k", "99"}).code == 2);
  const RunResult r = run({"check", "--formula", "ABC", "--word", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("enumerate emits a table and honors the budget exit code") {
  const RunResult r =
      run({"enumerate", "--formula", "AAB.BBAA", "-k", "2", "-n", "60", "--serial"});
  CHECK(r.code == 0);
  const json t = result_of(r);
  CHECK(t["exhausted"] == true);
  CHECK(t["max_length"] == 22);
  CHECK(t["total"] == 1428);
  CHECK(t["counts"]["22"] == 4);
  CHECK(t["convention"] == "nonempty");

  const RunResult budget =
      run({"enumerate", "--formula", "AAA", "-k", "2", "-n", "40", "--node-budget", "100"});
  CHECK(budget.code == 3);
  CHECK(result_of(budget)["budget_exhausted"] == true);

  const RunResult csv = run({"enumerate", "--formula", "AAB.BBAA", "-n", "60", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("length,count") != std::string::npos);
  CHECK(csv.out.find("# total,1428") != std::string::npos);
}

TEST_CASE("figure1 verifies all rows on a full run") {
  const RunResult r = run({"figure1"});
  CHECK(r.code == 0);
  const json t = result_of(r);
  REQUIRE(t["rows"].size() == 8);
  for (const json& row : t["rows"]) CHECK(row["match"] == true);

  // a low limit cannot exhaust the search, so rows cannot match
  const RunResult low = run({"figure1", "--limit", "10"});
  CHECK(low.code == 1);
}

TEST_CASE("classify emits a growth verdict") {
  const RunResult r = run({"classify", "--formula", "AAA", "--limit", "20"});
  CHECK(r.code == 0);
  CHECK(result_of(r)["growth"] == "exponential");
}

TEST_CASE("divides maps divisibility to the exit code") {
  CHECK(run({"divides", "--big", "AABA.AABBA", "--small", "ABA.AABB"}).code == 0);
  CHECK(run({"divides", "--big", "AABA.AABBA", "--small", "AAA"}).code == 1);
}

TEST_CASE("morphic prints prefixes and images") {
  const RunResult r = run({"morphic", "--name", "b3", "-n", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("012021012102") != std::string::npos);

  const RunResult img = run({"image", "--morphism", "g_y", "--word", "012", "--format", "text"});
  CHECK(img.code == 0);
  CHECK(img.out.find("01110100") != std::string::npos);

  const RunResult missing = run({"morphic", "--name", "nope", "-n", "4"});
  CHECK(missing.code == 2);
}

TEST_CASE("verify certifies a catalog morphism") {
  const RunResult r =
      run({"verify", "--morphism", "m_aa_abab_bb_11", "--sq", "4", "--formula", "AA.ABAB.BB"});
  CHECK(r.code == 0);
  const json t = result_of(r);
  CHECK(t["pass"] == true);
  for (const json& sec : t["sections"]) CHECK(sec["verdict"] == "certified");

  const RunResult bad = run({"verify", "--morphism", "m_aa_abab_bb_11", "--sq", "3"});
  CHECK(bad.code == 1);
}

TEST_CASE("essential check runs at small scale") {
  const RunResult r = run({"essential", "--gen", "b3", "--sq", "1", "--forbid", "010", "--forbid",
                           "212", "-n", "8", "-m", "8"});
  CHECK(r.code == 0);
  CHECK(result_of(r)["pass"] == true);
}

TEST_CASE("catalog dump is complete") {
  const RunResult r = run({"catalog"});
  CHECK(r.code == 0);
  const json t = result_of(r);
  CHECK(t["finite_rows"].size() == 8);
  CHECK(t["morphism_claims"].size() == 20);
  CHECK(t["formulas"].size() == 31);
  CHECK(t["words"].size() == 10);
}
