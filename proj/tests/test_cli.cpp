#include "catch_amalgamated.hpp"

#include <sstream>

#include "cordial/app.hpp"
#include "cordial/io.hpp"

using namespace cordial;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(CORDIAL_FIXTURE_DIR) + "/" + name + ".json";
}

}  // namespace

TEST_CASE("construct piped into lambda") {
  const Result cube = run({"construct", "--dim", "6"});
  REQUIRE(cube.code == 0);
  const Result t = run({"lambda", "-"}, cube.out);
  CHECK(t.code == 0);
  CHECK(t.out == "(64,64,64)\n");

  const Result digraph = run({"construct", "--dim", "3", "--format", "digraph"});
  CHECK(run({"lambda", "-"}, digraph.out).out == "(4,4,4)\n");
}

TEST_CASE("construct rejects bad dimensions") {
  const Result r = run({"construct", "--dim", "4"});
  CHECK(r.code == cli::kBadInput);
  CHECK(r.err.starts_with("error[argument]"));
}

TEST_CASE("check reports a witness or an exhaustion certificate") {
  const Result v = run({"check", fixture("V")});
  CHECK(v.code == cli::kNegative);
  CHECK(v.out == "not cordial: no friendly labeling of 70 admits (2,3)-cordial\n");

  const Result c = run({"check", fixture("C3")});
  CHECK(c.code == cli::kSuccess);
  CHECK(c.out.starts_with("cordial: labels "));

  const Result j = run({"--json", "check", fixture("V")});
  const auto doc = io::json::parse(j.out);
  CHECK(doc["cordial"] == false);
  CHECK(doc["labelings_examined"] == 70);

  const Result budget = run({"check", fixture("C3"), "--budget", "10"});
  CHECK(budget.code == cli::kNegative);
  CHECK(budget.out.starts_with("budget: "));
}

TEST_CASE("phi and phi-table") {
  CHECK(run({"phi", fixture("A"), fixture("B"), "--bijection", "AB"}).out == "2\n");
  CHECK(run({"phi", fixture("A"), fixture("C3"), "--bijection", fixture("AC")}).out == "4\n");
  CHECK(run({"phi", fixture("A"), fixture("C1")}).code == cli::kBadInput);
  CHECK(run({"phi", fixture("A"), fixture("B"), "--bijection", "XY"}).code == cli::kBadInput);

  const Result table = run({"phi-table"});
  CHECK(table.code == 0);
  CHECK(table.out.find("matches reference table: yes") != std::string::npos);
  const auto doc = io::json::parse(run({"--json", "phi-table"}).out);
  CHECK(doc["values"][0][3] == 6);
  CHECK(doc["matches_reference"] == true);
}

TEST_CASE("assemble") {
  const Result r = run({"assemble", fixture("fig5_4D"), "--balance"});
  CHECK(r.code == 0);
  CHECK(r.out.find("balanced lambda:  (11,11,10)") != std::string::npos);

  const Result emitted = run({"assemble", fixture("fig9_7D"), "--emit"});
  CHECK(run({"lambda", "-"}, emitted.out).out == "(149,149,150)\n");

  const Result infeasible = run({"--json", "assemble", fixture("fig7a_4D"), "--balance"});
  CHECK(infeasible.code == cli::kNegative);
  const auto doc = io::json::parse(infeasible.out);
  CHECK(doc["reason"] == "infeasible");
  CHECK(doc["best"]["gamma"] == 12);

  const Result unbalanced = run({"assemble", fixture("fig7a_4D")});
  CHECK(unbalanced.code == 0);
}

TEST_CASE("classify") {
  const Result r = run({"classify", "--dim", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 without a (2,3)-cordial labeling") != std::string::npos);
  CHECK(r.out.find("(class of V)") != std::string::npos);
  CHECK(r.out.find("(class of V reversed)") != std::string::npos);
  CHECK(run({"classify", "--dim", "4"}).code == cli::kBadInput);
}

TEST_CASE("orientability") {
  CHECK(run({"orientability", fixture("X6")}).code == cli::kNegative);
  CHECK(run({"orientability", fixture("X7")}).code == cli::kNegative);
  CHECK(run({"orientability", fixture("X7"), "--keep-isolated"}).code == cli::kSuccess);

  const Result budget = run({"--json", "orientability", fixture("X6"), "--budget", "10"});
  CHECK(budget.code == cli::kNegative);
  CHECK(io::json::parse(budget.out)["reason"] == "budget");
}

TEST_CASE("fixtures and export-dot") {
  const Result list = run({"fixtures", "list"});
  CHECK(list.out.find("fig9_7D") != std::string::npos);
  CHECK(run({"fixtures", "export", "nope"}).code == cli::kBadInput);

  const Result v = run({"fixtures", "export", "V"});
  const Result dot = run({"export-dot", "-"}, v.out);
  CHECK(dot.code == 0);
  CHECK(dot.out.starts_with("digraph G {"));
}

TEST_CASE("malformed input exits 2 with a location") {
  const Result syntax = run({"lambda", "-"}, "{\"dim\": 3,\n oops}");
  CHECK(syntax.code == cli::kBadInput);
  CHECK(syntax.err.find("line 2, column 2") != std::string::npos);

  const Result schema = run({"lambda", "-"}, R"({"dim": 3, "orientation": "000"})");
  CHECK(schema.code == cli::kBadInput);
  CHECK(schema.err.find("/labels") != std::string::npos);

  CHECK(run({"lambda", "/nonexistent/file.json"}).code == cli::kBadInput);
  CHECK(run({}).code == cli::kBadInput);
  CHECK(run({"frobnicate"}).code == cli::kBadInput);
}

TEST_CASE("explore is reproducible") {
  const Result a = run({"explore", "--dim", "4", "--samples", "3", "--seed", "9", "--attempts", "500"});
  const Result b = run({"explore", "--dim", "4", "--samples", "3", "--seed", "9", "--attempts", "500"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("help exits 0") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classify") != std::string::npos);
}
