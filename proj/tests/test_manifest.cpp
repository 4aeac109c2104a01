#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "helpers.hpp"
#include "homtwist/error.hpp"
#include "homtwist/manifest.hpp"

using namespace homtwist;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(HOMTWIST_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_manifest(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ErrorKind::SyntaxError;
}

const char* k2 = R"("K": {"kind": "hom_algebra", "dim": 2, "mul": [[["1","0"],["0","0"]],[["0","0"],["0","1"]]]})";

std::string with_objects(const std::string& objects, const std::string& tasks = "") {
  return "{\"objects\": {" + objects + "}, \"tasks\": [" + tasks + "]}";
}

}  // namespace

TEST_CASE("empty manifest runs with nothing to do") {
  const Manifest m = parse_manifest(R"({"objects": {}, "tasks": []})");
  CHECK(m.objects.empty());
  CHECK(m.tasks.empty());
  const RunResult r = run_manifest(m);
  CHECK(r.exit_code == 0);
  CHECK(check_manifest_text(R"({"objects": {}, "tasks": []})").exit_code == 0);
}

TEST_CASE("golden manifest round-trips through serialization") {
  const Manifest m = parse_manifest(read_data("golden.json"));
  CHECK(m.objects.size() >= 10);
  const std::string once = serialize_manifest(m);
  const Manifest back = parse_manifest(once);
  CHECK(back == m);
  CHECK(serialize_manifest(back) == once);
}

TEST_CASE("exit codes of the bundled manifests") {
  CHECK(check_manifest_text(read_data("golden.json")).exit_code == 0);
  const CheckOutcome broken = check_manifest_text(read_data("broken.json"));
  CHECK(broken.exit_code == 2);
  CHECK(std::regex_search(broken.output, std::regex("line [0-9]+, column [0-9]+")));
  const CheckOutcome failing = check_manifest_text(read_data("failing.json"));
  CHECK(failing.exit_code == 1);
  CHECK(failing.output.find("MISMATCH") != std::string::npos);
}

TEST_CASE("parse errors") {
  CHECK(parse_kind(R"({"objects": {}, "tasks": [)") == ErrorKind::SyntaxError);
  CHECK(parse_kind(R"({"objects": {}, "extra": 1})") == ErrorKind::SyntaxError);
  CHECK(parse_kind(R"([1, 2])") == ErrorKind::SyntaxError);
  CHECK(parse_manifest(R"({"objects": {}})").tasks.empty());
  CHECK(parse_manifest(R"({"tasks": []})").objects.empty());
  CHECK(parse_kind(with_objects(R"("X": {"kind": "hom_algebra", "dim": 1, "mul": [[["1/0"]]]})")) ==
        ErrorKind::ZeroDenominator);
  CHECK(parse_kind(with_objects(R"("X": {"kind": "hom_algebra", "dim": 1, "mul": [[["1/x"]]]})")) ==
        ErrorKind::MalformedRational);
  CHECK(parse_kind(with_objects(R"("X": {"kind": "hom_algebra", "dim": 2, "mul": [[["1"]]]})")) ==
        ErrorKind::DimensionMismatch);
  CHECK(parse_kind(with_objects(R"("X": {"kind": "lie_algebra", "dim": 1})")) == ErrorKind::UnknownName);
  CHECK(parse_kind(with_objects(std::string(k2) + "," + k2)) == ErrorKind::DuplicateName);
  CHECK(parse_kind(with_objects(k2, R"({"verb": "check_everything", "args": ["K"]})")) == ErrorKind::UnknownName);
  CHECK(parse_kind(with_objects(k2, R"({"verb": "check_hom_algebra", "args": ["K"], "expect": "maybe"})")) ==
        ErrorKind::SyntaxError);
  CHECK(parse_kind(with_objects(R"("a.b": {"kind": "gallery", "name": "clifford"})")) == ErrorKind::SyntaxError);
}

TEST_CASE("syntax errors report line and column") {
  try {
    parse_manifest("{\n  \"objects\": {}\n  \"tasks\": []\n}");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    // The column is where the offending token ends.
    CHECK(std::string(e.what()).find("line 3, column 9") != std::string::npos);
  }
}

TEST_CASE("exit-code mapping") {
  CHECK(exit_code_for(Error(ErrorKind::SyntaxError, ""), true) == 2);
  CHECK(exit_code_for(Error(ErrorKind::MalformedRational, ""), true) == 2);
  CHECK(exit_code_for(Error(ErrorKind::ZeroDenominator, ""), true) == 2);
  CHECK(exit_code_for(Error(ErrorKind::UnknownName, ""), true) == 3);
  CHECK(exit_code_for(Error(ErrorKind::DimensionMismatch, ""), false) == 3);
  CHECK(check_manifest_text(with_objects(R"("X": {"kind": "hom_algebra", "dim": 1, "mul": [[["2/0"]]]})")).exit_code ==
        2);
  CHECK(check_manifest_text(with_objects(k2, R"({"verb": "check_hom_algebra", "args": ["Q"]})")).exit_code == 3);
  CHECK(check_manifest_text(with_objects(k2, R"({"verb": "check_hom_coalgebra", "args": ["K"]})")).exit_code == 3);
}

TEST_CASE("expectations") {
  const std::string fail_task = R"({"verb": "check_coassociative", "args": ["C"], "expect": "fail"})";
  const std::string twisted =
      R"("C": {"kind": "hom_coalgebra", "dim": 2, "comul": [[["0","0"],["0","1"]],[["1","0"],["0","0"]]], "alpha": [["0","1"],["1","0"]]})";
  const CheckOutcome o = check_manifest_text(with_objects(twisted, fail_task));
  CHECK(o.exit_code == 0);
  CHECK(o.output.find("fail (expected fail) OK") != std::string::npos);
  const CheckOutcome any =
      check_manifest_text(with_objects(twisted, R"({"verb": "check_hom_coalgebra", "args": ["C"], "expect": "any"})"));
  CHECK(any.exit_code == 0);
}

TEST_CASE("constructions bind names for later tasks and the table command") {
  const std::string text = with_objects(
      R"("G": {"kind": "gallery", "name": "ttp_k2_lambda", "params": {"lambda": 2}})",
      R"({"verb": "ttp", "args": ["G.A", "G.B", "G.R"], "as": "P"},
         {"verb": "check_associative", "args": ["P"]},
         {"verb": "equal", "args": ["P", "G.product"]})");
  const Manifest m = parse_manifest(text);
  const RunResult r = run_manifest(m);
  CHECK(r.exit_code == 0);
  CHECK(r.report.find("3/3 tasks met their expectation") != std::string::npos);
  const std::string table = product_table(m, "P");
  CHECK(table.find("-2 e1⊗e2") != std::string::npos);
  std::istringstream lines(table);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK((line.empty() || line.back() != ' '));
  }
  CHECK(rows == 6);
  try {
    product_table(m, "G.R");
    FAIL("expected WrongKind");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongKind);
  }
}

TEST_CASE("verbs list") {
  const auto verbs = manifest_verbs();
  CHECK(verbs.size() > 40);
  bool has_clifford = false;
  for (const auto& [v, arity] : verbs) has_clifford |= v == "clifford" && arity == 2;
  CHECK(has_clifford);
}
