#include <fstream>
#include <sstream>

#include "doctest.h"
#include "idealgb/document.hpp"
#include "idealgb/error.hpp"
#include "support.hpp"

using namespace idealgb;
using namespace idealgb::test;
using nlohmann::json;

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kProblems = IDEALGB_PROBLEMS_DIR;

}  // namespace

TEST_CASE("three Lagrange points document") {
  const auto doc = parseProblemDocument(readFile(kProblems + "/lagrange3.json"));
  CHECK(doc.problem.order == grlexYX());
  CHECK(doc.options.emitCertificate);
  const auto result = run(doc);
  CHECK(result.algorithm == Algorithm::Mmm);
  CHECK(result.groebnerBasis ==
        std::vector<std::string>{"y^2 + 2/3*x - 7/3*y", "x*y - 2/3*x - 2/3*y",
                                 "x^2 - 7/3*x + 2/3*y"});
  CHECK(result.quotientBasis == std::vector<std::string>{"1", "y", "x"});
  REQUIRE(result.stats);
  CHECK(result.stats->n == 3);
  CHECK(result.stats->m == 3);
  CHECK(result.stats->counters.rankDecisions > 0);
  CHECK(result.exitCode() == ExitCode::Ok);

  const json j = toJson(result);
  CHECK(j["certificate"]["passed"] == true);
  CHECK(j["stats"]["truncationEvals"] == 3 * (3 + 3));
  for (const auto& g : j["groebnerBasis"]) {
    CHECK_NOTHROW(parsePolynomial(g.get<std::string>(), xy()));
  }
}

TEST_CASE("single evaluation document") {
  const auto doc = parseProblemDocument(
      R"({"variables": ["x", "y"], "order": {"kind": "grlex"},
          "points": [{"point": [0, 0], "space": ["1"]}]})");
  const auto result = run(doc);
  CHECK(result.algorithm == Algorithm::Single);
  CHECK(result.groebnerBasis == std::vector<std::string>{"y", "x"});
  CHECK_FALSE(result.certificate);
  CHECK_FALSE(result.stats);
}

TEST_CASE("splice document") {
  const auto result = run(parseProblemDocument(readFile(kProblems + "/mixed_lex.json")));
  CHECK(result.algorithm == Algorithm::Splice);
  CHECK(result.groebnerBasis == std::vector<std::string>{"y^3 - 2*y^2", "x*y^2 - 2*x*y",
                                                         "x^2 - x*y + 3/4*y^2 - y"});
  REQUIRE(result.certificate);
  CHECK(result.certificate->passed());
  CHECK(result.notes.empty());
}

TEST_CASE("splice falls back to mmm") {
  auto doc = parseProblemDocument(readFile(kProblems + "/lagrange3.json"));
  doc.options.algorithm = Algorithm::Splice;  // grlex: not applicable
  const auto result = run(doc);
  CHECK(result.algorithm == Algorithm::Mmm);
  REQUIRE(result.notes.size() == 1);
  CHECK(result.notes[0].find("fell back") != std::string::npos);
  CHECK(result.groebnerBasis.size() == 3);
}

TEST_CASE("single-point path on the four-functional space") {
  const auto text = readFile(kProblems + "/single_point.json");
  const auto result = run(parseProblemDocument(text));
  CHECK(result.quotientBasis == std::vector<std::string>{"1", "y", "x", "x*y"});
  REQUIRE(result.stats);
  CHECK(result.stats->counters.rankDecisions == 0);
  CHECK(result.certificate->passed());
}

TEST_CASE("document errors") {
  auto location = [](const std::string& text) {
    try {
      parseProblemDocument(text);
    } catch (const DocumentError& e) {
      return e.location();
    }
    return std::string("no error");
  };
  CHECK(location("{\n  \"variables\": [\"x\",]\n}") == "line 2, column 21");
  CHECK(location(R"({"order": {"kind": "lex"}, "points": []})") == "/");
  CHECK(location(R"({"variables": ["x"], "order": {"kind": "revlex"}, "points": []})") ==
        "/order/kind");
  CHECK(location(R"({"variables": ["x"], "order": {"kind": "lex"},
                     "points": [{"point": ["1/0"], "space": ["1"]}]})") == "/points/0/point/0");
  CHECK(location(R"({"variables": ["x"], "order": {"kind": "lex"},
                     "points": [{"point": ["1"], "space": ["1", "x + z"]}]})") ==
        "/points/0/space/1");
  CHECK(location(R"({"variables": ["x"], "order": {"kind": "lex"},
                     "points": [{"point": ["1"], "space": []}]})") == "/points/0/space");
  CHECK(location(R"({"variables": ["x"], "order": {"kind": "lex", "priority": ["y"]},
                     "points": [{"point": ["1"], "space": ["1"]}]})") == "/order/priority/0");
  CHECK(location(R"({"variables": ["x"], "order": {"kind": "lex"},
                     "points": [{"point": ["1"], "space": ["1"]}],
                     "options": {"algorithm": "fast"}})") == "/options/algorithm");
}

TEST_CASE("processDocument exit codes and determinism") {
  const auto text = readFile(kProblems + "/lagrange3.json");
  const auto a = processDocument(text, {}, false);
  const auto b = processDocument(text, {}, false);
  CHECK(a.exitCode == ExitCode::Ok);
  CHECK(a.output == b.output);
  CHECK(json::parse(a.output)["certificate"]["passed"] == true);

  const auto textOut = processDocument(text, {}, true);
  CHECK(textOut.output.find("y^2 + 2/3*x - 7/3*y") != std::string::npos);
  CHECK(textOut.output.find("certificate: passed") != std::string::npos);

  const std::string notInvariant =
      R"({"variables": ["x", "y"], "order": {"kind": "grlex"},
          "points": [{"point": ["2", "5"], "space": ["x"]}]})";
  auto r = processDocument(notInvariant, {}, false);
  CHECK(r.exitCode == ExitCode::NotDInvariant);
  CHECK(r.diagnostics.find("variable 0") != std::string::npos);

  OptionOverrides unchecked;
  unchecked.checkDInvariance = false;
  unchecked.emitCertificate = true;
  r = processDocument(notInvariant, unchecked, false);
  CHECK(r.exitCode == ExitCode::CertificateFailed);

  const std::string dependent =
      R"({"variables": ["x"], "order": {"kind": "lex"},
          "points": [{"point": ["1"], "space": ["1"]}, {"point": ["1"], "space": ["1"]}]})";
  CHECK(processDocument(dependent, {}, false).exitCode == ExitCode::Dependent);
  CHECK(processDocument("{", {}, false).exitCode == ExitCode::InvalidDocument);

  OptionOverrides single;
  single.algorithm = Algorithm::Single;
  CHECK(processDocument(text, single, false).exitCode == ExitCode::InvalidDocument);
}

TEST_CASE("problem document serialisation round-trips") {
  const auto doc = parseProblemDocument(readFile(kProblems + "/mixed_lex.json"));
  const auto again = problemDocumentFromJson(toJson(doc));
  CHECK(toJson(again) == toJson(doc));
  CHECK(again.problem.conditions[0].basis == doc.problem.conditions[0].basis);
}
