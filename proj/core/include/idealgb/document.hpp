#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "idealgb/error.hpp"
#include "idealgb/functionals.hpp"
#include "idealgb/single_point.hpp"
#include "idealgb/verify.hpp"

namespace idealgb {

enum class Algorithm { Auto, Single, Mmm, Splice };

std::string to_string(Algorithm a);
/// Throws Error on an unknown name.
Algorithm parseAlgorithm(std::string_view name);

/// Stable process exit codes, one per error class.
enum class ExitCode : int {
  Ok = 0,
  CertificateFailed = 1,
  Usage = 2,
  InvalidDocument = 3,
  Dependent = 4,
  NotDInvariant = 5,
  Io = 6,
  Internal = 70,
};

struct DocumentOptions {
  Algorithm algorithm = Algorithm::Auto;
  bool checkDInvariance = true;
  bool emitCertificate = false;
  bool emitStats = false;
};

/// A problem plus run options, as read from a JSON document.
struct ProblemDocument {
  Problem problem;
  DocumentOptions options;
};

/// Malformed or schema-invalid document. `location` is "line L, column C"
/// for JSON syntax errors and a JSON pointer for schema errors.
class DocumentError : public Error {
 public:
  DocumentError(const std::string& location, const std::string& message)
      : Error(location + ": " + message), location_(location) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

ProblemDocument parseProblemDocument(std::string_view text);
ProblemDocument problemDocumentFromJson(const nlohmann::json& j);
nlohmann::json toJson(const ProblemDocument& doc);

struct Stats {
  std::size_t n = 0;
  std::size_t m = 0;
  OpCounters counters;
};

struct ResultDocument {
  Algorithm algorithm = Algorithm::Auto;  // path actually taken
  std::vector<std::string> notes;
  std::vector<std::string> groebnerBasis;   // ascending leading monomial
  std::vector<std::string> quotientBasis;   // ascending
  std::vector<std::string> leadingMonomials;
  std::optional<Certificate> certificate;
  std::optional<Stats> stats;

  ExitCode exitCode() const noexcept;
};

/// Solves the document's problem with the requested algorithm.
/// Library errors propagate as exceptions.
ResultDocument run(const ProblemDocument& doc);

nlohmann::json toJson(const ResultDocument& result);
/// Human-readable rendering.
std::string toText(const ResultDocument& result);

/// Options given on the command line take precedence over the document's.
struct OptionOverrides {
  std::optional<Algorithm> algorithm;
  std::optional<bool> checkDInvariance;
  std::optional<bool> emitCertificate;
  std::optional<bool> emitStats;
};

struct ProcessOutcome {
  std::string output;       // rendered result, empty on error
  std::string diagnostics;  // error message, empty on success
  ExitCode exitCode = ExitCode::Ok;
};

/// Parses, runs and renders one document, mapping every error class to its
/// exit code. `textFormat` selects toText instead of JSON.
ProcessOutcome processDocument(std::string_view text, const OptionOverrides& overrides,
                               bool textFormat);

}  // namespace idealgb
