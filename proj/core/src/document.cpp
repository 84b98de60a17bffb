#include "idealgb/document.hpp"

#include <algorithm>
#include <sstream>

#include "idealgb/error.hpp"
#include "idealgb/multi_point.hpp"
#include "idealgb/splice.hpp"

namespace idealgb {

using nlohmann::json;

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Single: return "single";
    case Algorithm::Mmm: return "mmm";
    case Algorithm::Splice: return "splice";
  }
  return "auto";
}

Algorithm parseAlgorithm(std::string_view name) {
  if (name == "auto") return Algorithm::Auto;
  if (name == "single") return Algorithm::Single;
  if (name == "mmm") return Algorithm::Mmm;
  if (name == "splice") return Algorithm::Splice;
  throw Error("unknown algorithm '" + std::string(name) + "'");
}

namespace {

std::string lineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw DocumentError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(path, "missing field '" + key + "'");
  return *it;
}

std::string stringAt(const json& j, const std::string& path) {
  if (!j.is_string()) throw DocumentError(path, "expected a string");
  return j.get<std::string>();
}

bool boolOption(const json& options, const char* key, bool fallback) {
  auto it = options.find(key);
  if (it == options.end()) return fallback;
  if (!it->is_boolean()) throw DocumentError(std::string("/options/") + key, "expected a boolean");
  return it->get<bool>();
}

Rational coordinate(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(j.dump());
    return parseRational(stringAt(j, path));
  } catch (const ParseError& e) {
    throw DocumentError(path, e.what());
  }
}

}  // namespace

ProblemDocument problemDocumentFromJson(const json& j) {
  if (!j.is_object()) throw DocumentError("/", "document must be a JSON object");

  std::vector<std::string> vars;
  const json& jv = member(j, "variables", "/");
  if (!jv.is_array() || jv.empty()) {
    throw DocumentError("/variables", "expected a nonempty array of names");
  }
  for (std::size_t i = 0; i < jv.size(); ++i) {
    std::string name = stringAt(jv[i], "/variables/" + std::to_string(i));
    if (std::find(vars.begin(), vars.end(), name) != vars.end()) {
      throw DocumentError("/variables/" + std::to_string(i), "duplicate variable '" + name + "'");
    }
    vars.push_back(std::move(name));
  }

  const json& jo = member(j, "order", "/");
  const std::string kindName = stringAt(member(jo, "kind", "/order"), "/order/kind");
  MonomialOrder::Kind kind;
  if (kindName == "lex") {
    kind = MonomialOrder::Kind::Lex;
  } else if (kindName == "grlex") {
    kind = MonomialOrder::Kind::Grlex;
  } else {
    throw DocumentError("/order/kind", "expected \"lex\" or \"grlex\"");
  }
  std::vector<std::size_t> priority;
  if (auto it = jo.find("priority"); it != jo.end()) {
    if (!it->is_array() || it->size() != vars.size()) {
      throw DocumentError("/order/priority", "expected a permutation of the variables");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "/order/priority/" + std::to_string(i);
      const std::string name = stringAt((*it)[i], path);
      auto pos = std::find(vars.begin(), vars.end(), name);
      if (pos == vars.end()) throw DocumentError(path, "unknown variable '" + name + "'");
      const auto index = static_cast<std::size_t>(pos - vars.begin());
      if (std::find(priority.begin(), priority.end(), index) != priority.end()) {
        throw DocumentError(path, "variable listed twice");
      }
      priority.push_back(index);
    }
  } else {
    for (std::size_t i = 0; i < vars.size(); ++i) priority.push_back(i);
  }

  ProblemDocument doc{Problem{vars, MonomialOrder(kind, priority), {}}, {}};

  const json& jp = member(j, "points", "/");
  if (!jp.is_array() || jp.empty()) throw DocumentError("/points", "expected a nonempty array");
  for (std::size_t k = 0; k < jp.size(); ++k) {
    const std::string base = "/points/" + std::to_string(k);
    ConditionSpace space;
    const json& coords = member(jp[k], "point", base);
    if (!coords.is_array() || coords.size() != vars.size()) {
      throw DocumentError(base + "/point", "expected " + std::to_string(vars.size()) +
                                               " coordinates");
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
      space.point.push_back(coordinate(coords[i], base + "/point/" + std::to_string(i)));
    }
    const json& js = member(jp[k], "space", base);
    if (!js.is_array() || js.empty()) {
      throw DocumentError(base + "/space", "expected a nonempty array of polynomials");
    }
    for (std::size_t i = 0; i < js.size(); ++i) {
      const std::string path = base + "/space/" + std::to_string(i);
      Polynomial p;
      try {
        p = parsePolynomial(stringAt(js[i], path), vars);
      } catch (const ParseError& e) {
        throw DocumentError(path, e.what());
      }
      if (p.isZero()) throw DocumentError(path, "zero polynomial in condition space");
      if (std::find(space.basis.begin(), space.basis.end(), p) != space.basis.end()) {
        throw DocumentError(path, "duplicate polynomial in condition space");
      }
      space.basis.push_back(std::move(p));
    }
    doc.problem.conditions.push_back(std::move(space));
  }

  if (auto it = j.find("options"); it != j.end()) {
    const json& opts = *it;
    if (!opts.is_object()) throw DocumentError("/options", "expected an object");
    if (auto a = opts.find("algorithm"); a != opts.end()) {
      try {
        doc.options.algorithm = parseAlgorithm(stringAt(*a, "/options/algorithm"));
      } catch (const DocumentError&) {
        throw;
      } catch (const Error& e) {
        throw DocumentError("/options/algorithm", e.what());
      }
    }
    doc.options.checkDInvariance = boolOption(opts, "checkDInvariance", true);
    doc.options.emitCertificate = boolOption(opts, "emitCertificate", false);
    doc.options.emitStats = boolOption(opts, "emitStats", false);
  }
  return doc;
}

ProblemDocument parseProblemDocument(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(lineColumn(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
  return problemDocumentFromJson(j);
}

json toJson(const ProblemDocument& doc) {
  const auto& p = doc.problem;
  json j;
  j["variables"] = p.variables;
  json priority = json::array();
  for (auto v : p.order.priority()) priority.push_back(p.variables[v]);
  j["order"] = {{"kind", p.order.kind() == MonomialOrder::Kind::Lex ? "lex" : "grlex"},
                {"priority", priority}};
  json points = json::array();
  for (const auto& c : p.conditions) {
    json coords = json::array();
    for (const auto& x : c.point) coords.push_back(to_string(x));
    json space = json::array();
    for (const auto& q : c.basis) space.push_back(format(q, p.variables, p.order));
    points.push_back({{"point", coords}, {"space", space}});
  }
  j["points"] = points;
  j["options"] = {{"algorithm", to_string(doc.options.algorithm)},
                  {"checkDInvariance", doc.options.checkDInvariance},
                  {"emitCertificate", doc.options.emitCertificate},
                  {"emitStats", doc.options.emitStats}};
  return j;
}

ExitCode ResultDocument::exitCode() const noexcept {
  if (certificate && !certificate->passed()) return ExitCode::CertificateFailed;
  return ExitCode::Ok;
}

ResultDocument run(const ProblemDocument& doc) {
  const Problem& problem = doc.problem;
  validate(problem);
  const SolveOptions solve{doc.options.checkDInvariance};

  ResultDocument out;
  GroebnerResult result;
  std::optional<Certificate> cert;

  Algorithm algorithm = doc.options.algorithm;
  if (algorithm == Algorithm::Splice && problem.conditions.size() < 2) {
    out.notes.push_back("splice needs at least two condition spaces; using the automatic path");
    algorithm = Algorithm::Auto;
  }
  if (algorithm == Algorithm::Auto) {
    algorithm = problem.conditions.size() == 1 ? Algorithm::Single : Algorithm::Mmm;
  }
  if (algorithm == Algorithm::Single && problem.conditions.size() != 1) {
    throw DocumentError("/options/algorithm",
                        "the single-point algorithm needs exactly one condition space");
  }

  switch (algorithm) {
    case Algorithm::Single:
      result = groebnerSingle(problem.conditions.front(), problem.order, solve);
      break;
    case Algorithm::Splice:
      try {
        SpliceOutcome spliced = spliceAll(problem, solve);
        result = std::move(spliced.result);
        cert = std::move(spliced.certificate);
      } catch (const SpliceNotApplicable& e) {
        out.notes.push_back(std::string("splice not applicable, fell back to mmm: ") + e.what());
        algorithm = Algorithm::Mmm;
      } catch (const SpliceVerificationFailed& e) {
        out.notes.push_back(std::string("splice failed verification, fell back to mmm: ") +
                            e.what());
        algorithm = Algorithm::Mmm;
      }
      if (algorithm == Algorithm::Mmm) result = groebnerMmm(problem, solve);
      break;
    default:
      result = groebnerMmm(problem, solve);
      break;
  }
  out.algorithm = algorithm;

  for (const auto& g : result.basis) {
    out.groebnerBasis.push_back(format(g, problem.variables, problem.order));
  }
  for (const auto& q : result.quotientBasis) out.quotientBasis.push_back(format(q, problem.variables));
  for (const auto& g : result.leadingMonomials) {
    out.leadingMonomials.push_back(format(g, problem.variables));
  }
  if (doc.options.emitCertificate) {
    out.certificate = cert ? *cert : certify(result, problem);
  }
  if (doc.options.emitStats) {
    out.stats = Stats{problem.functionalCount(), result.basis.size(), result.counters};
  }
  return out;
}

json toJson(const ResultDocument& r) {
  json j;
  j["algorithm"] = to_string(r.algorithm);
  j["groebnerBasis"] = r.groebnerBasis;
  j["quotientBasis"] = r.quotientBasis;
  j["leadingMonomials"] = r.leadingMonomials;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.certificate) {
    const Certificate& c = *r.certificate;
    auto check = [](bool ok, const std::string& detail) {
      json e = {{"ok", ok}};
      if (!detail.empty()) e["detail"] = detail;
      return e;
    };
    j["certificate"] = {
        {"passed", c.passed()},
        {"vanishing", check(c.vanishingOk, c.vanishingDetail)},
        {"reduced", check(c.reducedOk, c.reducedDetail)},
        {"buchberger", check(c.buchbergerOk, c.buchbergerDetail)},
        {"dimension", check(c.dimensionOk, c.dimensionDetail)},
    };
    j["certificate"]["dimension"]["expected"] = c.expectedDimension;
    j["certificate"]["dimension"]["count"] =
        c.dimension ? json(*c.dimension) : json("infinite");
  }
  if (r.stats) {
    const Stats& s = *r.stats;
    j["stats"] = {{"n", s.n},
                  {"m", s.m},
                  {"fieldOps", s.counters.fieldOps},
                  {"functionalEvals", s.counters.functionalEvals},
                  {"truncationEvals", s.counters.truncationEvals},
                  {"rankDecisions", s.counters.rankDecisions}};
  }
  return j;
}

std::string toText(const ResultDocument& r) {
  std::ostringstream os;
  os << "algorithm: " << to_string(r.algorithm) << '\n';
  for (const auto& note : r.notes) os << "note: " << note << '\n';
  os << "reduced Groebner basis:\n";
  for (const auto& g : r.groebnerBasis) os << "  " << g << '\n';
  os << "quotient basis: {";
  for (std::size_t i = 0; i < r.quotientBasis.size(); ++i) {
    os << (i ? ", " : "") << r.quotientBasis[i];
  }
  os << "}\n";
  if (r.certificate) {
    const Certificate& c = *r.certificate;
    os << "certificate: " << (c.passed() ? "passed" : "FAILED") << '\n';
    auto line = [&](const char* name, bool ok, const std::string& detail) {
      os << "  " << name << ": " << (ok ? "ok" : "failed");
      if (!detail.empty()) os << " (" << detail << ')';
      os << '\n';
    };
    line("vanishing", c.vanishingOk, c.vanishingDetail);
    line("reduced", c.reducedOk, c.reducedDetail);
    line("buchberger", c.buchbergerOk, c.buchbergerDetail);
    os << "  dimension: " << (c.dimension ? std::to_string(*c.dimension) : "infinite")
       << " (expected " << c.expectedDimension << ")\n";
  }
  if (r.stats) {
    const Stats& s = *r.stats;
    os << "stats: n=" << s.n << " m=" << s.m << " fieldOps=" << s.counters.fieldOps
       << " functionalEvals=" << s.counters.functionalEvals
       << " truncationEvals=" << s.counters.truncationEvals
       << " rankDecisions=" << s.counters.rankDecisions << '\n';
  }
  return os.str();
}

namespace {

// Names the offending polynomial and derivative, e.g. " (witness: x, d/dx)".
std::string witnessText(const ProblemDocument& doc, const NotDInvariant& e) {
  const auto& vars = doc.problem.variables;
  for (const auto& space : doc.problem.conditions) {
    const auto report = isDInvariant(space);
    if (report.invariant || report.basisIndex != e.basisIndex() ||
        report.variable != e.variable()) {
      continue;
    }
    return " (witness: " +
           format(space.basis[e.basisIndex()], vars, doc.problem.order) + ", d/d" +
           vars[e.variable()] + ")";
  }
  return {};
}

}  // namespace

ProcessOutcome processDocument(std::string_view text, const OptionOverrides& overrides,
                               bool textFormat) {
  ProcessOutcome out;
  std::optional<ProblemDocument> parsed;
  try {
    parsed = parseProblemDocument(text);
    ProblemDocument& doc = *parsed;
    if (overrides.algorithm) doc.options.algorithm = *overrides.algorithm;
    if (overrides.checkDInvariance) doc.options.checkDInvariance = *overrides.checkDInvariance;
    if (overrides.emitCertificate) doc.options.emitCertificate = *overrides.emitCertificate;
    if (overrides.emitStats) doc.options.emitStats = *overrides.emitStats;
    const ResultDocument result = run(doc);
    out.output = textFormat ? toText(result) : toJson(result).dump(2) + "\n";
    out.exitCode = result.exitCode();
    if (out.exitCode == ExitCode::CertificateFailed) out.diagnostics = "certificate failed";
  } catch (const DocumentError& e) {
    out.diagnostics = e.what();
    out.exitCode = ExitCode::InvalidDocument;
  } catch (const NotDInvariant& e) {
    out.diagnostics = e.what();
    if (parsed) out.diagnostics += witnessText(*parsed, e);
    out.exitCode = ExitCode::NotDInvariant;
  } catch (const DependentConditions& e) {
    out.diagnostics = e.what();
    out.exitCode = ExitCode::Dependent;
  } catch (const DependentPolynomials& e) {
    out.diagnostics = e.what();
    out.exitCode = ExitCode::Dependent;
  } catch (const Error& e) {
    out.diagnostics = e.what();
    out.exitCode = ExitCode::InvalidDocument;
  } catch (const std::exception& e) {
    out.diagnostics = std::string("internal error: ") + e.what();
    out.exitCode = ExitCode::Internal;
  }
  return out;
}

}  // namespace idealgb
