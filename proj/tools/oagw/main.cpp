// oagw: command-line driver for the verification suites, the named demos,
// ad-hoc formula evaluation and corpus generation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oagw/audit.hpp"
#include "oagw/evaluate.hpp"
#include "oagw/suites.hpp"

namespace {

using namespace oagw;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

CoefficientField parseField(const std::string& text) {
  if (text == "Q" || text == "q") return CoefficientField::rationals();
  if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f')) {
    return CoefficientField::primeField(std::stoul(text.substr(1)));
  }
  throw PreconditionError("unknown coefficient field '" + text + "' (expected Q or F<p>, e.g. F5)");
}

void writeJson(const SuiteReport& report, const std::string& path, bool timing) {
  if (path.empty()) return;
  const std::string text = report.toJson(timing);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

/// Summary line plus the failing (and, with verbose, every) case.
void printReport(const SuiteReport& report, bool verbose, std::ostream& os) {
  std::size_t shown = 0;
  for (const auto& r : report.cases) {
    const bool interesting = r.status == CaseStatus::Fail || verbose;
    if (!interesting) continue;
    if (!verbose && ++shown > 20) {
      os << "  ... further failing cases omitted\n";
      break;
    }
    os << "  [" << toString(r.status) << "] #" << r.index;
    for (const auto& [name, value] : r.inputs) os << " " << name << "=" << value;
    if (!r.detail.empty()) os << "\n      " << r.detail;
    os << "\n";
  }
  os << report.summary();
  if (report.wallTimeMs) os << " (" << static_cast<long long>(*report.wallTimeMs) << " ms)";
  os << (report.passed() ? "  PASS" : "  FAIL") << "\n";
}

int runCheck(const std::string& suite, const SuiteOptions& options, const std::string& jsonPath, bool timing,
             bool verbose) {
  const SuiteReport report = runSuite(suite, options);
  writeJson(report, jsonPath, timing);
  printReport(report, verbose, jsonPath == "-" ? std::cerr : std::cout);
  return report.passed() ? 0 : kExitFail;
}

int runDemo(const std::string& name, const CoefficientField& field, const std::string& jsonPath) {
  SuiteReport report;
  if (name == "gamma-counterexample") {
    report = demoGammaCounterexample();
  } else if (name == "lambda-repair") {
    report = demoLambdaRepair();
  } else if (name == "ha-witness") {
    report = demoHaWitness(field);
  } else {
    throw PreconditionError("unknown demo '" + name + "'");
  }
  writeJson(report, jsonPath, false);
  std::ostream& os = jsonPath == "-" ? std::cerr : std::cout;
  for (const auto& r : report.cases) {
    os << (r.status == CaseStatus::Pass ? "PASS " : "FAIL ");
    for (const auto& [key, value] : r.inputs) {
      if (key == "assertion" || key == "schema") os << value;
    }
    os << "\n     " << r.detail << "\n";
    for (const auto& [key, value] : r.inputs) {
      if (key != "assertion" && key != "schema") os << "     " << key << ": " << value << "\n";
    }
  }
  os << report.summary() << (report.passed() ? "  PASS" : "  FAIL") << "\n";
  return report.passed() ? 0 : kExitFail;
}

int runEval(Construction c, const std::string& formulaText, const std::vector<std::string>& binds,
            const std::vector<std::string>& poolText, unsigned coeffBound, std::size_t cap, const std::string& domainText,
            std::uint64_t seed) {
  const Formula f = parseFormula(formulaText, c);
  Env env;
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw PreconditionError("binding '" + b + "' is not of the form x=LITERAL");
    env.insert_or_assign(b.substr(0, eq), parseElement(b.substr(eq + 1), c));
  }
  Domain domain{c, std::nullopt};
  if (domainText == "f1") {
    domain.image = EmbeddingId{EmbeddingKind::F1, c};
  } else if (domainText == "f2") {
    domain.image = EmbeddingId{EmbeddingKind::F2, c, true};
  } else if (domainText != "full") {
    throw PreconditionError("unknown domain '" + domainText + "' (expected full, f1 or f2)");
  }
  FragmentConfig cfg;
  cfg.coeffBound = coeffBound;
  cfg.sizeCap = cap;
  cfg.seed = seed;
  for (const auto& p : poolText) cfg.generatorPool.push_back(parseElement(p, c));
  // Probe generators around every constant and binding.
  std::vector<GroupElement> seeds = formulaConstants(f);
  for (const auto& [name, value] : env) seeds.push_back(value);
  for (auto& g : probePool(c, seeds)) cfg.generatorPool.push_back(std::move(g));

  const EvalResult result = evaluate(f, env, cfg, domain);
  const Classification cls = classify(f, true);
  std::cout << "formula: " << printFormula(f) << "\n";
  std::cout << "class:   " << (cls.prefix.empty() ? "quantifier-free" : cls.prefix) << " (" << cls.label
            << ", R_phi expanded)\n";
  std::cout << "verdict: " << toString(result.verdict) << "\n";
  for (const auto& [name, value] : result.bindings) {
    std::cout << (result.verdict == Verdict::False ? "counterexample " : "witness ") << name << " = "
              << formatElement(value) << "\n";
  }
  if (result.verdict == Verdict::Unknown) std::cout << "reason:  " << result.reason << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oagw: ordered abelian group workbench"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "run a verification suite");
  std::string suite, constructionText = "lambda", jsonPath, fieldText = "Q";
  std::uint64_t seed = 42;
  std::optional<std::size_t> samples;
  std::optional<unsigned> coeffBound;
  bool timing = false, verbose = false;
  std::vector<std::string> suiteNames;
  for (const auto& info : suiteCatalog()) suiteNames.push_back(info.name);
  check->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suiteNames));
  check->add_option("--construction", constructionText, "gamma or lambda")->check(CLI::IsMember({"gamma", "lambda"}));
  check->add_option("--seed", seed, "suite seed");
  check->add_option("--samples", samples, "number of sampled cases");
  check->add_option("--coeff-bound", coeffBound, "fragment coefficient bound K");
  check->add_option("--json", jsonPath, "write the JSON report to PATH ('-' for stdout)");
  check->add_option("--field", fieldText, "coefficient field of series suites: Q or F<p>");
  check->add_flag("--timing", timing, "include the wall time in the JSON report");
  check->add_flag("-v,--verbose", verbose, "print every case");

  // demo
  auto* demo = app.add_subcommand("demo", "run a named demonstration");
  std::string demoName, demoJson;
  demo->add_option("name", demoName, "gamma-counterexample | lambda-repair | ha-witness")
      ->required()
      ->check(CLI::IsMember({"gamma-counterexample", "lambda-repair", "ha-witness"}));
  demo->add_option("--json", demoJson, "write the JSON report to PATH ('-' for stdout)");
  demo->add_option("--field", fieldText, "coefficient field: Q or F<p>");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a formula with bounded quantifier search");
  std::string formulaText, domainText = "full";
  std::vector<std::string> binds, pool;
  unsigned evalBound = 2;
  std::size_t cap = 4096;
  eval->add_option("--construction", constructionText, "gamma or lambda")
      ->required()
      ->check(CLI::IsMember({"gamma", "lambda"}));
  eval->add_option("--formula", formulaText, "formula text")->required();
  eval->add_option("--bind", binds, "free-variable binding x=LITERAL (repeatable)");
  eval->add_option("--coeff-bound", evalBound, "fragment coefficient bound K");
  eval->add_option("--cap", cap, "fragment size cap (0 = unlimited)");
  eval->add_option("--pool", pool, "extra fragment generator (element literal, repeatable)");
  eval->add_option("--domain", domainText, "quantifier domain: full, f1 or f2 image")
      ->check(CLI::IsMember({"full", "f1", "f2"}));
  eval->add_option("--seed", seed, "fragment enumeration seed");

  // gen corpus
  auto* gen = app.add_subcommand("gen", "generate inputs");
  gen->require_subcommand(1);
  auto* corpus = gen->add_subcommand("corpus", "closure-audit sentences with F1-image parameters");
  std::string kindText;
  std::size_t count = 10;
  corpus->add_option("--kind", kindText, "exists or ea")->required()->check(CLI::IsMember({"exists", "ea"}));
  corpus->add_option("--count", count, "number of sentences")->required();
  corpus->add_option("--construction", constructionText, "gamma or lambda")->check(CLI::IsMember({"gamma", "lambda"}));
  corpus->add_option("--seed", seed, "generator seed");

  // list
  auto* list = app.add_subcommand("list", "list the suite catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const Construction construction = parseConstruction(constructionText);
    if (check->parsed()) {
      SuiteOptions options{construction, seed, samples, coeffBound, parseField(fieldText)};
      return runCheck(suite, options, jsonPath, timing, verbose);
    }
    if (demo->parsed()) return runDemo(demoName, parseField(fieldText), demoJson);
    if (eval->parsed()) return runEval(construction, formulaText, binds, pool, evalBound, cap, domainText, seed);
    if (corpus->parsed()) {
      for (const auto& entry : generateCorpus(parseCorpusKind(kindText), construction, count, seed)) {
        std::cout << printFormula(entry.formula) << "\n";
      }
      return 0;
    }
    if (list->parsed()) {
      for (const auto& info : suiteCatalog()) {
        std::cout << info.name << "  (" << info.defaultSamples << " samples";
        if (info.lambdaOnly) std::cout << ", lambda only";
        if (info.gammaOnly) std::cout << ", gamma only";
        std::cout << ")  " << info.description << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (at offset " << e.offset() << ")\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
