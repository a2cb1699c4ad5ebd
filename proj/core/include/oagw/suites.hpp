#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oagw/formula.hpp"
#include "oagw/hahn.hpp"
#include "oagw/report.hpp"

namespace oagw {

struct SuiteOptions {
  Construction construction = Construction::Lambda;
  std::uint64_t seed = 42;
  std::optional<std::size_t> samples;  // suite default when absent
  std::optional<unsigned> coeffBound;  // suite default when absent
  CoefficientField field;              // series suites
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::size_t defaultSamples = 0;
  unsigned defaultCoeffBound = 0;
  bool lambdaOnly = false;
  bool gammaOnly = false;
};

/// Every suite runSuite accepts, in catalog order.
const std::vector<SuiteInfo>& suiteCatalog();
const SuiteInfo* findSuite(std::string_view name);

/// Runs a catalog suite. Per-case randomness is derived from (seed, case
/// index), so reports are reproducible. Throws PreconditionError for an
/// unknown name and ConstructionMismatch when the suite does not exist for
/// the requested construction.
SuiteReport runSuite(std::string_view name, const SuiteOptions& options);

/// E x. 0 < x & (psi2(c,x) | psi3(c,x)) & (psi2(x,b) | psi3(x,b)):
/// "some positive x has I(c) < I(x) < I(b)".
Formula intervalSentence(const GroupElement& b, const GroupElement& c);

/// Gamma: b = {G2[0].s: 1}, c = {G2[1].s: 1}. True in the full group with
/// witness a = {G2[0].c: 1}; no witness in the F1 image fragments up to the
/// coefficient bound (default 4); every full-group fragment witness has a
/// nonzero critical-circle entry.
SuiteReport demoGammaCounterexample(unsigned maxCoeffBound = 4);

/// Lambda: the same sentence has witnesses inside the F1 image, found by
/// image-restricted search, for square-supported parameters.
SuiteReport demoLambdaRepair();

/// witnessHAnotInA: x in A, h(x) not in A.
SuiteReport demoHaWitness(CoefficientField field = {});

}  // namespace oagw
