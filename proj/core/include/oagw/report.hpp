#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oagw/group.hpp"

namespace oagw {

enum class CaseStatus : std::uint8_t { Pass, Fail, Unknown };

std::string_view toString(CaseStatus s);

struct CaseRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  /// Inputs rendered as literals, in insertion order.
  std::vector<std::pair<std::string, std::string>> inputs;
  CaseStatus status = CaseStatus::Pass;
  std::string detail;
};

struct SuiteCounts {
  std::size_t pass = 0, fail = 0, unknown = 0;
  friend bool operator==(const SuiteCounts&, const SuiteCounts&) = default;
};

/// Outcome of one verification suite. Reproducible from (suite, options,
/// seed); the wall time is kept out of the JSON unless requested.
struct SuiteReport {
  std::string suite;
  Construction construction = Construction::Lambda;
  std::uint64_t seed = 0;
  std::vector<CaseRecord> cases;
  std::optional<double> wallTimeMs;

  /// Appends a case; index is its position, seed the per-case seed.
  CaseRecord& add(std::uint64_t caseSeed, CaseStatus status, std::string detail = {});

  SuiteCounts counts() const;
  /// No case failed.
  bool passed() const { return counts().fail == 0; }

  /// Stable-field JSON document; wallTimeMs is included only when set and
  /// includeTiming holds.
  std::string toJson(bool includeTiming = false) const;
  /// One-line human summary: "suite [construction] pass=.. fail=.. unknown=..".
  std::string summary() const;
};

}  // namespace oagw
