#include "oagw/report.hpp"

#include <json.hpp>

namespace oagw {

std::string_view toString(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass:
      return "pass";
    case CaseStatus::Fail:
      return "fail";
    case CaseStatus::Unknown:
      return "unknown";
  }
  return "?";
}

CaseRecord& SuiteReport::add(std::uint64_t caseSeed, CaseStatus status, std::string detail) {
  CaseRecord& r = cases.emplace_back();
  r.index = cases.size() - 1;
  r.seed = caseSeed;
  r.status = status;
  r.detail = std::move(detail);
  return r;
}

SuiteCounts SuiteReport::counts() const {
  SuiteCounts c;
  for (const auto& r : cases) {
    switch (r.status) {
      case CaseStatus::Pass:
        ++c.pass;
        break;
      case CaseStatus::Fail:
        ++c.fail;
        break;
      case CaseStatus::Unknown:
        ++c.unknown;
        break;
    }
  }
  return c;
}

std::string SuiteReport::toJson(bool includeTiming) const {
  // ordered_json keeps the documented field order stable across runs.
  using Json = nlohmann::ordered_json;
  Json doc;
  doc["suite"] = suite;
  doc["construction"] = std::string(toString(construction));
  doc["seed"] = seed;
  const SuiteCounts c = counts();
  doc["counts"] = {{"pass", c.pass}, {"fail", c.fail}, {"unknown", c.unknown}};
  Json list = Json::array();
  for (const auto& r : cases) {
    Json inputs = Json::object();
    for (const auto& [name, value] : r.inputs) inputs[name] = value;
    list.push_back({{"index", r.index},
                    {"seed", r.seed},
                    {"inputs", std::move(inputs)},
                    {"status", std::string(toString(r.status))},
                    {"detail", r.detail}});
  }
  doc["cases"] = std::move(list);
  if (includeTiming && wallTimeMs) doc["wallTimeMs"] = *wallTimeMs;
  return doc.dump(2) + "\n";
}

std::string SuiteReport::summary() const {
  const SuiteCounts c = counts();
  return suite + " [" + std::string(toString(construction)) + "] pass=" + std::to_string(c.pass) +
         " fail=" + std::to_string(c.fail) + " unknown=" + std::to_string(c.unknown);
}

}  // namespace oagw
