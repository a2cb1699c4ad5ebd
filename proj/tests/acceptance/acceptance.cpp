// Acceptance run: every criterion at its full sample count, one PASS/FAIL
// line each, then the total wall time. Exit status is nonzero iff any line
// fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oagw/suites.hpp"

namespace {

using namespace oagw;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void absorb(const SuiteReport& r, bool unknownAllowed = true) {
    const SuiteCounts n = r.counts();
    ok = ok && n.fail == 0 && (unknownAllowed || n.unknown == 0);
    if (!detail.empty()) detail += "; ";
    detail += r.summary();
  }
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + ("violated: " + what);
    }
  }
};

SuiteReport run(const char* suite, Construction c, std::size_t samples, std::optional<unsigned> coeffBound = {}) {
  SuiteOptions o;
  o.construction = c;
  o.samples = samples;
  o.coeffBound = coeffBound;
  return runSuite(suite, o);
}

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
  constexpr Construction L = Construction::Lambda;
  constexpr Construction G = Construction::Gamma;

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };

  const std::vector<Criterion> criteria = {
      {1, "psi closed form vs definitional search (2000 pairs per construction, K = 3, < 60 s)",
       [&] {
         Outcome o;
         const auto start = Clock::now();
         for (Construction c : {L, G}) {
           const SuiteReport r = run("psi-vs-search", c, 2000, 3);
           o.absorb(r);
           o.require(r.cases.size() == 2000, "2000 cases");
         }
         const double s = secondsSince(start);
         o.require(s < 60, "runtime below 60 s");
         o.detail += "; " + std::to_string(s).substr(0, 5) + " s";
         return o;
       }},
      {2, "H' descriptor vs union search, locality under perturbation (500 each)",
       [&] {
         Outcome o;
         for (Construction c : {L, G}) {
           o.absorb(run("hprime-descriptor", c, 500));
           o.absorb(run("hprime-locality", c, 500), false);
         }
         return o;
       }},
      {3, "Lambda_1 formula vs support check (1000 random + >= 50 boundary cases)",
       [&] {
         Outcome o;
         const SuiteReport r = run("lambda1-formula", L, 1000);
         o.absorb(r, false);
         o.require(r.cases.size() >= 1050, "at least 50 boundary cases");
         return o;
       }},
      {4, "embedding laws (10^4 checks per map per construction)",
       [&] {
         Outcome o;
         for (Construction c : {L, G}) o.absorb(run("embedding-laws", c, 10000), false);
         return o;
       }},
      {5, "Gamma counterexample (full-group witness, no image witness up to K = 4, < 120 s)",
       [&] {
         Outcome o;
         const auto start = Clock::now();
         o.absorb(demoGammaCounterexample(4), false);
         const double s = secondsSince(start);
         o.require(s < 120, "runtime below 120 s");
         o.detail += "; " + std::to_string(s).substr(0, 5) + " s";
         return o;
       }},
      {6, "Lambda repair (image-internal witnesses, headline assertions decided)",
       [&] {
         Outcome o;
         const SuiteReport r = demoLambdaRepair();
         o.absorb(r, false);
         o.require(!r.cases.empty(), "at least one schema");
         return o;
       }},
      {7, "F2-image interval solutions (200 samples)",
       [&] {
         Outcome o;
         o.absorb(run("f2-interval", L, 200), false);
         return o;
       }},
      {8, "Hahn ring axioms and valuation laws (10^3 samples)",
       [&] {
         Outcome o;
         for (Construction c : {L, G}) o.absorb(run("hahn-ring", c, 1000), false);
         return o;
       }},
      {9, "A closed under + and *, lift of the valuation ring, h(A) not in A",
       [&] {
         Outcome o;
         o.absorb(run("a-membership", L, 1000), false);
         o.absorb(demoHaWitness(), false);
         return o;
       }},
      {10, "valuation statements vs ring translation (300 samples)",
       [&] {
         Outcome o;
         for (Construction c : {L, G}) o.absorb(run("translation-soundness", c, 300), false);
         return o;
       }},
      {11, "perturbation into the F1 image (200 samples)",
       [&] {
         Outcome o;
         o.absorb(run("perturbation", L, 200), false);
         return o;
       }},
      {12, "truncated inverse precision (200 samples)",
       [&] {
         Outcome o;
         for (Construction c : {L, G}) o.absorb(run("truncated-inverse", c, 200), false);
         return o;
       }},
  };

  const auto start = Clock::now();
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::printf("[%s] criterion %2d: %s -- %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  const double total = secondsSince(start);
  const bool inTime = total < 300;
  all = all && inTime;
  std::printf("[%s] total wall time %.1f s (budget 300 s)\n", inTime ? "PASS" : "FAIL", total);
  return all ? 0 : 1;
}
