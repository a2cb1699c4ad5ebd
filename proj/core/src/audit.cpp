#include "oagw/audit.hpp"

#include <numeric>

#include "oagw/random.hpp"

namespace oagw {

CorpusKind parseCorpusKind(std::string_view text) {
  if (text == "exists") return CorpusKind::Exists;
  if (text == "ea") return CorpusKind::ExistsForall;
  throw PreconditionError("unknown corpus kind '" + std::string(text) + "' (expected exists or ea)");
}

Formula psiFormula(unsigned long n, const Term& u, const Term& v) {
  RPhiAtom r;
  r.groups.push_back(BoundGroup{{"y"}, v});
  r.system.push_back(CongAtom{n, Term::variable("y"), u});
  return Formula::negate(Formula::atom(std::move(r)));
}

namespace {

/// Drops the critical-circle entry, landing in the F1 image.
GroupElement projectToImage(const GroupElement& e) {
  const LeadDescriptor critical{Position::criticalCircle(), 0};
  const Rational q = e.coefficient(critical);
  if (q == 0) return e;
  return e - GroupElement::unit(e.construction(), critical, q);
}

Term x() { return Term::variable("x"); }
Term k(const GroupElement& e) { return Term::constant(e); }

class CorpusBuilder {
 public:
  CorpusBuilder(Construction c, Rng& rng) : c_(c), rng_(rng) {}

  /// One atom true at w, or nullopt after a few unlucky draws.
  std::optional<Formula> existsAtom(const GroupElement& w) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const unsigned long n = chance(rng_, 1, 2) ? 2 : 3;
      Formula f = Formula::top();
      switch (uniform(rng_, 0, 5)) {
        case 0:
          f = Formula::atom(LtAtom{k(image(w - randomPositive(c_, rng_, shape_))), x()});
          break;
        case 1:
          f = Formula::atom(LtAtom{x(), k(image(w + randomPositive(c_, rng_, shape_)))});
          break;
        case 2:
          f = Formula::atom(CongAtom{n, x(), k(image(w + static_cast<long>(n) * randomElement(c_, rng_, shape_)))});
          break;
        case 3:
          f = Formula::negate(Formula::atom(CongAtom{n, x(), k(image(randomElement(c_, rng_, shape_)))}));
          break;
        case 4:
          f = Formula::atom(EqAtom{Term::variable("x", 2), k(image(2 * w))});
          break;
        default: {
          RPhiAtom r;
          r.groups.push_back(BoundGroup{{"z"}, x()});
          r.system.push_back(CongAtom{n, Term::variable("z"), k(image(randomElement(c_, rng_, shape_)))});
          f = Formula::atom(std::move(r));
        }
      }
      if (holdsAt(f, w)) return f;
    }
    return std::nullopt;
  }

  std::optional<Formula> psiAtom(const GroupElement& w) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const unsigned long n = chance(rng_, 1, 2) ? 2 : 3;
      const GroupElement p = positiveImage();
      Formula f = chance(rng_, 1, 2) ? psiFormula(n, k(p), x()) : psiFormula(n, x(), k(p));
      if (chance(rng_, 1, 3)) {
        const unsigned long n2 = n == 2 ? 3 : 2;
        f = Formula::disj(f, chance(rng_, 1, 2) ? psiFormula(n2, k(p), x()) : psiFormula(n2, x(), k(p)));
      }
      if (holdsAt(f, w)) return f;
    }
    return std::nullopt;
  }

  Formula sentence(CorpusKind kind) {
    for (;;) {
      const GroupElement w = kind == CorpusKind::Exists ? randomElement(c_, rng_, witnessShape_)
                                                        : randomPositive(c_, rng_, witnessShape_);
      std::vector<Formula> atoms;
      if (kind == CorpusKind::ExistsForall) atoms.push_back(Formula::atom(LtAtom{Term(), x()}));
      const long wanted = uniform(rng_, 2, 3);
      for (long i = 0; i < wanted; ++i) {
        auto a = kind == CorpusKind::Exists ? existsAtom(w) : psiAtom(w);
        if (a) atoms.push_back(std::move(*a));
      }
      if (atoms.size() < 2) continue;
      Formula body = foldLogic<GroupAtom>(atoms.begin(), atoms.end(), Formula::top(), Formula::conj);
      return Formula::exists("x", std::move(body));
    }
  }

 private:
  GroupElement image(const GroupElement& e) const { return projectToImage(e); }

  /// A positive element of the F1 image (projection can cancel the lead).
  GroupElement positiveImage() {
    for (;;) {
      GroupElement p = image(randomPositive(c_, rng_, shape_));
      if (p.sign() > 0) return p;
    }
  }

  bool holdsAt(const Formula& f, const GroupElement& w) const {
    return evaluate(f, Env{{"x", w}}, FragmentConfig{}, Domain{c_, std::nullopt}).verdict == Verdict::True;
  }

  Construction c_;
  Rng& rng_;
  ElementShape shape_{.maxTerms = 3};
  ElementShape witnessShape_{.maxTerms = 2, .maxNumerator = 2};
};

/// Leading existential variables and the body beneath them.
std::pair<std::vector<std::string>, Formula> existentialPrefix(const Formula& f) {
  std::vector<std::string> vars;
  Formula cur = f;
  while (cur.kind() == Connective::Exists) {
    vars.push_back(cur.variable());
    cur = cur.child();
  }
  return {vars, cur};
}

std::string renderBindings(const std::vector<std::pair<std::string, GroupElement>>& bindings) {
  std::string out;
  for (const auto& [name, value] : bindings) out += (out.empty() ? "" : ", ") + name + "=" + formatElement(value);
  return out;
}

}  // namespace

std::vector<CorpusEntry> generateCorpus(CorpusKind kind, Construction c, std::size_t count, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = caseRng(seed, i);
    CorpusBuilder builder(c, rng);
    out.push_back({builder.sentence(kind), {}});
  }
  return out;
}

SuiteReport closureAudit(const Domain& sub, const Domain& sup, std::span<const CorpusEntry> corpus,
                         const FragmentConfig& cfg, std::uint64_t seed) {
  if (sub.construction != sup.construction) throw ConstructionMismatch("closure audit across constructions");
  const Construction c = sub.construction;
  SuiteReport report;
  report.suite = "closure-audit";
  report.construction = c;
  report.seed = seed;

  for (const auto& entry : corpus) {
    for (const auto& [name, value] : entry.env) {
      if (!sub.contains(value)) {
        throw PreconditionError("binding " + name + "=" + formatElement(value) + " lies outside the " + sub.describe());
      }
    }
    // Per-entry pool: the configured generators, then probes around the
    // entry's constants and bindings.
    std::vector<GroupElement> seeds = formulaConstants(entry.formula);
    for (const auto& [name, value] : entry.env) seeds.push_back(value);
    FragmentConfig local = cfg;
    for (auto& g : probePool(c, seeds)) local.generatorPool.push_back(std::move(g));

    const EvalResult inSup = evaluate(entry.formula, entry.env, local, sup);
    const EvalResult inSub = evaluate(entry.formula, entry.env, local, sub);

    CaseStatus status = CaseStatus::Pass;
    std::string detail = "sup " + std::string(toString(inSup.verdict));
    if (!inSup.bindings.empty()) detail += " [" + renderBindings(inSup.bindings) + "]";
    detail += "; sub " + std::string(toString(inSub.verdict));
    if (!inSub.bindings.empty()) detail += " [" + renderBindings(inSub.bindings) + "]";

    if (inSup.verdict == Verdict::Unknown) {
      status = CaseStatus::Unknown;
    } else if (inSup.verdict == Verdict::True && inSub.verdict != Verdict::True) {
      status = CaseStatus::Fail;
      const bool f1Image = sub.image && sub.image->which == EmbeddingKind::F1;
      if (f1Image) {
        auto [vars, body] = existentialPrefix(entry.formula);
        Env witnesses;
        for (const auto& [name, value] : inSup.bindings) {
          if (std::find(vars.begin(), vars.end(), name) != vars.end() && !witnesses.contains(name)) {
            witnesses.emplace(name, value);
          }
        }
        const auto moduli = formulaModuli(entry.formula);
        const unsigned long modulus =
            std::accumulate(moduli.begin(), moduli.end(), 1UL, [](unsigned long a, unsigned long b) { return std::lcm(a, b); });
        auto accept = [&](const Env& moved) {
          Env scope = entry.env;
          for (const auto& [name, value] : moved) {
            if (!sub.contains(value)) return false;
            scope.insert_or_assign(name, value);
          }
          return evaluate(body, scope, local, sub).verdict == Verdict::True;
        };
        if (witnesses.size() == vars.size()) {
          if (auto moved = transferIntoF1Image(witnesses, modulus, accept)) {
            status = CaseStatus::Pass;
            std::vector<std::pair<std::string, GroupElement>> shown(moved->begin(), moved->end());
            detail += "; transferred witness [" + renderBindings(shown) + "]";
          }
        }
      }
      if (status == CaseStatus::Fail) detail += "; violation: no witness in the " + sub.describe();
    }
    CaseRecord& r = report.add(seed, status, std::move(detail));
    r.inputs.emplace_back("formula", printFormula(entry.formula));
    for (const auto& [name, value] : entry.env) r.inputs.emplace_back(name, formatElement(value));
  }
  return report;
}

}  // namespace oagw
