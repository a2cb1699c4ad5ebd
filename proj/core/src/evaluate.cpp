#include "oagw/evaluate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace oagw {

std::string_view toString(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "True";
    case Verdict::False:
      return "False";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

bool Domain::contains(const GroupElement& e) const {
  if (e.construction() != construction) return false;
  return !image || inImage(*image, e);
}

std::string Domain::describe() const {
  std::string out(toString(construction));
  if (image) out += " image of " + std::string(toString(image->which));
  return out;
}

// ---------------------------------------------------------------- R_phi

namespace {

Integer lcmOf(const std::vector<CongAtom>& system) {
  Integer n = 1;
  for (const auto& c : system) {
    Integer m(static_cast<unsigned long>(c.modulus));
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  }
  return n;
}

/// Size of C_k / N C_k for the component kind at k.
unsigned long quotientModulus(ComponentKind kind, const Integer& n) {
  auto primePower = [&](unsigned long p) {
    unsigned long m = 1;
    for (unsigned e = padicValuation(n, p); e > 0; --e) m *= p;
    return m;
  };
  switch (kind) {
    case ComponentKind::Integers:
      return n.get_ui();
    case ComponentKind::Rationals:
      return 1;
    case ComponentKind::LocalAtThree:
      return primePower(3);
    case ComponentKind::LocalAtTwo:
      return primePower(2);
  }
  return 1;
}

/// Image of q (denominator invertible modulo m) in Z/m.
unsigned long residue(const Rational& q, unsigned long m) {
  Integer mod(m);
  Integer inv;
  Integer den(q.get_den());
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw PreconditionError("denominator not invertible in a component quotient");
  }
  Integer r = Integer(q.get_num()) * inv % mod;
  if (r < 0) r += mod;
  return r.get_ui();
}

constexpr std::size_t kSearchLimit = 2'000'000;

bool solvableAt(const std::vector<std::vector<unsigned long>>& rows, const std::vector<unsigned long>& constants,
                const std::vector<std::vector<unsigned long>>& allowed, unsigned long m) {
  std::size_t space = 1;
  for (const auto& a : allowed) {
    space *= std::max<std::size_t>(a.size(), 1);
    if (space > kSearchLimit) throw PreconditionError("R_phi system too large to decide componentwise");
  }
  const std::size_t vars = allowed.size();
  std::vector<unsigned long> sums(constants);
  std::vector<std::size_t> choice(vars, 0);
  // Odometer over the allowed values, updating the row sums incrementally.
  auto addVar = [&](std::size_t v, unsigned long value, bool add) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const unsigned long delta = (rows[r][v] * value) % m;
      sums[r] = add ? (sums[r] + delta) % m : (sums[r] + m - delta) % m;
    }
  };
  for (std::size_t v = 0; v < vars; ++v) addVar(v, allowed[v][0], true);
  for (;;) {
    if (std::all_of(sums.begin(), sums.end(), [](unsigned long s) { return s == 0; })) return true;
    std::size_t v = 0;
    for (; v < vars; ++v) {
      addVar(v, allowed[v][choice[v]], false);
      if (++choice[v] < allowed[v].size()) {
        addVar(v, allowed[v][choice[v]], true);
        break;
      }
      choice[v] = 0;
      addVar(v, allowed[v][0], true);
    }
    if (v == vars) return false;
  }
}

}  // namespace

bool decideRPhi(const RPhiAtom& atom, const Env& env, Construction c) {
  std::vector<std::string> vars;
  std::map<std::string, GroupElement> bounds;
  for (const auto& g : atom.groups) {
    GroupElement x = g.bound.evaluate(env, c);
    if (x.sign() <= 0) return false;  // no z with 0 < z < x
    for (const auto& z : g.vars) {
      vars.push_back(z);
      bounds.emplace(z, x);
    }
  }
  for (const auto& u : atom.inner) vars.push_back(u);
  if (atom.system.empty()) return true;

  const std::set<std::string> local(vars.begin(), vars.end());
  const Integer n = lcmOf(atom.system);
  // d in nG  <=>  (N/n) d in NG, so every row becomes a condition modulo N.
  std::vector<std::vector<Integer>> coeffs;
  std::vector<GroupElement> constants;
  std::set<LeadDescriptor> indices;
  for (const auto& cong : atom.system) {
    const Integer scale = n / Integer(static_cast<unsigned long>(cong.modulus));
    const Term diff = scale * (cong.rhs - cong.lhs);
    std::vector<Integer> row;
    for (const auto& v : vars) row.push_back(diff.coefficient(v));
    coeffs.push_back(std::move(row));
    constants.push_back(diff.without(local).evaluate(env, c));
    for (const auto& t : constants.back().terms()) indices.insert(t.index);
  }

  for (const auto& k : indices) {
    const auto kind = componentKind(c, k.position);
    const unsigned long m = quotientModulus(kind, n);
    if (m == 1) continue;
    std::vector<std::vector<unsigned long>> rows;
    std::vector<unsigned long> consts;
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
      std::vector<unsigned long> row;
      for (const auto& a : coeffs[r]) row.push_back(residue(Rational(a), m));
      rows.push_back(std::move(row));
      consts.push_back(residue(constants[r].coefficient(k), m));
    }
    std::vector<std::vector<unsigned long>> allowed;
    for (const auto& v : vars) {
      std::vector<unsigned long> values;
      auto it = bounds.find(v);
      unsigned long top = m - 1;
      if (it != bounds.end()) {
        const LeadDescriptor lead = *it->second.lead();
        if (k < lead) {
          top = 0;
        } else if (k == lead && kind == ComponentKind::Integers) {
          const Integer beta = it->second.leadCoefficient().get_num();
          if (beta < Integer(top)) top = beta.get_ui();
        }
      }
      for (unsigned long value = 0; value <= top; ++value) values.push_back(value);
      allowed.push_back(std::move(values));
    }
    if (!solvableAt(rows, consts, allowed, m)) return false;
  }
  return true;
}

std::optional<Formula> negRphiNormalize(const RPhiAtom& atom, const Env& env, Construction c) {
  if (!atom.inner.empty()) return std::nullopt;
  unsigned long modulus = 0;
  for (const auto& cong : atom.system) {
    if (modulus != 0 && cong.modulus != modulus) return std::nullopt;
    modulus = cong.modulus;
  }

  auto constantTerm = [&](const Term& t) {
    const GroupElement value = t.evaluate(env, c);
    return Term::constant(value);
  };

  std::map<std::string, Term> boundOf;
  std::vector<Formula> disjuncts;
  for (const auto& g : atom.groups) {
    const Term x = constantTerm(g.bound);
    disjuncts.push_back(Formula::negate(Formula::atom(LtAtom{Term(), x})));
    for (const auto& z : g.vars) boundOf.emplace(z, x);
  }

  // Union-find over bounded variables and constant sides.
  const std::set<std::string> zs = atom.boundVariables();
  std::vector<std::size_t> parent;
  std::vector<std::optional<Term>> constantOf;  // set for constant nodes
  std::map<std::string, std::size_t> nodeOf;
  std::map<std::string, std::optional<std::size_t>> directLink;  // z -> constant node directly congruent
  auto makeNode = [&](std::optional<Term> t) {
    parent.push_back(parent.size());
    constantOf.push_back(std::move(t));
    return parent.size() - 1;
  };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [z, x] : boundOf) nodeOf.emplace(z, makeNode(std::nullopt));

  for (const auto& cong : atom.system) {
    std::array<std::size_t, 2> nodes{};
    std::array<std::optional<std::string>, 2> bare;
    const std::array<const Term*, 2> sides{&cong.lhs, &cong.rhs};
    for (std::size_t s = 0; s < 2; ++s) {
      const Term& t = *sides[s];
      if (auto v = t.asBareVariable(); v && zs.contains(*v)) {
        nodes[s] = nodeOf.at(*v);
        bare[s] = v;
      } else if (!t.mentionsAny(zs)) {
        nodes[s] = makeNode(constantTerm(t));
      } else {
        return std::nullopt;
      }
    }
    for (std::size_t s = 0; s < 2; ++s) {
      if (bare[s] && !bare[1 - s] && !directLink[*bare[s]]) directLink[*bare[s]] = nodes[1 - s];
    }
    parent[find(nodes[0])] = find(nodes[1]);
  }

  std::map<std::size_t, std::vector<std::size_t>> constantsByRoot;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (constantOf[i]) constantsByRoot[find(i)].push_back(i);
  }
  for (const auto& [root, members] : constantsByRoot) {
    for (std::size_t i = 1; i < members.size(); ++i) {
      disjuncts.push_back(Formula::negate(
          Formula::atom(CongAtom{modulus, *constantOf[members.front()], *constantOf[members[i]]})));
    }
  }
  for (const auto& [z, x] : boundOf) {
    auto it = constantsByRoot.find(find(nodeOf.at(z)));
    if (it == constantsByRoot.end()) continue;
    const auto link = directLink[z];
    const std::size_t p = link ? *link : it->second.front();
    disjuncts.push_back(Formula::atom(IdxAtom{modulus, *constantOf[p], x}));
  }
  return foldLogic<GroupAtom>(disjuncts.begin(), disjuncts.end(), Formula::bottom(), &Formula::disj);
}

// ---------------------------------------------------------------- evaluation

namespace {

bool evaluateClosed(const Formula& f, const Env& env, Construction c) {
  switch (f.kind()) {
    case Connective::Atom:
      return evaluateAtom(f.atomValue(), env, c);
    case Connective::True:
      return true;
    case Connective::False:
      return false;
    case Connective::Not:
      return !evaluateClosed(f.child(), env, c);
    case Connective::And:
      return evaluateClosed(f.left(), env, c) && evaluateClosed(f.right(), env, c);
    case Connective::Or:
      return evaluateClosed(f.left(), env, c) || evaluateClosed(f.right(), env, c);
    case Connective::Implies:
      return !evaluateClosed(f.left(), env, c) || evaluateClosed(f.right(), env, c);
    default:
      throw PreconditionError("quantifier inside a quantifier-free evaluation");
  }
}

}  // namespace

bool evaluateAtom(const GroupAtom& atom, const Env& env, Construction c) {
  return std::visit(
      [&](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, LtAtom>) {
          return a.lhs.evaluate(env, c) < a.rhs.evaluate(env, c);
        } else if constexpr (std::is_same_v<T, EqAtom>) {
          return a.lhs.evaluate(env, c) == a.rhs.evaluate(env, c);
        } else if constexpr (std::is_same_v<T, CongAtom>) {
          return congruent(a.lhs.evaluate(env, c), a.rhs.evaluate(env, c), a.modulus);
        } else if constexpr (std::is_same_v<T, IdxAtom>) {
          return descriptorBlocks(a.modulus, a.cls.evaluate(env, c), a.bound.evaluate(env, c));
        } else {
          if (auto nf = negRphiNormalize(a, env, c)) return !evaluateClosed(*nf, {}, c);
          return decideRPhi(a, env, c);
        }
      },
      atom);
}

namespace {

struct Outcome {
  Verdict verdict;
  std::vector<std::pair<std::string, GroupElement>> path;
};

Verdict negateVerdict(Verdict v) {
  if (v == Verdict::True) return Verdict::False;
  if (v == Verdict::False) return Verdict::True;
  return Verdict::Unknown;
}

class Evaluator {
 public:
  Evaluator(Construction c, std::vector<GroupElement> range) : c_(c), range_(std::move(range)) {}

  Outcome eval(const Formula& f, Env& env) {
    switch (f.kind()) {
      case Connective::Atom:
        return {evaluateAtom(f.atomValue(), env, c_) ? Verdict::True : Verdict::False, {}};
      case Connective::True:
        return {Verdict::True, {}};
      case Connective::False:
        return {Verdict::False, {}};
      case Connective::Not: {
        Outcome o = eval(f.child(), env);
        o.verdict = negateVerdict(o.verdict);
        return o;
      }
      case Connective::And:
        return junction(f.left(), f.right(), env, Verdict::False, false);
      case Connective::Or:
        return junction(f.left(), f.right(), env, Verdict::True, false);
      case Connective::Implies:
        return junction(f.left(), f.right(), env, Verdict::True, true);
      case Connective::Exists:
        return quantifier(f, env, Verdict::True);
      case Connective::Forall:
        return quantifier(f, env, Verdict::False);
    }
    return {Verdict::Unknown, {}};
  }

 private:
  /// And (decisive = False) / Or (decisive = True); Implies negates the left side.
  Outcome junction(const Formula& l, const Formula& r, Env& env, Verdict decisive, bool negateLeft) {
    Outcome a = eval(l, env);
    if (negateLeft) a.verdict = negateVerdict(a.verdict);
    if (a.verdict == decisive) return a;
    Outcome b = eval(r, env);
    if (b.verdict == decisive) return b;
    if (a.verdict == Verdict::Unknown || b.verdict == Verdict::Unknown) return {Verdict::Unknown, {}};
    a.path.insert(a.path.end(), b.path.begin(), b.path.end());
    return a;
  }

  Outcome quantifier(const Formula& f, Env& env, Verdict decisive) {
    const std::string& var = f.variable();
    std::optional<GroupElement> saved;
    if (auto it = env.find(var); it != env.end()) saved = it->second;
    Outcome result{Verdict::Unknown, {}};
    for (const auto& candidate : range_) {
      env.insert_or_assign(var, candidate);
      Outcome o = eval(f.child(), env);
      if (o.verdict == decisive) {
        result.verdict = decisive;
        result.path.emplace_back(var, candidate);
        result.path.insert(result.path.end(), o.path.begin(), o.path.end());
        break;
      }
    }
    if (saved) {
      env.insert_or_assign(var, *saved);
    } else {
      env.erase(var);
    }
    return result;
  }

  Construction c_;
  std::vector<GroupElement> range_;
};

bool hasQuantifier(const Formula& f) {
  switch (f.kind()) {
    case Connective::Exists:
    case Connective::Forall:
      return true;
    case Connective::Not:
      return hasQuantifier(f.child());
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      return hasQuantifier(f.left()) || hasQuantifier(f.right());
    default:
      return false;
  }
}

}  // namespace

EvalResult evaluate(const Formula& f, const Env& env, const FragmentConfig& cfg, const Domain& domain) {
  const Construction c = domain.construction;
  for (const auto& v : freeVariables(f)) {
    if (!env.contains(v)) throw PreconditionError("unbound variable '" + v + "'");
  }
  std::vector<GroupElement> params;
  for (const auto& [name, value] : env) {
    if (value.construction() != c) throw ConstructionMismatch("binding '" + name + "' has the wrong construction");
    params.push_back(value);
  }
  for (auto& k : formulaConstants(f)) {
    if (k.construction() != c) throw ConstructionMismatch("formula constant has the wrong construction");
    params.push_back(std::move(k));
  }

  std::vector<GroupElement> range;
  if (hasQuantifier(f)) {
    for (auto& e : fragment(c, params, cfg)) {
      if (domain.contains(e)) range.push_back(std::move(e));
    }
  }
  EvalResult result;
  result.rangeSize = range.size();
  Evaluator evaluator(c, std::move(range));
  Env scope = env;
  Outcome o = evaluator.eval(f, scope);
  result.verdict = o.verdict;
  result.bindings = std::move(o.path);
  if (o.verdict == Verdict::Unknown) {
    result.reason = "not decided within " + std::to_string(result.rangeSize) + " candidates of the " +
                    domain.describe() + " (coefficient bound " + std::to_string(cfg.coeffBound) + ", size cap " +
                    std::to_string(cfg.sizeCap) + ")";
  }
  return result;
}

std::optional<Env> transferIntoF1Image(const Env& values, unsigned long modulus,
                                       const std::function<bool(const Env&)>& accept, unsigned attempts) {
  const LeadDescriptor critical{Position::criticalCircle(), 0};
  const LeadDescriptor target{Position::g2Square(0), 0};
  Integer base(modulus);
  for (const auto& [name, v] : values) {
    const Rational q = v.coefficient(critical);
    if (q != 0) {
      Integer den(q.get_den());
      mpz_lcm(base.get_mpz_t(), base.get_mpz_t(), den.get_mpz_t());
    }
  }
  Integer scale = base;
  for (unsigned attempt = 0; attempt < attempts; ++attempt, scale *= 2) {
    Env moved;
    for (const auto& [name, v] : values) {
      const Rational q = v.coefficient(critical);
      if (q == 0) {
        moved.emplace(name, v);
        continue;
      }
      const Construction c = v.construction();
      moved.emplace(name, v - GroupElement::unit(c, critical, q) + GroupElement::unit(c, target, Rational(scale * q)));
    }
    if (accept(moved)) return moved;
  }
  return std::nullopt;
}

}  // namespace oagw
