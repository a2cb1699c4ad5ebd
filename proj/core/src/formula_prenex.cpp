#include <algorithm>
#include <map>
#include <tuple>

#include "oagw/formula.hpp"

namespace oagw {

namespace {

Term renameTerm(const Term& t, const std::string& from, const std::string& to) {
  const Integer k = t.coefficient(from);
  if (k == 0) return t;
  return t.without({from}) + Term::variable(to, k);
}

GroupAtom renameAtom(const GroupAtom& atom, const std::string& from, const std::string& to) {
  return std::visit(
      [&](const auto& a) -> GroupAtom {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, LtAtom>) {
          return LtAtom{renameTerm(a.lhs, from, to), renameTerm(a.rhs, from, to)};
        } else if constexpr (std::is_same_v<T, EqAtom>) {
          return EqAtom{renameTerm(a.lhs, from, to), renameTerm(a.rhs, from, to)};
        } else if constexpr (std::is_same_v<T, CongAtom>) {
          return CongAtom{a.modulus, renameTerm(a.lhs, from, to), renameTerm(a.rhs, from, to)};
        } else if constexpr (std::is_same_v<T, IdxAtom>) {
          return IdxAtom{a.modulus, renameTerm(a.cls, from, to), renameTerm(a.bound, from, to)};
        } else {
          RPhiAtom out = a;
          for (auto& g : out.groups) g.bound = renameTerm(g.bound, from, to);
          if (!a.boundVariables().contains(from)) {
            for (auto& c : out.system) {
              c.lhs = renameTerm(c.lhs, from, to);
              c.rhs = renameTerm(c.rhs, from, to);
            }
          }
          return out;
        }
      },
      atom);
}

Formula renameFree(const Formula& f, const std::string& from, const std::string& to) {
  switch (f.kind()) {
    case Connective::Atom:
      return Formula::atom(renameAtom(f.atomValue(), from, to));
    case Connective::True:
    case Connective::False:
      return f;
    case Connective::Not:
      return Formula::negate(renameFree(f.child(), from, to));
    case Connective::Exists:
    case Connective::Forall:
      if (f.variable() == from) return f;
      return Formula::quantifier(f.kind(), f.variable(), renameFree(f.child(), from, to));
    default:
      return Formula::binary(f.kind(), renameFree(f.left(), from, to), renameFree(f.right(), from, to));
  }
}

void collectNames(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Atom: {
      const auto& atom = f.atomValue();
      std::visit(
          [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, RPhiAtom>) {
              for (const auto& v : a.boundVariables()) out.insert(v);
              for (const auto& g : a.groups) g.bound.collectVariables(out);
              for (const auto& c : a.system) {
                c.lhs.collectVariables(out);
                c.rhs.collectVariables(out);
              }
            } else if constexpr (std::is_same_v<T, IdxAtom>) {
              a.cls.collectVariables(out);
              a.bound.collectVariables(out);
            } else {
              a.lhs.collectVariables(out);
              a.rhs.collectVariables(out);
            }
          },
          atom);
      return;
    }
    case Connective::True:
    case Connective::False:
      return;
    case Connective::Not:
      collectNames(f.child(), out);
      return;
    case Connective::Exists:
    case Connective::Forall:
      out.insert(f.variable());
      collectNames(f.child(), out);
      return;
    default:
      collectNames(f.left(), out);
      collectNames(f.right(), out);
  }
}

class Renamer {
 public:
  explicit Renamer(const Formula& f) : used_(freeVariables(f)) { collectNames(f, names_); }

  Formula apart(const Formula& f) {
    switch (f.kind()) {
      case Connective::Atom:
      case Connective::True:
      case Connective::False:
        return f;
      case Connective::Not:
        return Formula::negate(apart(f.child()));
      case Connective::Exists:
      case Connective::Forall: {
        std::string var = f.variable();
        Formula body = f.child();
        if (used_.contains(var)) {
          std::string fresh;
          for (unsigned k = 1;; ++k) {
            fresh = var + "_" + std::to_string(k);
            if (!used_.contains(fresh) && !names_.contains(fresh)) break;
          }
          body = renameFree(body, var, fresh);
          var = fresh;
        }
        used_.insert(var);
        return Formula::quantifier(f.kind(), var, apart(body));
      }
      default: {
        Formula l = apart(f.left());
        return Formula::binary(f.kind(), std::move(l), apart(f.right()));
      }
    }
  }

 private:
  std::set<std::string> used_;
  std::set<std::string> names_;
};

struct Block {
  Connective q;
  std::vector<std::string> vars;
};

struct Prenexed {
  std::vector<Block> blocks;
  Formula matrix;
};

Connective dual(Connective q) { return q == Connective::Exists ? Connective::Forall : Connective::Exists; }

Formula negateSimplified(const Formula& f) {
  if (f.kind() == Connective::Not) return f.child();
  if (f.kind() == Connective::True) return Formula::bottom();
  if (f.kind() == Connective::False) return Formula::top();
  return Formula::negate(f);
}

void pushBlock(std::vector<Block>& out, Block b) {
  if (!out.empty() && out.back().q == b.q) {
    out.back().vars.insert(out.back().vars.end(), b.vars.begin(), b.vars.end());
  } else {
    out.push_back(std::move(b));
  }
}

/// Interleaves two block sequences with the fewest resulting blocks.
std::vector<Block> mergeBlocks(const std::vector<Block>& a, const std::vector<Block>& b) {
  // cost(i, j, last): blocks still to open for a[i..], b[j..] after emitting `last`.
  std::map<std::tuple<std::size_t, std::size_t, int>, unsigned> memo;
  auto code = [](Connective q) { return q == Connective::Exists ? 1 : 2; };
  auto cost = [&](auto&& self, std::size_t i, std::size_t j, int last) -> unsigned {
    if (i == a.size() && j == b.size()) return 0;
    auto key = std::make_tuple(i, j, last);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    unsigned best = ~0u;
    if (i < a.size() && j < b.size() && a[i].q == b[j].q) {
      best = std::min(best, (code(a[i].q) != last) + self(self, i + 1, j + 1, code(a[i].q)));
    }
    if (i < a.size()) best = std::min(best, (code(a[i].q) != last) + self(self, i + 1, j, code(a[i].q)));
    if (j < b.size()) best = std::min(best, (code(b[j].q) != last) + self(self, i, j + 1, code(b[j].q)));
    memo[key] = best;
    return best;
  };
  std::vector<Block> out;
  std::size_t i = 0, j = 0;
  int last = 0;
  while (i < a.size() || j < b.size()) {
    const unsigned target = cost(cost, i, j, last);
    if (i < a.size() && j < b.size() && a[i].q == b[j].q &&
        (code(a[i].q) != last) + cost(cost, i + 1, j + 1, code(a[i].q)) == target) {
      pushBlock(out, a[i]);
      pushBlock(out, b[j]);
      last = code(a[i].q);
      ++i;
      ++j;
    } else if (i < a.size() && (code(a[i].q) != last) + cost(cost, i + 1, j, code(a[i].q)) == target) {
      pushBlock(out, a[i]);
      last = code(a[i].q);
      ++i;
    } else {
      pushBlock(out, b[j]);
      last = code(b[j].q);
      ++j;
    }
  }
  return out;
}

Prenexed pren(const Formula& f, bool expandRPhi) {
  switch (f.kind()) {
    case Connective::Atom: {
      Prenexed p{{}, f};
      if (expandRPhi) {
        if (const auto* r = std::get_if<RPhiAtom>(&f.atomValue())) {
          const auto vars = r->boundVariables();
          p.blocks.push_back({Connective::Exists, {vars.begin(), vars.end()}});
        }
      }
      return p;
    }
    case Connective::True:
    case Connective::False:
      return {{}, f};
    case Connective::Not: {
      Prenexed p = pren(f.child(), expandRPhi);
      for (auto& b : p.blocks) b.q = dual(b.q);
      p.matrix = negateSimplified(p.matrix);
      return p;
    }
    case Connective::Exists:
    case Connective::Forall: {
      Prenexed inner = pren(f.child(), expandRPhi);
      Prenexed p{{}, inner.matrix};
      pushBlock(p.blocks, {f.kind(), {f.variable()}});
      for (auto& b : inner.blocks) pushBlock(p.blocks, std::move(b));
      return p;
    }
    case Connective::Implies:
      return pren(Formula::disj(Formula::negate(f.left()), f.right()), expandRPhi);
    default: {
      Prenexed l = pren(f.left(), expandRPhi);
      Prenexed r = pren(f.right(), expandRPhi);
      return {mergeBlocks(l.blocks, r.blocks), Formula::binary(f.kind(), l.matrix, r.matrix)};
    }
  }
}

}  // namespace

Formula prenex(const Formula& f) {
  Renamer renamer(f);
  Prenexed p = pren(renamer.apart(f), false);
  Formula out = p.matrix;
  for (auto b = p.blocks.rbegin(); b != p.blocks.rend(); ++b) {
    for (auto v = b->vars.rbegin(); v != b->vars.rend(); ++v) out = Formula::quantifier(b->q, *v, out);
  }
  return out;
}

Classification classify(const Formula& f, bool expandRPhi) {
  Renamer renamer(f);
  Prenexed p = pren(renamer.apart(f), expandRPhi);
  Classification c;
  c.blocks = static_cast<unsigned>(p.blocks.size());
  for (const auto& b : p.blocks) c.prefix += b.q == Connective::Exists ? "∃" : "∀";
  if (p.blocks.empty()) {
    c.label = "Δ0";
  } else {
    c.label = std::string(p.blocks.front().q == Connective::Exists ? "Σ" : "Π") + std::to_string(c.blocks);
  }
  return c;
}

}  // namespace oagw
