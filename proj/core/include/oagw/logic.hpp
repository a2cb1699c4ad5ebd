#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

namespace oagw {

enum class Connective : std::uint8_t { Atom, True, False, Not, And, Or, Implies, Exists, Forall };

/// Immutable propositional/first-order tree over an atom type. Shared
/// structure, value semantics; equality is structural.
template <class A>
class Logic {
 public:
  static Logic atom(A a) { return Logic(Node{Connective::Atom, std::move(a), {}, {}, {}}); }
  static Logic top() { return Logic(Node{Connective::True, {}, {}, {}, {}}); }
  static Logic bottom() { return Logic(Node{Connective::False, {}, {}, {}, {}}); }
  static Logic negate(Logic f) { return Logic(Node{Connective::Not, {}, {}, std::move(f.node_), {}}); }
  static Logic conj(Logic l, Logic r) { return binary(Connective::And, std::move(l), std::move(r)); }
  static Logic disj(Logic l, Logic r) { return binary(Connective::Or, std::move(l), std::move(r)); }
  static Logic implies(Logic l, Logic r) { return binary(Connective::Implies, std::move(l), std::move(r)); }
  static Logic exists(std::string var, Logic body) { return quantifier(Connective::Exists, std::move(var), std::move(body)); }
  static Logic forall(std::string var, Logic body) { return quantifier(Connective::Forall, std::move(var), std::move(body)); }
  static Logic binary(Connective c, Logic l, Logic r) {
    return Logic(Node{c, {}, {}, std::move(l.node_), std::move(r.node_)});
  }
  static Logic quantifier(Connective c, std::string var, Logic body) {
    return Logic(Node{c, {}, std::move(var), std::move(body.node_), {}});
  }

  Connective kind() const { return node_->kind; }
  bool isQuantifier() const { return kind() == Connective::Exists || kind() == Connective::Forall; }
  bool isBinary() const {
    return kind() == Connective::And || kind() == Connective::Or || kind() == Connective::Implies;
  }
  const A& atomValue() const { return node_->atom; }
  const std::string& variable() const { return node_->var; }
  /// Operand of Not, body of a quantifier, or left side of a binary connective.
  Logic child() const { return Logic(node_->lhs); }
  Logic left() const { return Logic(node_->lhs); }
  Logic right() const { return Logic(node_->rhs); }

  friend bool operator==(const Logic& a, const Logic& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind || x.var != y.var) return false;
    if (x.kind == Connective::Atom) return x.atom == y.atom;
    if ((x.lhs == nullptr) != (y.lhs == nullptr) || (x.rhs == nullptr) != (y.rhs == nullptr)) return false;
    if (x.lhs && !(Logic(x.lhs) == Logic(y.lhs))) return false;
    if (x.rhs && !(Logic(x.rhs) == Logic(y.rhs))) return false;
    return true;
  }

 private:
  struct Node {
    Connective kind;
    A atom;
    std::string var;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Logic(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  explicit Logic(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Left fold of `items` with the given binary constructor; `empty` when none.
template <class A, class It, class Join>
Logic<A> foldLogic(It first, It last, Logic<A> empty, Join join) {
  if (first == last) return empty;
  Logic<A> acc = *first;
  for (++first; first != last; ++first) acc = join(std::move(acc), *first);
  return acc;
}

/// Renders a tree with the minimal parentheses for the precedence
/// quantifier < '->' < '|' < '&' < '~'/atom; '->' associates to the right.
template <class A, class AtomPrinter>
std::string printLogic(const Logic<A>& f, const AtomPrinter& printAtom, int minPrec = 0) {
  auto wrap = [&](int prec, std::string s) { return prec < minPrec ? "(" + s + ")" : s; };
  auto sub = [&](const Logic<A>& g, int prec) { return printLogic(g, printAtom, prec); };
  switch (f.kind()) {
    case Connective::Atom:
      return printAtom(f.atomValue());
    case Connective::True:
      return "true";
    case Connective::False:
      return "false";
    case Connective::Not:
      return "~" + sub(f.child(), 4);
    case Connective::And:
      return wrap(3, sub(f.left(), 3) + " & " + sub(f.right(), 4));
    case Connective::Or:
      return wrap(2, sub(f.left(), 2) + " | " + sub(f.right(), 3));
    case Connective::Implies:
      return wrap(1, sub(f.left(), 2) + " -> " + sub(f.right(), 1));
    case Connective::Exists:
    case Connective::Forall:
      return wrap(0, std::string(f.kind() == Connective::Exists ? "E " : "A ") + f.variable() + ". " +
                         sub(f.child(), 0));
  }
  return {};
}

}  // namespace oagw
