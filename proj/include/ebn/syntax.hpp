#pragma once

// Object-language types and terms: simply-typed lambda calculus with unit,
// products, sums, base types, literals, and fully applied primitives.
//
// Both Type and Term are immutable, reference-counted trees. Copies are
// cheap and share structure; nothing is ever mutated after construction.

#include <cstddef>
#include <map>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ebn/rational.hpp"

namespace ebn {

class Type {
public:
  enum class Kind { base, unit, arrow, prod, sum };

  static Type base(std::string name) { return Type(Kind::base, std::move(name), {}, {}); }
  static Type unit() { return Type(Kind::unit, {}, {}, {}); }
  static Type arrow(Type dom, Type cod) { return Type(Kind::arrow, {}, std::move(dom), std::move(cod)); }
  static Type prod(Type l, Type r) { return Type(Kind::prod, {}, std::move(l), std::move(r)); }
  static Type sum(Type l, Type r) { return Type(Kind::sum, {}, std::move(l), std::move(r)); }

  Kind kind() const noexcept { return node_->kind; }
  bool is(Kind k) const noexcept { return node_->kind == k; }

  /// Base-type name; empty for every other kind.
  const std::string& name() const noexcept { return node_->name; }

  /// Left component: domain of an arrow, first of a product, left summand.
  const Type& left() const { return node_->children->first; }
  /// Right component: codomain of an arrow, second of a product, right summand.
  const Type& right() const { return node_->children->second; }

  const Type& dom() const { return left(); }
  const Type& cod() const { return right(); }

  friend bool operator==(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::base: return a.name() == b.name();
      case Kind::unit: return true;
      default: return a.left() == b.left() && a.right() == b.right();
    }
  }

private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const std::pair<Type, Type>> children;
  };

  Type(Kind k, std::string name, std::optional<Type> l, std::optional<Type> r);

  std::shared_ptr<const Node> node_;
};

inline Type::Type(Kind k, std::string name, std::optional<Type> l, std::optional<Type> r) {
  std::shared_ptr<const std::pair<Type, Type>> children;
  if (l && r) children = std::make_shared<const std::pair<Type, Type>>(std::move(*l), std::move(*r));
  node_ = std::make_shared<const Node>(Node{k, std::move(name), std::move(children)});
}

inline const std::string kRationalBase = "Q";

inline Type rational_type() { return Type::base(kRationalBase); }
inline Type bool_type() { return Type::sum(Type::unit(), Type::unit()); }
inline Type maybe_rational_type() { return Type::sum(rational_type(), Type::unit()); }

class Term;

namespace node {

struct Lit {
  Rational value;
  std::string base;
};
struct Prim {
  std::string name;
  std::vector<Term> args;
};
struct UnitVal {};
struct Var {
  std::string name;
};
struct Lam {
  std::string binder;
  Type annot;
  std::shared_ptr<const Term> body;
};
struct App {
  std::shared_ptr<const Term> fun, arg;
};
struct Pair {
  std::shared_ptr<const Term> first, second;
};
struct Fst {
  std::shared_ptr<const Term> arg;
};
struct Snd {
  std::shared_ptr<const Term> arg;
};
struct Inl {
  std::shared_ptr<const Term> arg;
  Type annot;
};
struct Inr {
  std::shared_ptr<const Term> arg;
  Type annot;
};
struct Case {
  std::shared_ptr<const Term> scrutinee, left, right;
};

}  // namespace node

using TermNode = std::variant<node::Lit, node::Prim, node::UnitVal, node::Var, node::Lam, node::App,
                              node::Pair, node::Fst, node::Snd, node::Inl, node::Inr, node::Case>;

class Term {
public:
  explicit Term(TermNode n) : node_(std::make_shared<const TermNode>(std::move(n))) {}

  const TermNode& node() const noexcept { return *node_; }

  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(node_.get());
  }
  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(*node_);
  }

  bool same_node(const Term& o) const noexcept { return node_ == o.node_; }

  /// Exact structural equality: binder names must match too. Use alpha_eq
  /// to compare up to renaming.
  friend bool operator==(const Term& a, const Term& b);

private:
  std::shared_ptr<const TermNode> node_;
};

namespace detail {
inline std::shared_ptr<const Term> box(Term t) { return std::make_shared<const Term>(std::move(t)); }
}  // namespace detail

// Constructors.

inline Term lit(Rational v, std::string base = kRationalBase) { return Term(node::Lit{v, std::move(base)}); }
inline Term prim(std::string name, std::vector<Term> args) {
  return Term(node::Prim{std::move(name), std::move(args)});
}
inline Term unit_val() { return Term(node::UnitVal{}); }
inline Term var(std::string name) { return Term(node::Var{std::move(name)}); }
inline Term lam(std::string binder, Type annot, Term body) {
  return Term(node::Lam{std::move(binder), std::move(annot), detail::box(std::move(body))});
}
inline Term app(Term f, Term a) { return Term(node::App{detail::box(std::move(f)), detail::box(std::move(a))}); }
inline Term pair(Term a, Term b) { return Term(node::Pair{detail::box(std::move(a)), detail::box(std::move(b))}); }
inline Term fst(Term a) { return Term(node::Fst{detail::box(std::move(a))}); }
inline Term snd(Term a) { return Term(node::Snd{detail::box(std::move(a))}); }
inline Term inl(Term a, Type annot) { return Term(node::Inl{detail::box(std::move(a)), std::move(annot)}); }
inline Term inr(Term a, Type annot) { return Term(node::Inr{detail::box(std::move(a)), std::move(annot)}); }
inline Term case_of(Term s, Term l, Term r) {
  return Term(node::Case{detail::box(std::move(s)), detail::box(std::move(l)), detail::box(std::move(r))});
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

inline bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&](const node::Lit& x) {
            const auto& y = *b.as<node::Lit>();
            return x.value == y.value && x.base == y.base;
          },
          [&](const node::Prim& x) {
            const auto& y = *b.as<node::Prim>();
            return x.name == y.name && x.args == y.args;
          },
          [&](const node::UnitVal&) { return true; },
          [&](const node::Var& x) { return x.name == b.as<node::Var>()->name; },
          [&](const node::Lam& x) {
            const auto& y = *b.as<node::Lam>();
            return x.binder == y.binder && x.annot == y.annot && *x.body == *y.body;
          },
          [&](const node::App& x) {
            const auto& y = *b.as<node::App>();
            return *x.fun == *y.fun && *x.arg == *y.arg;
          },
          [&](const node::Pair& x) {
            const auto& y = *b.as<node::Pair>();
            return *x.first == *y.first && *x.second == *y.second;
          },
          [&](const node::Fst& x) { return *x.arg == *b.as<node::Fst>()->arg; },
          [&](const node::Snd& x) { return *x.arg == *b.as<node::Snd>()->arg; },
          [&](const node::Inl& x) {
            const auto& y = *b.as<node::Inl>();
            return x.annot == y.annot && *x.arg == *y.arg;
          },
          [&](const node::Inr& x) {
            const auto& y = *b.as<node::Inr>();
            return x.annot == y.annot && *x.arg == *y.arg;
          },
          [&](const node::Case& x) {
            const auto& y = *b.as<node::Case>();
            return *x.scrutinee == *y.scrutinee && *x.left == *y.left && *x.right == *y.right;
          },
      },
      a.node());
}

/// Immediate subterms, left to right.
inline std::vector<Term> children(const Term& t) {
  return std::visit(overloaded{
                        [](const node::Lit&) { return std::vector<Term>{}; },
                        [](const node::Prim& p) { return p.args; },
                        [](const node::UnitVal&) { return std::vector<Term>{}; },
                        [](const node::Var&) { return std::vector<Term>{}; },
                        [](const node::Lam& l) { return std::vector<Term>{*l.body}; },
                        [](const node::App& a) { return std::vector<Term>{*a.fun, *a.arg}; },
                        [](const node::Pair& p) { return std::vector<Term>{*p.first, *p.second}; },
                        [](const node::Fst& f) { return std::vector<Term>{*f.arg}; },
                        [](const node::Snd& s) { return std::vector<Term>{*s.arg}; },
                        [](const node::Inl& i) { return std::vector<Term>{*i.arg}; },
                        [](const node::Inr& i) { return std::vector<Term>{*i.arg}; },
                        [](const node::Case& c) {
                          return std::vector<Term>{*c.scrutinee, *c.left, *c.right};
                        },
                    },
                    t.node());
}

inline void collect_free_vars(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (const auto* v = t.as<node::Var>()) {
    if (!bound.count(v->name)) out.insert(v->name);
    return;
  }
  if (const auto* l = t.as<node::Lam>()) {
    bool fresh = bound.insert(l->binder).second;
    collect_free_vars(*l->body, bound, out);
    if (fresh) bound.erase(l->binder);
    return;
  }
  for (const auto& c : children(t)) collect_free_vars(c, bound, out);
}

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  collect_free_vars(t, bound, out);
  return out;
}

/// Returns `stem` or `stem<k>` for the smallest k that is not free in any of
/// `avoid`. Used by term builders to introduce binders without capture.
inline std::string fresh_name(const std::string& stem, std::initializer_list<const Term*> avoid) {
  std::set<std::string> taken;
  for (const Term* t : avoid) {
    auto fv = free_vars(*t);
    taken.insert(fv.begin(), fv.end());
  }
  if (!taken.count(stem)) return stem;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!taken.count(candidate)) return candidate;
  }
}

namespace detail {

// Binder scopes map a name to the depth of its binding lambda. Two terms are
// alpha-equal iff every variable occurrence resolves to the same de Bruijn
// level on both sides, or both are free with the same name.
inline bool alpha_eq_at(const Term& a, const Term& b, std::map<std::string, std::size_t>& sa,
                        std::map<std::string, std::size_t>& sb, std::size_t depth) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* va = a.as<node::Var>()) {
    const auto* vb = b.as<node::Var>();
    auto ia = sa.find(va->name);
    auto ib = sb.find(vb->name);
    if (ia == sa.end() || ib == sb.end()) return ia == sa.end() && ib == sb.end() && va->name == vb->name;
    return ia->second == ib->second;
  }
  if (const auto* la = a.as<node::Lam>()) {
    const auto* lb = b.as<node::Lam>();
    if (!(la->annot == lb->annot)) return false;
    auto save = [](std::map<std::string, std::size_t>& s, const std::string& n) {
      auto it = s.find(n);
      return it == s.end() ? std::optional<std::size_t>{} : std::optional<std::size_t>{it->second};
    };
    auto old_a = save(sa, la->binder);
    auto old_b = save(sb, lb->binder);
    sa[la->binder] = depth;
    sb[lb->binder] = depth;
    bool eq = alpha_eq_at(*la->body, *lb->body, sa, sb, depth + 1);
    if (old_a) sa[la->binder] = *old_a; else sa.erase(la->binder);
    if (old_b) sb[lb->binder] = *old_b; else sb.erase(lb->binder);
    return eq;
  }
  if (const auto* x = a.as<node::Lit>()) {
    const auto* y = b.as<node::Lit>();
    return x->value == y->value && x->base == y->base;
  }
  if (const auto* x = a.as<node::Prim>()) {
    const auto* y = b.as<node::Prim>();
    if (x->name != y->name || x->args.size() != y->args.size()) return false;
  }
  if (const auto* x = a.as<node::Inl>()) {
    if (!(x->annot == b.as<node::Inl>()->annot)) return false;
  }
  if (const auto* x = a.as<node::Inr>()) {
    if (!(x->annot == b.as<node::Inr>()->annot)) return false;
  }
  auto ca = children(a);
  auto cb = children(b);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!alpha_eq_at(ca[i], cb[i], sa, sb, depth)) return false;
  }
  return true;
}

}  // namespace detail

/// Equality up to consistent renaming of bound variables. Free variables
/// must agree by name.
inline bool alpha_eq(const Term& a, const Term& b) {
  std::map<std::string, std::size_t> sa, sb;
  return detail::alpha_eq_at(a, b, sa, sb, 0);
}

/// True iff `t` has no beta redex: no application of a lambda, projection of
/// a pair, or case on an injection, anywhere.
inline bool beta_normal(const Term& t) {
  if (const auto* a = t.as<node::App>()) {
    if (a->fun->is<node::Lam>()) return false;
  } else if (const auto* f = t.as<node::Fst>()) {
    if (f->arg->is<node::Pair>()) return false;
  } else if (const auto* s = t.as<node::Snd>()) {
    if (s->arg->is<node::Pair>()) return false;
  } else if (const auto* c = t.as<node::Case>()) {
    if (c->scrutinee->is<node::Inl>() || c->scrutinee->is<node::Inr>()) return false;
  }
  for (const auto& c : children(t)) {
    if (!beta_normal(c)) return false;
  }
  return true;
}

inline std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (const auto& c : children(t)) n += term_size(c);
  return n;
}

}  // namespace ebn
