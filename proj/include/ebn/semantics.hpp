#pragma once

// Residualizing semantic domain and the monadic evaluator.
//
// Base-type values are either residual code (Exp) or known literals (Val);
// everything else is an ordinary host value. Function values may perform
// control effects when applied, so they return Residual computations.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "ebn/control.hpp"
#include "ebn/error.hpp"
#include "ebn/printer.hpp"
#include "ebn/rational.hpp"
#include "ebn/syntax.hpp"

namespace ebn {

/// Deterministic fresh-name generator: x0, x1, x2, ... Each normalization
/// run owns one; it is never shared across runs.
class NameSupply {
public:
  explicit NameSupply(std::string prefix = "x") : prefix_(std::move(prefix)) {}

  std::string next() { return prefix_ + std::to_string(counter_++); }
  std::size_t issued() const noexcept { return counter_; }

private:
  std::string prefix_;
  std::size_t counter_ = 0;
};

struct Exp {
  Term code;
};
struct Val {
  Rational literal;
};

/// Either residual code or a statically known literal.
using BaseValue = std::variant<Exp, Val>;

class SemValue;
using SemFn = std::function<Residual<SemValue>(const SemValue&)>;

namespace sem {

struct Unit {};
struct Fun {
  SemFn apply;
};
struct Pair {
  std::shared_ptr<const SemValue> first, second;
};
struct Inl {
  std::shared_ptr<const SemValue> value;
};
struct Inr {
  std::shared_ptr<const SemValue> value;
};
struct Base {
  std::string base;
  BaseValue payload;
};

}  // namespace sem

class SemValue {
public:
  using Node = std::variant<sem::Unit, sem::Fun, sem::Pair, sem::Inl, sem::Inr, sem::Base>;

  template <class T>
    requires std::is_constructible_v<Node, T&&> && (!std::is_same_v<std::decay_t<T>, SemValue>)
  SemValue(T&& n) : node_(std::make_shared<const Node>(std::forward<T>(n))) {}  // NOLINT: implicit

  static SemValue unit() { return sem::Unit{}; }
  static SemValue fun(SemFn f) { return sem::Fun{std::move(f)}; }
  static SemValue pair(SemValue a, SemValue b) {
    return sem::Pair{std::make_shared<const SemValue>(std::move(a)), std::make_shared<const SemValue>(std::move(b))};
  }
  static SemValue inl(SemValue v) { return sem::Inl{std::make_shared<const SemValue>(std::move(v))}; }
  static SemValue inr(SemValue v) { return sem::Inr{std::make_shared<const SemValue>(std::move(v))}; }
  static SemValue exp(Term code, std::string base = kRationalBase) {
    return sem::Base{std::move(base), Exp{std::move(code)}};
  }
  static SemValue val(Rational r, std::string base = kRationalBase) {
    return sem::Base{std::move(base), Val{r}};
  }
  static SemValue boolean(bool b) { return b ? inr(unit()) : inl(unit()); }

  const Node& node() const noexcept { return *node_; }

  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(node_.get());
  }
  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(*node_);
  }

  const char* shape_name() const {
    static constexpr const char* names[] = {"unit", "function", "pair", "inl", "inr", "base"};
    return names[node_->index()];
  }

private:
  std::shared_ptr<const Node> node_;
};

template <class T>
const T& expect_shape(const SemValue& v, const char* wanted) {
  const T* p = v.as<T>();
  if (!p) throw ShapeMismatch(std::string("expected ") + wanted + " value, found " + v.shape_name());
  return *p;
}

inline const SemFn& as_fun(const SemValue& v) { return expect_shape<sem::Fun>(v, "function").apply; }
inline const sem::Pair& as_pair(const SemValue& v) { return expect_shape<sem::Pair>(v, "pair"); }
inline const sem::Base& as_base(const SemValue& v) { return expect_shape<sem::Base>(v, "base"); }

/// Code for a base value: the residual term itself, or the literal.
inline Term to_code(const sem::Base& b) {
  if (const auto* e = std::get_if<Exp>(&b.payload)) return e->code;
  return lit(std::get<Val>(b.payload).literal, b.base);
}

/// Semantic implementation of one primitive. Receives fully evaluated
/// arguments, left to right, and the name supply of the current run (needed
/// by primitives that reflect at a sum type).
using PrimFn = std::function<Residual<SemValue>(const std::vector<SemValue>&, NameSupply&)>;
using PrimEnv = std::map<std::string, PrimFn>;

/// Variables map to computations; lambda binding inserts pure ones.
using ValueEnv = std::map<std::string, Residual<SemValue>>;

/// Checks that `v` has the shape `ty` dictates. Functions are only checked
/// at the top level since their bodies are opaque.
inline bool shape_matches(const Type& ty, const SemValue& v) {
  switch (ty.kind()) {
    case Type::Kind::unit: return v.is<sem::Unit>();
    case Type::Kind::arrow: return v.is<sem::Fun>();
    case Type::Kind::base: {
      const auto* b = v.as<sem::Base>();
      return b && b->base == ty.name();
    }
    case Type::Kind::prod: {
      const auto* p = v.as<sem::Pair>();
      return p && shape_matches(ty.left(), *p->first) && shape_matches(ty.right(), *p->second);
    }
    case Type::Kind::sum:
      if (const auto* l = v.as<sem::Inl>()) return shape_matches(ty.left(), *l->value);
      if (const auto* r = v.as<sem::Inr>()) return shape_matches(ty.right(), *r->value);
      return false;
  }
  return false;
}

inline void audit_shape(const Type& ty, const SemValue& v) {
  if (!shape_matches(ty, v)) {
    throw ShapeMismatch("value of shape " + std::string(v.shape_name()) + " at type " + print_type(ty));
  }
}

namespace detail {

// Both pointers must outlive every computation and value produced by the
// evaluation; norm keeps them on its own stack frame.
struct EvalContext {
  const PrimEnv* prims;
  NameSupply* names;
};

inline Residual<SemValue> eval_in(const Term& t, EvalContext cx, const ValueEnv& env);

inline Residual<std::vector<SemValue>> eval_args(std::vector<Term> args, std::size_t from, EvalContext cx,
                                                 const ValueEnv& env, std::vector<SemValue> acc) {
  if (from == args.size()) return ret(std::move(acc));
  Term arg = args[from];
  return bind(eval_in(arg, cx, env), [args = std::move(args), from, cx, env, acc](const SemValue& v) {
    std::vector<SemValue> next = acc;
    next.push_back(v);
    return eval_args(args, from + 1, cx, env, std::move(next));
  });
}

inline Residual<SemValue> apply(const SemValue& f, const SemValue& a) { return as_fun(f)(a); }

inline Residual<SemValue> eval_in(const Term& t, EvalContext cx, const ValueEnv& env) {
  return std::visit(
      overloaded{
          [&](const node::Lit& l) { return ret(SemValue::val(l.value, l.base)); },
          [&](const node::Prim& p) {
            auto it = cx.prims->find(p.name);
            if (it == cx.prims->end()) {
              throw TypeError(TypeErrorKind::unknown_primitive, p.name, {});
            }
            const PrimFn& fn = it->second;
            return bind(eval_args(p.args, 0, cx, env, {}),
                        [fn, cx](const std::vector<SemValue>& vs) { return fn(vs, *cx.names); });
          },
          [&](const node::UnitVal&) { return ret(SemValue::unit()); },
          [&](const node::Var& v) {
            auto it = env.find(v.name);
            if (it == env.end()) throw TypeError(TypeErrorKind::unbound_variable, v.name, {});
            return it->second;
          },
          [&](const node::Lam& l) {
            return ret(SemValue::fun([binder = l.binder, body = l.body, cx, env](const SemValue& arg) {
              ValueEnv inner = env;
              inner.insert_or_assign(binder, ret(arg));
              return eval_in(*body, cx, inner);
            }));
          },
          [&](const node::App& a) {
            return bind(eval_in(*a.fun, cx, env), [arg = a.arg, cx, env](const SemValue& f) {
              return bind(eval_in(*arg, cx, env), [f](const SemValue& x) { return apply(f, x); });
            });
          },
          [&](const node::Pair& p) {
            return bind(eval_in(*p.first, cx, env), [second = p.second, cx, env](const SemValue& a) {
              return bind(eval_in(*second, cx, env), [a](const SemValue& b) { return ret(SemValue::pair(a, b)); });
            });
          },
          [&](const node::Fst& f) {
            return bind(eval_in(*f.arg, cx, env), [](const SemValue& v) { return ret(*as_pair(v).first); });
          },
          [&](const node::Snd& s) {
            return bind(eval_in(*s.arg, cx, env), [](const SemValue& v) { return ret(*as_pair(v).second); });
          },
          [&](const node::Inl& i) {
            return fmap(eval_in(*i.arg, cx, env), [](const SemValue& v) { return SemValue::inl(v); });
          },
          [&](const node::Inr& i) {
            return fmap(eval_in(*i.arg, cx, env), [](const SemValue& v) { return SemValue::inr(v); });
          },
          [&](const node::Case& c) {
            return bind(eval_in(*c.scrutinee, cx, env),
                        [left = c.left, right = c.right, cx, env](const SemValue& s) -> Residual<SemValue> {
                          if (const auto* l = s.as<sem::Inl>()) {
                            return bind(eval_in(*left, cx, env),
                                        [payload = *l->value](const SemValue& f) { return apply(f, payload); });
                          }
                          if (const auto* r = s.as<sem::Inr>()) {
                            return bind(eval_in(*right, cx, env),
                                        [payload = *r->value](const SemValue& f) { return apply(f, payload); });
                          }
                          throw ShapeMismatch(std::string("case on a ") + s.shape_name() + " value");
                        });
          },
      },
      t.node());
}

}  // namespace detail

/// Evaluates `t` into the residualizing domain. `prims` and `names` must
/// outlive the returned computation and every value it yields.
inline Residual<SemValue> eval(const Term& t, const PrimEnv& prims, NameSupply& names, const ValueEnv& env = {}) {
  return detail::eval_in(t, detail::EvalContext{&prims, &names}, env);
}

}  // namespace ebn
