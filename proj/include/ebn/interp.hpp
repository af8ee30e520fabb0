#pragma once

// Reference call-by-value interpreter with concrete carriers. This is the
// independent oracle for normalization: it shares only the Term type (and
// the rational arithmetic) with the normalizer.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "ebn/error.hpp"
#include "ebn/rational.hpp"
#include "ebn/syntax.hpp"

namespace ebn::interp {

class Value;
using Fn = std::function<Value(const Value&)>;

struct CUnit {};
struct CRat {
  Rational value;
};
struct CPair {
  std::shared_ptr<const Value> first, second;
};
struct CInl {
  std::shared_ptr<const Value> value;
};
struct CInr {
  std::shared_ptr<const Value> value;
};
struct CFun {
  Fn apply;
};

class Value {
public:
  using Node = std::variant<CUnit, CRat, CPair, CInl, CInr, CFun>;

  template <class T>
    requires std::is_constructible_v<Node, T&&> && (!std::is_same_v<std::decay_t<T>, Value>)
  Value(T&& n) : node_(std::make_shared<const Node>(std::forward<T>(n))) {}  // NOLINT: implicit

  static Value unit() { return CUnit{}; }
  static Value rat(Rational r) { return CRat{r}; }
  static Value pair(Value a, Value b) {
    return CPair{std::make_shared<const Value>(std::move(a)), std::make_shared<const Value>(std::move(b))};
  }
  static Value inl(Value v) { return CInl{std::make_shared<const Value>(std::move(v))}; }
  static Value inr(Value v) { return CInr{std::make_shared<const Value>(std::move(v))}; }
  static Value boolean(bool b) { return b ? inr(unit()) : inl(unit()); }

  const Node& node() const noexcept { return *node_; }
  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(node_.get());
  }

  /// Structural equality on first-order values. Comparing functions throws.
  friend bool operator==(const Value& a, const Value& b) {
    if (a.node_->index() != b.node_->index()) return false;
    return std::visit(overloaded{
                          [](const CUnit&) { return true; },
                          [&](const CRat& x) { return x.value == b.as<CRat>()->value; },
                          [&](const CPair& x) {
                            const auto& y = *b.as<CPair>();
                            return *x.first == *y.first && *x.second == *y.second;
                          },
                          [&](const CInl& x) { return *x.value == *b.as<CInl>()->value; },
                          [&](const CInr& x) { return *x.value == *b.as<CInr>()->value; },
                          [](const CFun&) -> bool { throw ShapeMismatch("functions are not comparable"); },
                      },
                      a.node());
  }

  std::string str() const {
    return std::visit(overloaded{
                          [](const CUnit&) { return std::string("unit"); },
                          [](const CRat& r) { return r.value.str(); },
                          [](const CPair& p) { return "(pair " + p.first->str() + " " + p.second->str() + ")"; },
                          [](const CInl& i) { return "(inl " + i.value->str() + ")"; },
                          [](const CInr& i) { return "(inr " + i.value->str() + ")"; },
                          [](const CFun&) { return std::string("<function>"); },
                      },
                      node());
  }

private:
  std::shared_ptr<const Node> node_;
};

using Env = std::map<std::string, Value>;

namespace detail {

template <class T>
const T& expect(const Value& v, const char* what) {
  const T* p = v.as<T>();
  if (!p) throw ShapeMismatch(std::string("interpreter expected ") + what);
  return *p;
}

inline Rational rat(const Value& v) { return expect<CRat>(v, "a rational").value; }

inline Value run_prim(const std::string& name, const std::vector<Value>& args) {
  if (args.size() != 2) throw ShapeMismatch("primitive " + name + " expects 2 arguments");
  Rational a = rat(args[0]);
  Rational b = rat(args[1]);
  if (name == "==") return Value::boolean(a == b);
  if (name == "*") return Value::rat(a * b);
  if (name == "/") {
    if (b.is_zero()) throw RuntimeDivisionByZero();
    return Value::rat(a / b);
  }
  throw TypeError(TypeErrorKind::unknown_primitive, name, {});
}

}  // namespace detail

/// Evaluates `t` call-by-value. Throws RuntimeDivisionByZero on a zero
/// divisor.
inline Value run(const Term& t, const Env& env = {}) {
  return std::visit(
      overloaded{
          [&](const node::Lit& l) { return Value::rat(l.value); },
          [&](const node::Prim& p) {
            std::vector<Value> args;
            args.reserve(p.args.size());
            for (const auto& a : p.args) args.push_back(run(a, env));
            return detail::run_prim(p.name, args);
          },
          [&](const node::UnitVal&) { return Value::unit(); },
          [&](const node::Var& v) {
            auto it = env.find(v.name);
            if (it == env.end()) throw TypeError(TypeErrorKind::unbound_variable, v.name, {});
            return it->second;
          },
          [&](const node::Lam& l) {
            return Value(CFun{[binder = l.binder, body = l.body, env](const Value& arg) {
              Env inner = env;
              inner.insert_or_assign(binder, arg);
              return run(*body, inner);
            }});
          },
          [&](const node::App& a) {
            Value f = run(*a.fun, env);
            Value x = run(*a.arg, env);
            return detail::expect<CFun>(f, "a function").apply(x);
          },
          [&](const node::Pair& p) {
            Value a = run(*p.first, env);
            Value b = run(*p.second, env);
            return Value::pair(a, b);
          },
          [&](const node::Fst& f) { return *detail::expect<CPair>(run(*f.arg, env), "a pair").first; },
          [&](const node::Snd& s) { return *detail::expect<CPair>(run(*s.arg, env), "a pair").second; },
          [&](const node::Inl& i) { return Value::inl(run(*i.arg, env)); },
          [&](const node::Inr& i) { return Value::inr(run(*i.arg, env)); },
          [&](const node::Case& c) {
            Value s = run(*c.scrutinee, env);
            if (const auto* l = s.as<CInl>()) {
              Value f = run(*c.left, env);
              return detail::expect<CFun>(f, "a function").apply(*l->value);
            }
            const auto& r = detail::expect<CInr>(s, "an injection");
            Value f = run(*c.right, env);
            return detail::expect<CFun>(f, "a function").apply(*r.value);
          },
      },
      t.node());
}

/// Applies a closed function term to a value.
inline Value apply(const Term& f, const Value& arg, const Env& env = {}) {
  return detail::expect<CFun>(run(f, env), "a function").apply(arg);
}

}  // namespace ebn::interp
