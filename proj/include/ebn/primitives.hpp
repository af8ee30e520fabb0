#pragma once

// The rational base type, its three primitives (==, *, /), and their
// semantic implementations: a smart table that folds literals and drops
// multiplicative identities, and a naive table that residualizes everything.
//
// Booleans are the sum unit + unit: false is inl, true is inr.

#include <string>
#include <vector>

#include "ebn/nbe.hpp"
#include "ebn/semantics.hpp"
#include "ebn/syntax.hpp"
#include "ebn/typecheck.hpp"

namespace ebn {

inline const std::string kEq = "==";
inline const std::string kMul = "*";
inline const std::string kDiv = "/";

/// Base types {Q}; == : Q, Q -> Bool; * and / : Q, Q -> Q.
inline Signature rational_signature() {
  Signature sig;
  sig.base_types.insert(kRationalBase);
  Type q = rational_type();
  sig.prims.emplace(kEq, PrimType{{q, q}, bool_type()});
  sig.prims.emplace(kMul, PrimType{{q, q}, q});
  sig.prims.emplace(kDiv, PrimType{{q, q}, q});
  return sig;
}

namespace detail {

inline const Rational* literal_of(const sem::Base& b) {
  const auto* v = std::get_if<Val>(&b.payload);
  return v ? &v->literal : nullptr;
}

inline const sem::Base& rational_arg(const SemValue& v) {
  const auto& b = as_base(v);
  if (b.base != kRationalBase) throw ShapeMismatch("expected a " + kRationalBase + " value, found base " + b.base);
  return b;
}

inline Term binary(const std::string& op, const sem::Base& a, const sem::Base& b) {
  return prim(op, {to_code(a), to_code(b)});
}

}  // namespace detail

inline Residual<SemValue> smart_mul(const SemValue& x, const SemValue& y) {
  const auto& a = detail::rational_arg(x);
  const auto& b = detail::rational_arg(y);
  const Rational* va = detail::literal_of(a);
  const Rational* vb = detail::literal_of(b);
  if (va && vb) return ret(SemValue::val(*va * *vb));
  if (va && *va == Rational(1)) return ret(y);
  if (vb && *vb == Rational(1)) return ret(x);
  return ret(SemValue::exp(detail::binary(kMul, a, b)));
}

/// Throws DivisionByZero when both operands are literals and the divisor
/// is zero.
inline Residual<SemValue> smart_div(const SemValue& x, const SemValue& y) {
  const auto& a = detail::rational_arg(x);
  const auto& b = detail::rational_arg(y);
  const Rational* va = detail::literal_of(a);
  const Rational* vb = detail::literal_of(b);
  if (va && vb) return ret(SemValue::val(*va / *vb));
  if (!va && vb && *vb == Rational(1)) return ret(x);
  return ret(SemValue::exp(detail::binary(kDiv, a, b)));
}

/// Two literals compare statically. Anything residual is reflected at
/// Bool, which splits the rest of the computation into a residual case.
inline Residual<SemValue> smart_eq(const SemValue& x, const SemValue& y, NameSupply& names) {
  const auto& a = detail::rational_arg(x);
  const auto& b = detail::rational_arg(y);
  const Rational* va = detail::literal_of(a);
  const Rational* vb = detail::literal_of(b);
  if (va && vb) return ret(SemValue::boolean(*va == *vb));
  return reflect(bool_type(), detail::binary(kEq, a, b), names);
}

namespace detail {

inline void expect_args(const std::vector<SemValue>& args, const std::string& name) {
  if (args.size() != 2) throw ShapeMismatch(name + " expects 2 arguments, got " + std::to_string(args.size()));
}

}  // namespace detail

inline PrimEnv smart_prim_env() {
  PrimEnv env;
  env.emplace(kEq, [](const std::vector<SemValue>& a, NameSupply& names) {
    detail::expect_args(a, kEq);
    return smart_eq(a[0], a[1], names);
  });
  env.emplace(kMul, [](const std::vector<SemValue>& a, NameSupply&) {
    detail::expect_args(a, kMul);
    return smart_mul(a[0], a[1]);
  });
  env.emplace(kDiv, [](const std::vector<SemValue>& a, NameSupply&) {
    detail::expect_args(a, kDiv);
    return smart_div(a[0], a[1]);
  });
  return env;
}

/// Every arithmetic primitive residualizes its arguments unconditionally;
/// equality still reflects at Bool.
inline PrimEnv naive_prim_env() {
  PrimEnv env;
  env.emplace(kEq, [](const std::vector<SemValue>& a, NameSupply& names) {
    detail::expect_args(a, kEq);
    return reflect(bool_type(), detail::binary(kEq, detail::rational_arg(a[0]), detail::rational_arg(a[1])), names);
  });
  for (const std::string& op : {kMul, kDiv}) {
    env.emplace(op, [op](const std::vector<SemValue>& a, NameSupply&) {
      detail::expect_args(a, op);
      return ret(SemValue::exp(detail::binary(op, detail::rational_arg(a[0]), detail::rational_arg(a[1]))));
    });
  }
  return env;
}

// Object-level booleans.

inline Term mk_false() { return inl(unit_val(), bool_type()); }
inline Term mk_true() { return inr(unit_val(), bool_type()); }

/// `if c then m else n` as a case: the left (false) branch yields `n`, the
/// right (true) branch yields `m`. Branch binders avoid capturing any free
/// variable of `m` or `n`.
inline Term mk_if(const Term& c, const Term& then_term, const Term& else_term) {
  std::string x = fresh_name("_f", {&else_term});
  std::string y = fresh_name("_t", {&then_term});
  return case_of(c, lam(x, Type::unit(), else_term), lam(y, Type::unit(), then_term));
}

inline Term rational_lit(Rational r) { return lit(r, kRationalBase); }

}  // namespace ebn
