#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ebn/error.hpp"
#include "ebn/printer.hpp"
#include "ebn/syntax.hpp"

namespace ebn {

/// A primitive's argument types and result type.
struct PrimType {
  std::vector<Type> args;
  Type result;

  std::size_t arity() const noexcept { return args.size(); }
};

/// Registered base types and primitive signatures. Every base type's literal
/// carrier is the rationals.
struct Signature {
  std::set<std::string> base_types;
  std::map<std::string, PrimType> prims;

  bool has_base(const std::string& name) const { return base_types.count(name) != 0; }
};

using TypeEnv = std::map<std::string, Type>;

namespace detail {

class Checker {
public:
  explicit Checker(const Signature& sig) : sig_(sig) {}

  Type infer(TypeEnv& env, const Term& t) {
    return std::visit(
        overloaded{
            [&](const node::Lit& l) -> Type {
              if (!sig_.has_base(l.base)) fail(TypeErrorKind::unknown_base_type, "literal base " + l.base);
              return Type::base(l.base);
            },
            [&](const node::Prim& p) -> Type {
              auto it = sig_.prims.find(p.name);
              if (it == sig_.prims.end()) fail(TypeErrorKind::unknown_primitive, p.name);
              const PrimType& pt = it->second;
              if (pt.arity() != p.args.size()) {
                fail(TypeErrorKind::arity_mismatch, p.name + " expects " + std::to_string(pt.arity()) +
                                                        " arguments, got " + std::to_string(p.args.size()));
              }
              for (std::size_t i = 0; i < p.args.size(); ++i) {
                Type a = sub(env, p.args[i], "prim " + p.name + "[" + std::to_string(i) + "]");
                expect(pt.args[i], a, "prim " + p.name + "[" + std::to_string(i) + "]");
              }
              return pt.result;
            },
            [&](const node::UnitVal&) -> Type { return Type::unit(); },
            [&](const node::Var& v) -> Type {
              auto it = env.find(v.name);
              if (it == env.end()) fail(TypeErrorKind::unbound_variable, v.name);
              return it->second;
            },
            [&](const node::Lam& l) -> Type {
              check_type(l.annot);
              auto prev = env.find(l.binder);
              std::optional<Type> saved;
              if (prev != env.end()) saved = prev->second;
              env.insert_or_assign(l.binder, l.annot);
              path_.push_back("lam.body");
              Type body = infer(env, *l.body);
              path_.pop_back();
              if (saved) env.insert_or_assign(l.binder, *saved);
              else env.erase(l.binder);
              return Type::arrow(l.annot, body);
            },
            [&](const node::App& a) -> Type {
              Type f = sub(env, *a.fun, "app.fun");
              Type x = sub(env, *a.arg, "app.arg");
              if (!f.is(Type::Kind::arrow)) mismatch("arrow", f, "app.fun");
              expect(f.dom(), x, "app.arg");
              return f.cod();
            },
            [&](const node::Pair& p) -> Type {
              Type l = sub(env, *p.first, "pair.first");
              Type r = sub(env, *p.second, "pair.second");
              return Type::prod(l, r);
            },
            [&](const node::Fst& f) -> Type {
              Type a = sub(env, *f.arg, "fst");
              if (!a.is(Type::Kind::prod)) mismatch("prod", a, "fst");
              return a.left();
            },
            [&](const node::Snd& s) -> Type {
              Type a = sub(env, *s.arg, "snd");
              if (!a.is(Type::Kind::prod)) mismatch("prod", a, "snd");
              return a.right();
            },
            [&](const node::Inl& i) -> Type {
              check_type(i.annot);
              if (!i.annot.is(Type::Kind::sum)) mismatch("sum annotation", i.annot, "inl");
              Type a = sub(env, *i.arg, "inl");
              expect(i.annot.left(), a, "inl");
              return i.annot;
            },
            [&](const node::Inr& i) -> Type {
              check_type(i.annot);
              if (!i.annot.is(Type::Kind::sum)) mismatch("sum annotation", i.annot, "inr");
              Type a = sub(env, *i.arg, "inr");
              expect(i.annot.right(), a, "inr");
              return i.annot;
            },
            [&](const node::Case& c) -> Type {
              Type s = sub(env, *c.scrutinee, "case.scrutinee");
              Type l = sub(env, *c.left, "case.left");
              Type r = sub(env, *c.right, "case.right");
              if (!s.is(Type::Kind::sum)) mismatch("sum", s, "case.scrutinee");
              if (!l.is(Type::Kind::arrow)) mismatch("arrow", l, "case.left");
              if (!r.is(Type::Kind::arrow)) mismatch("arrow", r, "case.right");
              expect(s.left(), l.dom(), "case.left");
              expect(s.right(), r.dom(), "case.right");
              expect(l.cod(), r.cod(), "case.right");
              return l.cod();
            },
        },
        t.node());
  }

  void check_type(const Type& ty) {
    switch (ty.kind()) {
      case Type::Kind::base:
        if (!sig_.has_base(ty.name())) fail(TypeErrorKind::unknown_base_type, ty.name());
        return;
      case Type::Kind::unit: return;
      default:
        check_type(ty.left());
        check_type(ty.right());
    }
  }

private:
  Type sub(TypeEnv& env, const Term& t, const char* step) { return sub(env, t, std::string(step)); }
  Type sub(TypeEnv& env, const Term& t, const std::string& step) {
    path_.push_back(step);
    Type r = infer(env, t);
    path_.pop_back();
    return r;
  }

  [[noreturn]] void fail(TypeErrorKind k, const std::string& detail) { throw TypeError(k, detail, path_); }

  [[noreturn]] void mismatch(const std::string& expected, const Type& found, const std::string& step) {
    path_.push_back(step);
    fail(TypeErrorKind::type_mismatch, "expected " + expected + ", found " + print_type(found));
  }

  void expect(const Type& expected, const Type& found, const std::string& step) {
    if (expected == found) return;
    path_.push_back(step);
    fail(TypeErrorKind::type_mismatch, "expected " + print_type(expected) + ", found " + print_type(found));
  }

  const Signature& sig_;
  std::vector<std::string> path_;
};

}  // namespace detail

/// Synthesizes the type of `t` under `env`. Subterms are checked left to
/// right, innermost first, so the reported path is the first failure found.
inline Type infer(const TypeEnv& env, const Signature& sig, const Term& t) {
  TypeEnv scratch = env;
  return detail::Checker(sig).infer(scratch, t);
}

inline Type infer(const Signature& sig, const Term& t) { return infer(TypeEnv{}, sig, t); }

/// Throws UnknownBaseType if `ty` mentions an unregistered base.
inline void check_type(const Signature& sig, const Type& ty) { detail::Checker(sig).check_type(ty); }

}  // namespace ebn
