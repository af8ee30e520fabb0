#pragma once

// Type-directed reification (semantic value -> code) and reflection
// (code -> semantic value), and the normalizer built from them.
//
// Reflection at a sum type cannot pick a summand statically. It captures
// the continuation with shift and emits a case whose two branches each run
// a copy of that continuation, one per summand. Reification of a function
// wraps the body in reset, so captures never escape a lambda body.

#include <functional>
#include <memory>
#include <utility>
#include <variant>

#include "ebn/control.hpp"
#include "ebn/semantics.hpp"
#include "ebn/syntax.hpp"
#include "ebn/typecheck.hpp"

namespace ebn {

class ReifyPlan;

namespace plan {

struct AtType {
  Type type;
};
/// Reify-side conversion: embed the value, then reify at `inner`.
struct ConvertPos {
  std::shared_ptr<const ReifyPlan> inner;
  std::function<SemValue(const SemValue&)> embed;
};
/// Reflect-side conversion: reflect at `inner`, then project the result.
struct ConvertNeg {
  std::shared_ptr<const ReifyPlan> inner;
  std::function<SemValue(const SemValue&)> project;
};

}  // namespace plan

class ReifyPlan {
public:
  using Node = std::variant<plan::AtType, plan::ConvertPos, plan::ConvertNeg>;

  ReifyPlan(Type ty) : node_(plan::AtType{std::move(ty)}) {}  // NOLINT: implicit
  ReifyPlan(Node n) : node_(std::move(n)) {}                 // NOLINT: implicit

  static ReifyPlan convert_pos(ReifyPlan inner, std::function<SemValue(const SemValue&)> embed) {
    return Node(plan::ConvertPos{std::make_shared<const ReifyPlan>(std::move(inner)), std::move(embed)});
  }
  static ReifyPlan convert_neg(ReifyPlan inner, std::function<SemValue(const SemValue&)> project) {
    return Node(plan::ConvertNeg{std::make_shared<const ReifyPlan>(std::move(inner)), std::move(project)});
  }

  const Node& node() const noexcept { return node_; }

  /// The object type the plan ultimately reifies or reflects at.
  const Type& type() const {
    if (const auto* a = std::get_if<plan::AtType>(&node_)) return a->type;
    if (const auto* p = std::get_if<plan::ConvertPos>(&node_)) return p->inner->type();
    return std::get<plan::ConvertNeg>(node_).inner->type();
  }

private:
  Node node_;
};

inline Term reify(const ReifyPlan& plan, const SemValue& v, NameSupply& names);
inline Residual<SemValue> reflect(const ReifyPlan& plan, const Term& code, NameSupply& names);

namespace detail {

inline Term reify_at(const Type& ty, const SemValue& v, NameSupply& names) {
  switch (ty.kind()) {
    case Type::Kind::base: {
      const auto& b = as_base(v);
      if (b.base != ty.name()) throw ShapeMismatch("base value of " + b.base + " reified at " + ty.name());
      return to_code(b);
    }
    case Type::Kind::unit:
      expect_shape<sem::Unit>(v, "unit");
      return unit_val();
    case Type::Kind::arrow: {
      const SemFn& f = as_fun(v);
      std::string x = names.next();
      Type dom = ty.dom();
      Type cod = ty.cod();
      NameSupply* ns = &names;
      Term body = reset(bind(reflect(dom, var(x), names), [f, cod, ns](const SemValue& arg) {
        return fmap(f(arg), [cod, ns](const SemValue& r) { return reify(cod, r, *ns); });
      }));
      return lam(x, dom, body);
    }
    case Type::Kind::prod: {
      const auto& p = as_pair(v);
      Term a = reify_at(ty.left(), *p.first, names);
      Term b = reify_at(ty.right(), *p.second, names);
      return pair(a, b);
    }
    case Type::Kind::sum:
      if (const auto* l = v.as<sem::Inl>()) return inl(reify_at(ty.left(), *l->value, names), ty);
      if (const auto* r = v.as<sem::Inr>()) return inr(reify_at(ty.right(), *r->value, names), ty);
      throw ShapeMismatch(std::string("expected injection, found ") + v.shape_name());
  }
  throw ShapeMismatch("unknown type kind");
}

inline Residual<SemValue> reflect_at(const Type& ty, const Term& code, NameSupply& names) {
  switch (ty.kind()) {
    case Type::Kind::base: return ret(SemValue::exp(code, ty.name()));
    case Type::Kind::unit: return ret(SemValue::unit());
    case Type::Kind::arrow: {
      NameSupply* ns = &names;
      return ret(SemValue::fun([code, dom = ty.dom(), cod = ty.cod(), ns](const SemValue& arg) {
        return reflect_at(cod, app(code, reify_at(dom, arg, *ns)), *ns);
      }));
    }
    case Type::Kind::prod: {
      NameSupply* ns = &names;
      Type rt = ty.right();
      return bind(reflect_at(ty.left(), fst(code), names), [code, rt, ns](const SemValue& a) {
        return fmap(reflect_at(rt, snd(code), *ns), [a](const SemValue& b) { return SemValue::pair(a, b); });
      });
    }
    case Type::Kind::sum: {
      NameSupply* ns = &names;
      return shift<SemValue>([code, lt = ty.left(), rt = ty.right(), ns](const Cont<SemValue>& k) {
        std::string xl = ns->next();
        Term left = reset(fmap(reflect_at(lt, var(xl), *ns), [&k](const SemValue& a) { return k(SemValue::inl(a)); }));
        std::string xr = ns->next();
        Term right =
            reset(fmap(reflect_at(rt, var(xr), *ns), [&k](const SemValue& b) { return k(SemValue::inr(b)); }));
        return case_of(code, lam(xl, lt, left), lam(xr, rt, right));
      });
    }
  }
  throw ShapeMismatch("unknown type kind");
}

}  // namespace detail

/// Reads a semantic value back as code, directed by `plan`. Pure apart from
/// drawing binder names from `names`.
inline Term reify(const ReifyPlan& plan, const SemValue& v, NameSupply& names) {
  return std::visit(overloaded{
                        [&](const plan::AtType& a) { return detail::reify_at(a.type, v, names); },
                        [&](const plan::ConvertPos& c) { return reify(*c.inner, c.embed(v), names); },
                        [&](const plan::ConvertNeg&) -> Term {
                          throw ShapeMismatch("negative conversion used for reification");
                        },
                    },
                    plan.node());
}

/// Turns code into a semantic value, directed by `plan`. At sum types this
/// captures the continuation and materializes a case around it.
inline Residual<SemValue> reflect(const ReifyPlan& plan, const Term& code, NameSupply& names) {
  return std::visit(overloaded{
                        [&](const plan::AtType& a) { return detail::reflect_at(a.type, code, names); },
                        [&](const plan::ConvertPos&) -> Residual<SemValue> {
                          throw ShapeMismatch("positive conversion used for reflection");
                        },
                        [&](const plan::ConvertNeg& c) { return fmap(reflect(*c.inner, code, names), c.project); },
                    },
                    plan.node());
}

/// Normalizes a closed, well-typed term: evaluate, then reify at its type.
/// Fresh binders are x0, x1, ... in the order the traversal needs them.
inline Term norm(const Term& t, const Signature& sig, const PrimEnv& prims) {
  Type ty = infer(sig, t);
  NameSupply names;
  return reset(fmap(eval(t, prims, names), [&](const SemValue& v) { return reify(ty, v, names); }));
}

}  // namespace ebn
