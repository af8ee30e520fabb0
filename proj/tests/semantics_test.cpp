#include <gtest/gtest.h>

#include "ebn/ebn.hpp"
#include "support/generators.hpp"

using namespace ebn;

namespace {

const Type Q = rational_type();
const Signature kSig = rational_signature();

// Evaluate then read back at `ty`, sharing one name supply.
Term eval_reify(const Term& t, const Type& ty, const PrimEnv& prims, const ValueEnv& env = {}) {
  NameSupply names;
  return reset(fmap(eval(t, prims, names, env), [&](const SemValue& v) { return reify(ty, v, names); }));
}

TEST(Eval, LiteralIsStatic) {
  PrimEnv prims = smart_prim_env();
  NameSupply names;
  Term out = reset(fmap(eval(lit(Rational(2, 3)), prims, names), [](const SemValue& v) {
    const auto& b = as_base(v);
    EXPECT_TRUE(std::holds_alternative<Val>(b.payload));
    return to_code(b);
  }));
  EXPECT_EQ(out, lit(Rational(2, 3)));
  EXPECT_EQ(names.issued(), 0u);
}

TEST(Eval, ValueShapesFollowTypes) {
  PrimEnv prims = smart_prim_env();
  testkit::TermGen gen(21);
  for (int i = 0; i < 100; ++i) {
    const Type& ty = testkit::TermGen::top_types()[i % 6];
    Term t = gen.gen(ty, 3);
    NameSupply names;
    try {
      reset(fmap(eval(t, prims, names), [&](const SemValue& v) {
        EXPECT_TRUE(shape_matches(ty, v)) << print_term(t);
        return unit_val();
      }));
    } catch (const DivisionByZero&) {
    }
  }
}

TEST(Eval, StaticArithmetic) {
  Term t = prim(kDiv, {prim(kMul, {lit(3), lit(Rational(1, 2))}), lit(4)});
  EXPECT_EQ(eval_reify(t, Q, smart_prim_env()), lit(Rational(3, 8)));
  EXPECT_THROW(eval_reify(prim(kDiv, {lit(1), lit(0)}), Q, smart_prim_env()), DivisionByZero);
}

TEST(Eval, EnvironmentSuppliesOpenVariables) {
  ValueEnv env{{"y", ret(SemValue::exp(var("y")))}};
  Term t = prim(kMul, {var("y"), lit(1)});
  EXPECT_EQ(eval_reify(t, Q, smart_prim_env(), env), var("y"));
  EXPECT_EQ(eval_reify(t, Q, naive_prim_env(), env), prim(kMul, {var("y"), lit(1)}));
}

TEST(Eval, Errors) {
  EXPECT_THROW(eval_reify(var("nope"), Q, smart_prim_env()), TypeError);
  try {
    eval_reify(prim("+", {lit(1), lit(2)}), Q, smart_prim_env());
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.kind(), TypeErrorKind::unknown_primitive);
  }
  EXPECT_THROW(eval_reify(fst(unit_val()), Q, smart_prim_env()), ShapeMismatch);
}

// Projections and case on constructors evaluate like their contracta.
TEST(Eval, BetaLaws) {
  PrimEnv prims = smart_prim_env();
  testkit::TermGen gen(22);
  for (int i = 0; i < 150; ++i) {
    Term arg = gen.gen(Q, 2);
    try {
      Term p = pair(arg, lit(5));
      EXPECT_EQ(eval_reify(fst(p), Q, prims), eval_reify(arg, Q, prims));
      EXPECT_EQ(eval_reify(snd(p), Q, prims), lit(5));

      Type s = Type::sum(Q, Type::unit());
      Term l = lam("c", Q, prim(kMul, {var("c"), lit(2)}));
      Term r = lam("d", Type::unit(), lit(9));
      EXPECT_EQ(eval_reify(case_of(inl(arg, s), l, r), Q, prims), eval_reify(app(l, arg), Q, prims));
      EXPECT_EQ(eval_reify(case_of(inr(unit_val(), s), l, r), Q, prims), lit(9));
    } catch (const DivisionByZero&) {
    }
  }
}

TEST(Eval, AppOfLambdaMatchesExtendedEnvironment) {
  PrimEnv prims = smart_prim_env();
  testkit::TermGen gen(23);
  for (int i = 0; i < 100; ++i) {
    Term body = gen.gen(Q, 3);
    Rational c = testkit::small_rational(gen.rng());
    try {
      Term a = eval_reify(app(lam("a", Q, body), lit(c)), Q, prims);
      Term b = eval_reify(body, Q, prims, ValueEnv{{"a", ret(SemValue::val(c))}});
      EXPECT_EQ(a, b);
    } catch (const DivisionByZero&) {
    }
  }
}

TEST(Eval, EffectsRunLeftToRight) {
  Term p = var("p");
  Term t = lam("p", Type::prod(Q, Q),
               pair(prim(kEq, {fst(p), lit(0)}), prim(kEq, {snd(p), lit(0)})));
  Term got = norm(t, kSig, smart_prim_env());
  const char* golden =
      "(lam (x0 (prod Q Q))"
      " (case (prim == (fst (var x0)) (lit 0 Q))"
      "  (lam (x1 unit) (case (prim == (snd (var x0)) (lit 0 Q))"
      "    (lam (x2 unit) (pair (inl unit (sum unit unit)) (inl unit (sum unit unit))))"
      "    (lam (x3 unit) (pair (inl unit (sum unit unit)) (inr unit (sum unit unit))))))"
      "  (lam (x4 unit) (case (prim == (snd (var x0)) (lit 0 Q))"
      "    (lam (x5 unit) (pair (inr unit (sum unit unit)) (inl unit (sum unit unit))))"
      "    (lam (x6 unit) (pair (inr unit (sum unit unit)) (inr unit (sum unit unit))))))))";
  EXPECT_EQ(got, parse_term(golden)) << print_term(got);
}

TEST(Eval, ArgumentsOfPrimitivesRunLeftToRight) {
  // Both operands split on a comparison; the left one must be outermost.
  Term x = var("x");
  Term cmp_a = mk_if(prim(kEq, {x, lit(1)}), lit(2), lit(3));
  Term cmp_b = mk_if(prim(kEq, {x, lit(4)}), lit(5), lit(6));
  Term got = norm(lam("x", Q, prim(kMul, {cmp_a, cmp_b})), kSig, smart_prim_env());
  const auto& c = got.as<node::Lam>()->body->as<node::Case>();
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(*c->scrutinee, prim(kEq, {var("x0"), lit(1)}));
}

}  // namespace
