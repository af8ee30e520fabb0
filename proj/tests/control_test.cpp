#include <gtest/gtest.h>

#include <vector>

#include "ebn/ebn.hpp"

using namespace ebn;

namespace {

Term run(const Residual<Term>& m) { return reset(m); }

// A small family of computations with Term leaves, some of which capture
// their continuation.
std::vector<Residual<Term>> computations() {
  std::vector<Residual<Term>> ms;
  ms.push_back(ret(lit(1)));
  ms.push_back(ret(var("z")));
  ms.push_back(shift<Term>([](const Cont<Term>& k) { return pair(k(lit(2)), k(lit(3))); }));
  ms.push_back(shift<Term>([](const Cont<Term>&) { return unit_val(); }));
  ms.push_back(shift<Term>([](const Cont<Term>& k) { return k(k(var("w"))); }));
  ms.push_back(bind(ret(lit(4)), [](const Term& t) {
    return shift<Term>([t](const Cont<Term>& k) { return fst(k(t)); });
  }));
  return ms;
}

std::vector<std::function<Residual<Term>(const Term&)>> kleislis() {
  return {
      [](const Term& t) { return ret(snd(t)); },
      [](const Term& t) { return shift<Term>([t](const Cont<Term>& k) { return pair(k(t), t); }); },
      [](const Term& t) { return ret(prim("*", {t, t})); },
  };
}

TEST(Control, RetUnderResetIsTheValue) {
  EXPECT_EQ(run(ret(lit(7))), lit(7));
}

TEST(Control, ShiftDiscardingContinuation) {
  Residual<Term> m = bind(shift<Term>([](const Cont<Term>&) { return lit(0); }),
                          [](const Term& t) { return ret(pair(t, t)); });
  EXPECT_EQ(run(m), lit(0));
}

TEST(Control, ShiftCapturesUpToReset) {
  Residual<Term> m = bind(shift<Term>([](const Cont<Term>& k) { return pair(k(lit(1)), k(lit(2))); }),
                          [](const Term& t) { return ret(fst(t)); });
  EXPECT_EQ(run(m), pair(fst(lit(1)), fst(lit(2))));
}

TEST(Control, NestedResetDelimits) {
  // The inner shift only sees the inner reset's context.
  Residual<Term> inner = shift<Term>([](const Cont<Term>& k) { return k(k(lit(3))); });
  Residual<Term> outer = bind(ret(run(inner)), [](const Term& t) {
    return shift<Term>([t](const Cont<Term>&) { return t; });
  });
  EXPECT_EQ(run(outer), lit(3));
}

TEST(Control, LeftIdentity) {
  for (const auto& f : kleislis()) {
    for (const Term& a : {lit(1), var("q"), unit_val()}) {
      EXPECT_EQ(run(bind(ret(a), f)), run(f(a)));
    }
  }
}

TEST(Control, RightIdentity) {
  for (const auto& m : computations()) {
    EXPECT_EQ(run(bind(m, [](const Term& t) { return ret(t); })), run(m));
  }
}

TEST(Control, Associativity) {
  auto fs = kleislis();
  for (const auto& m : computations()) {
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        Term lhs = run(bind(bind(m, f), g));
        Term rhs = run(bind(m, [f, g](const Term& x) { return bind(f(x), g); }));
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(Control, FmapAndJoinAgreeWithBind) {
  auto f = [](const Term& t) { return inl(t, bool_type()); };
  for (const auto& m : computations()) {
    EXPECT_EQ(run(fmap(m, f)), run(bind(m, [f](const Term& t) { return ret(f(t)); })));
    Residual<Residual<Term>> mm = ret(m);
    EXPECT_EQ(run(join(mm)), run(m));
  }
}

TEST(Control, ComputationsAreReusable) {
  Residual<Term> m = shift<Term>([](const Cont<Term>& k) { return pair(k(lit(1)), k(lit(2))); });
  Term first = run(m);
  EXPECT_EQ(run(m), first);
  EXPECT_EQ(m([](const Term& t) { return snd(t); }), pair(snd(lit(1)), snd(lit(2))));
}

}  // namespace
