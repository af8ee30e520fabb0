#pragma once

// Continuation monad with answer type Term, plus shift and reset.
//
// A Residual<A> is a function from a continuation (A -> Term) to a Term.
// Running it under reset supplies the identity continuation; shift hands
// the current continuation, delimited by the nearest enclosing reset, to
// its argument, which may call it any number of times.

#include <functional>
#include <memory>
#include <type_traits>
#include <utility>

#include "ebn/syntax.hpp"

namespace ebn {

template <class A>
using Cont = std::function<Term(const A&)>;

template <class A>
class Residual {
public:
  using value_type = A;
  using Body = std::function<Term(const Cont<A>&)>;

  explicit Residual(Body body) : body_(std::make_shared<const Body>(std::move(body))) {}

  /// Runs the computation with continuation `k`.
  Term operator()(const Cont<A>& k) const { return (*body_)(k); }

private:
  std::shared_ptr<const Body> body_;
};

template <class T>
struct is_residual : std::false_type {};
template <class A>
struct is_residual<Residual<A>> : std::true_type {};

template <class A>
Residual<std::decay_t<A>> ret(A&& x) {
  using V = std::decay_t<A>;
  return Residual<V>([x = V(std::forward<A>(x))](const Cont<V>& k) { return k(x); });
}

/// Kleisli extension: run `m`, feed its result to `f`, run what `f` returns.
template <class A, class F>
auto bind(Residual<A> m, F f) -> std::invoke_result_t<F, const A&> {
  using RB = std::invoke_result_t<F, const A&>;
  static_assert(is_residual<RB>::value, "bind: function must return a Residual");
  using B = typename RB::value_type;
  return RB([m = std::move(m), f = std::move(f)](const Cont<B>& k) {
    auto kp = std::make_shared<const Cont<B>>(k);
    return m(Cont<A>([f, kp](const A& a) { return f(a)(*kp); }));
  });
}

template <class A>
Residual<A> join(Residual<Residual<A>> mm) {
  return bind(std::move(mm), [](const Residual<A>& m) { return m; });
}

template <class A, class F>
auto fmap(Residual<A> m, F f) -> Residual<std::decay_t<std::invoke_result_t<F, const A&>>> {
  using B = std::decay_t<std::invoke_result_t<F, const A&>>;
  return bind(std::move(m), [f = std::move(f)](const A& a) { return ret<B>(f(a)); });
}

/// Delimits control: runs `m` with the identity continuation.
inline Term reset(const Residual<Term>& m) {
  return m([](const Term& t) { return t; });
}

/// Captures the continuation up to the nearest reset and passes it to `f`.
/// Whatever Term `f` returns replaces the whole delimited computation.
template <class A, class F>
Residual<A> shift(F f) {
  return Residual<A>([f = std::move(f)](const Cont<A>& k) -> Term { return f(k); });
}

}  // namespace ebn
