#pragma once

// Staged generators: host-level integers drive the construction of object
// terms of type Q -> Q (or Q -> Maybe Q). Only the zero test on the object
// argument is left for run time.

#include <cstdint>
#include <string>

#include "ebn/primitives.hpp"
#include "ebn/syntax.hpp"

namespace ebn::examples {

// Maybe Q = Q + unit.

inline Term just(const Term& x) { return inl(x, maybe_rational_type()); }
inline Term nothing() { return inr(unit_val(), maybe_rational_type()); }

/// maybe m n l = case l (\x. m x) (\y. n)
inline Term maybe(const Term& on_just, const Term& on_nothing, const Term& scrutinee) {
  std::string x = fresh_name("_j", {&on_just});
  std::string y = fresh_name("_n", {&on_nothing});
  return case_of(scrutinee, lam(x, rational_type(), app(on_just, var(x))), lam(y, Type::unit(), on_nothing));
}

/// f <$> m = maybe (\x. just (f x)) nothing m
inline Term fmap_maybe(const Term& f, const Term& m) {
  std::string x = fresh_name("_v", {&f});
  return maybe(lam(x, rational_type(), just(app(f, var(x)))), nothing(), m);
}

namespace detail {

inline Term mul(Term a, Term b) { return prim(kMul, {std::move(a), std::move(b)}); }
inline Term div(Term a, Term b) { return prim(kDiv, {std::move(a), std::move(b)}); }
inline Term eq(Term a, Term b) { return prim(kEq, {std::move(a), std::move(b)}); }

}  // namespace detail

/// \x. x^n. Negative exponents guard x == 0 (yielding 0) and take the
/// reciprocal; even exponents square through `(\y. y * y) (power (n/2) x)`.
inline Term power(std::int64_t n) {
  using namespace detail;
  Term x = var("x");
  Type q = rational_type();
  Term body = [&] {
    if (n < 0) return mk_if(eq(x, rational_lit(0)), rational_lit(0), div(rational_lit(-1), app(power(-n), x)));
    if (n == 0) return rational_lit(1);
    if (n % 2 == 0) return app(lam("y", q, mul(var("y"), var("y"))), app(power(n / 2), x));
    return mul(x, app(power(n - 1), x));
  }();
  return lam("x", q, body);
}

/// Like power, but returns nothing instead of 0 when dividing by zero.
inline Term power_prime(std::int64_t n) {
  using namespace detail;
  Term x = var("x");
  Type q = rational_type();
  Term body = [&] {
    if (n < 0) {
      return mk_if(eq(x, rational_lit(0)), nothing(),
                   fmap_maybe(lam("y", q, div(rational_lit(-1), var("y"))), app(power_prime(-n), x)));
    }
    if (n == 0) return just(rational_lit(1));
    if (n % 2 == 0) return fmap_maybe(lam("y", q, mul(var("y"), var("y"))), app(power_prime(n / 2), x));
    return fmap_maybe(lam("y", q, mul(x, var("y"))), app(power_prime(n - 1), x));
  }();
  return lam("x", q, body);
}

/// power_prime with nothing mapped back to 0.
inline Term power_dprime(std::int64_t n) {
  Type q = rational_type();
  return lam("x", q, maybe(lam("z", q, var("z")), rational_lit(0), app(power_prime(n), var("x"))));
}

}  // namespace ebn::examples
