#pragma once

#include <string>
#include <string_view>

#include "ebn/sexpr.hpp"
#include "ebn/syntax.hpp"

namespace ebn {

namespace detail {

inline const std::string& expect_name(const Sexp& s, const char* what) {
  if (!s.is_atom() || s.text.empty()) s.error(std::string("expected ") + what);
  return s.text;
}

inline void expect_arity(const Sexp& s, std::size_t n) {
  if (s.items.size() != n) {
    s.error("'" + s.items.front().text + "' takes " + std::to_string(n - 1) + " operand(s), got " +
            std::to_string(s.items.size() - 1));
  }
}

inline Type type_from(const Sexp& s) {
  if (s.is_atom()) {
    if (s.text == "unit") return Type::unit();
    if (s.text.empty() || s.text == "arrow" || s.text == "prod" || s.text == "sum") s.error("expected a type");
    return Type::base(s.text);
  }
  if (!s.is_list() || s.items.empty()) s.error("expected a type");
  const Sexp& head = s.items.front();
  if (head.is_atom("arrow") || head.is_atom("prod") || head.is_atom("sum")) {
    expect_arity(s, 3);
    Type l = type_from(s.items[1]);
    Type r = type_from(s.items[2]);
    if (head.text == "arrow") return Type::arrow(l, r);
    if (head.text == "prod") return Type::prod(l, r);
    return Type::sum(l, r);
  }
  head.error("unknown type constructor");
}

inline Term term_from(const Sexp& s) {
  if (s.is_atom("unit")) return unit_val();
  if (!s.is_list() || s.items.empty() || !s.items.front().is_atom()) s.error("expected a term");
  const Sexp& head = s.items.front();
  const std::string& h = head.text;
  const auto& it = s.items;

  if (h == "lit") {
    expect_arity(s, 3);
    Rational r;
    if (!it[1].is_atom() || !Rational::parse(it[1].text, r)) it[1].error("malformed rational literal");
    return lit(r, expect_name(it[2], "base type name"));
  }
  if (h == "prim") {
    if (it.size() < 2) s.error("'prim' needs a name");
    std::vector<Term> args;
    for (std::size_t i = 2; i < it.size(); ++i) args.push_back(term_from(it[i]));
    return prim(expect_name(it[1], "primitive name"), std::move(args));
  }
  if (h == "var") {
    expect_arity(s, 2);
    return var(expect_name(it[1], "variable name"));
  }
  if (h == "lam") {
    if (it.size() >= 2 && (it[1].is_atom() || it[1].items.size() == 1)) {
      throw AnnotationMissing("lambda binder needs a type", it[1].line, it[1].column);
    }
    expect_arity(s, 3);
    const Sexp& b = it[1];
    if (!b.is_list() || b.items.size() != 2) b.error("expected (name type)");
    return lam(expect_name(b.items[0], "binder name"), type_from(b.items[1]), term_from(it[2]));
  }
  if (h == "inl" || h == "inr") {
    if (it.size() == 2) throw AnnotationMissing("'" + h + "' needs a sum type annotation", s.line, s.column);
    expect_arity(s, 3);
    Term a = term_from(it[1]);
    Type ty = type_from(it[2]);
    return h == "inl" ? inl(a, ty) : inr(a, ty);
  }
  if (h == "app") {
    expect_arity(s, 3);
    return app(term_from(it[1]), term_from(it[2]));
  }
  if (h == "pair") {
    expect_arity(s, 3);
    return pair(term_from(it[1]), term_from(it[2]));
  }
  if (h == "fst") {
    expect_arity(s, 2);
    return fst(term_from(it[1]));
  }
  if (h == "snd") {
    expect_arity(s, 2);
    return snd(term_from(it[1]));
  }
  if (h == "case") {
    expect_arity(s, 4);
    return case_of(term_from(it[1]), term_from(it[2]), term_from(it[3]));
  }
  head.error("unknown term form '" + h + "'");
}

}  // namespace detail

/// Parses one term in the s-expression format. Throws SyntaxError (with
/// line and column) or AnnotationMissing.
inline Term parse_term(std::string_view text) { return detail::term_from(read_sexp(text)); }

inline Type parse_type(std::string_view text) { return detail::type_from(read_sexp(text)); }

}  // namespace ebn
