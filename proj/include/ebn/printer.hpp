#pragma once

// Two renderings: the s-expression machine format, which parse_term reads
// back, and a compact human-oriented notation (`\x:Q. ...`, `<a, b>`).

#include <cctype>
#include <string>

#include "ebn/syntax.hpp"

namespace ebn {

inline std::string print_type(const Type& ty) {
  switch (ty.kind()) {
    case Type::Kind::base: return ty.name();
    case Type::Kind::unit: return "unit";
    case Type::Kind::arrow: return "(arrow " + print_type(ty.left()) + " " + print_type(ty.right()) + ")";
    case Type::Kind::prod: return "(prod " + print_type(ty.left()) + " " + print_type(ty.right()) + ")";
    case Type::Kind::sum: return "(sum " + print_type(ty.left()) + " " + print_type(ty.right()) + ")";
  }
  return {};
}

inline void print_term_to(const Term& t, std::string& out) {
  std::visit(overloaded{
                 [&](const node::Lit& l) { out += "(lit " + l.value.str() + " " + l.base + ")"; },
                 [&](const node::Prim& p) {
                   out += "(prim " + p.name;
                   for (const auto& a : p.args) {
                     out += ' ';
                     print_term_to(a, out);
                   }
                   out += ')';
                 },
                 [&](const node::UnitVal&) { out += "unit"; },
                 [&](const node::Var& v) { out += "(var " + v.name + ")"; },
                 [&](const node::Lam& l) {
                   out += "(lam (" + l.binder + " " + print_type(l.annot) + ") ";
                   print_term_to(*l.body, out);
                   out += ')';
                 },
                 [&](const node::App& a) {
                   out += "(app ";
                   print_term_to(*a.fun, out);
                   out += ' ';
                   print_term_to(*a.arg, out);
                   out += ')';
                 },
                 [&](const node::Pair& p) {
                   out += "(pair ";
                   print_term_to(*p.first, out);
                   out += ' ';
                   print_term_to(*p.second, out);
                   out += ')';
                 },
                 [&](const node::Fst& f) {
                   out += "(fst ";
                   print_term_to(*f.arg, out);
                   out += ')';
                 },
                 [&](const node::Snd& s) {
                   out += "(snd ";
                   print_term_to(*s.arg, out);
                   out += ')';
                 },
                 [&](const node::Inl& i) {
                   out += "(inl ";
                   print_term_to(*i.arg, out);
                   out += " " + print_type(i.annot) + ")";
                 },
                 [&](const node::Inr& i) {
                   out += "(inr ";
                   print_term_to(*i.arg, out);
                   out += " " + print_type(i.annot) + ")";
                 },
                 [&](const node::Case& c) {
                   out += "(case ";
                   print_term_to(*c.scrutinee, out);
                   out += ' ';
                   print_term_to(*c.left, out);
                   out += ' ';
                   print_term_to(*c.right, out);
                   out += ')';
                 },
             },
             t.node());
}

inline std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

// Pretty notation.

inline std::string pretty_type(const Type& ty) {
  switch (ty.kind()) {
    case Type::Kind::base: return ty.name();
    case Type::Kind::unit: return "unit";
    case Type::Kind::arrow: return "(" + pretty_type(ty.left()) + " -> " + pretty_type(ty.right()) + ")";
    case Type::Kind::prod: return "(" + pretty_type(ty.left()) + " * " + pretty_type(ty.right()) + ")";
    case Type::Kind::sum: return "(" + pretty_type(ty.left()) + " + " + pretty_type(ty.right()) + ")";
  }
  return {};
}

namespace detail {

inline bool pretty_atomic(const Term& t) {
  if (const auto* l = t.as<node::Lit>()) return l->value.num() >= 0 && l->value.is_integer();
  return t.is<node::Var>() || t.is<node::UnitVal>() || t.is<node::Pair>() ||
         (t.is<node::Prim>() && t.as<node::Prim>()->args.size() == 2);
}

inline bool is_infix(const std::string& name) {
  return !name.empty() && !std::isalnum(static_cast<unsigned char>(name.front())) && name.front() != '_';
}

inline std::string pretty_arg(const Term& t);

inline std::string pretty(const Term& t) {
  return std::visit(
      overloaded{
          [](const node::Lit& l) { return l.value.str(); },
          [](const node::Prim& p) {
            if (p.args.size() == 2 && is_infix(p.name)) {
              return "(" + pretty_arg(p.args[0]) + " " + p.name + " " + pretty_arg(p.args[1]) + ")";
            }
            std::string s = p.name + "(";
            for (std::size_t i = 0; i < p.args.size(); ++i) {
              if (i) s += ", ";
              s += pretty(p.args[i]);
            }
            return s + ")";
          },
          [](const node::UnitVal&) { return std::string("()"); },
          [](const node::Var& v) { return v.name; },
          [](const node::Lam& l) { return "\\" + l.binder + ":" + pretty_type(l.annot) + ". " + pretty(*l.body); },
          [](const node::App& a) {
            std::string f = a.fun->is<node::App>() ? pretty(*a.fun) : pretty_arg(*a.fun);
            return f + " " + pretty_arg(*a.arg);
          },
          [](const node::Pair& p) { return "<" + pretty(*p.first) + ", " + pretty(*p.second) + ">"; },
          [](const node::Fst& f) { return "fst " + pretty_arg(*f.arg); },
          [](const node::Snd& s) { return "snd " + pretty_arg(*s.arg); },
          [](const node::Inl& i) { return "inl " + pretty_arg(*i.arg); },
          [](const node::Inr& i) { return "inr " + pretty_arg(*i.arg); },
          [](const node::Case& c) {
            return "case " + pretty_arg(*c.scrutinee) + " " + pretty_arg(*c.left) + " " + pretty_arg(*c.right);
          },
      },
      t.node());
}

inline std::string pretty_arg(const Term& t) {
  std::string s = pretty(t);
  return pretty_atomic(t) ? s : "(" + s + ")";
}

}  // namespace detail

inline std::string pretty_term(const Term& t) { return detail::pretty(t); }

}  // namespace ebn
