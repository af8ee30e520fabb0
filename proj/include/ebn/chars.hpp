#pragma once

// Normalization by evaluation for the free monoid over characters:
//   t ::= eps | chr c | t . t
// Two interchangeable semantic domains (lists and list-transformers), one
// reifier each, and a canonical form that is a right-nested comb ending in
// eps.

#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "ebn/error.hpp"
#include "ebn/sexpr.hpp"

namespace ebn::chars {

class CharsTerm {
public:
  struct Eps {};
  struct Chr {
    char32_t c;
  };
  struct Append {
    CharsTerm left() const { return *l; }
    CharsTerm right() const { return *r; }
    std::shared_ptr<const CharsTerm> l, r;
  };
  using Node = std::variant<Eps, Chr, Append>;

  static CharsTerm eps() { return CharsTerm(Eps{}); }
  static CharsTerm chr(char32_t c) { return CharsTerm(Chr{c}); }
  static CharsTerm append(CharsTerm a, CharsTerm b) {
    return CharsTerm(Append{std::make_shared<const CharsTerm>(std::move(a)), std::make_shared<const CharsTerm>(std::move(b))});
  }

  const Node& node() const noexcept { return *node_; }
  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(node_.get());
  }

  friend bool operator==(const CharsTerm& a, const CharsTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->index() != b.node_->index()) return false;
    if (const auto* x = a.as<Chr>()) return x->c == b.as<Chr>()->c;
    if (const auto* x = a.as<Append>()) {
      const auto* y = b.as<Append>();
      return *x->l == *y->l && *x->r == *y->r;
    }
    return true;
  }

private:
  explicit CharsTerm(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

inline CharsTerm eps() { return CharsTerm::eps(); }
inline CharsTerm chr(char32_t c) { return CharsTerm::chr(c); }
inline CharsTerm cat(CharsTerm a, CharsTerm b) { return CharsTerm::append(std::move(a), std::move(b)); }

// List domain.

inline void eval_list_into(const CharsTerm& t, std::u32string& out) {
  if (const auto* c = t.as<CharsTerm::Chr>()) {
    out += c->c;
  } else if (const auto* a = t.as<CharsTerm::Append>()) {
    eval_list_into(*a->l, out);
    eval_list_into(*a->r, out);
  }
}

inline std::u32string eval_list(const CharsTerm& t) {
  std::u32string out;
  eval_list_into(t, out);
  return out;
}

inline CharsTerm reify_list(std::u32string_view cs) {
  CharsTerm acc = eps();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = cat(chr(*it), acc);
  return acc;
}

// Function domain: a term denotes "prepend my characters".

using CharsFn = std::function<CharsTerm(const CharsTerm&)>;

inline CharsFn eval_fun(const CharsTerm& t) {
  if (const auto* c = t.as<CharsTerm::Chr>()) {
    char32_t ch = c->c;
    return [ch](const CharsTerm& rest) { return cat(chr(ch), rest); };
  }
  if (const auto* a = t.as<CharsTerm::Append>()) {
    CharsFn f = eval_fun(*a->l);
    CharsFn g = eval_fun(*a->r);
    return [f, g](const CharsTerm& rest) { return f(g(rest)); };
  }
  return [](const CharsTerm& rest) { return rest; };
}

inline CharsTerm reify_fun(const CharsFn& f) { return f(eps()); }

enum class Domain { list, function };

inline CharsTerm norm_chars(const CharsTerm& t, Domain d = Domain::list) {
  return d == Domain::list ? reify_list(eval_list(t)) : reify_fun(eval_fun(t));
}

/// Accepts exactly eps and `chr c . N` with N canonical.
inline bool is_canonical(const CharsTerm& t) {
  const CharsTerm* cur = &t;
  while (const auto* a = cur->as<CharsTerm::Append>()) {
    if (!a->l->as<CharsTerm::Chr>()) return false;
    cur = a->r.get();
  }
  return cur->as<CharsTerm::Eps>() != nullptr;
}

// UTF-8.

inline void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
}

inline std::string to_utf8(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) append_utf8(out, c);
  return out;
}

/// Decodes UTF-8; returns false on malformed input or a non-scalar value.
inline bool from_utf8(std::string_view s, std::u32string& out) {
  out.clear();
  for (std::size_t i = 0; i < s.size();) {
    auto b = static_cast<unsigned char>(s[i]);
    std::size_t len = b < 0x80 ? 1 : (b >> 5) == 0x6 ? 2 : (b >> 4) == 0xE ? 3 : (b >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) return false;
    char32_t c = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
    for (std::size_t k = 1; k < len; ++k) {
      auto cb = static_cast<unsigned char>(s[i + k]);
      if ((cb & 0xC0) != 0x80) return false;
      c = (c << 6) | (cb & 0x3F);
    }
    static constexpr char32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
    if (c < min_for_len[len] || c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) return false;
    out += c;
    i += len;
  }
  return true;
}

/// Back end: writes the denoted string. Only canonical terms are accepted.
inline void print_chars(const CharsTerm& t, std::ostream& os) {
  if (!is_canonical(t)) throw NotCanonical();
  std::string out;
  const CharsTerm* cur = &t;
  while (const auto* a = cur->as<CharsTerm::Append>()) {
    append_utf8(out, a->l->as<CharsTerm::Chr>()->c);
    cur = a->r.get();
  }
  os << out;
}

// S-expression syntax: eps | (chr "c") | (cat t t)

inline CharsTerm chars_from(const Sexp& s) {
  if (s.is_atom("eps")) return eps();
  if (!s.is_list() || s.items.empty() || !s.items.front().is_atom()) s.error("expected a Chars term");
  const std::string& h = s.items.front().text;
  if (h == "chr") {
    if (s.items.size() != 2 || s.items[1].kind != Sexp::Kind::string) s.error("expected (chr \"c\")");
    std::u32string cs;
    if (!from_utf8(s.items[1].text, cs) || cs.size() != 1) s.items[1].error("expected exactly one character");
    return chr(cs.front());
  }
  if (h == "cat") {
    if (s.items.size() != 3) s.error("'cat' takes 2 operands");
    return cat(chars_from(s.items[1]), chars_from(s.items[2]));
  }
  s.error("unknown Chars form '" + h + "'");
}

inline CharsTerm parse_chars(std::string_view text) { return chars_from(read_sexp(text)); }

inline std::string print_chars_sexpr(const CharsTerm& t) {
  if (const auto* c = t.as<CharsTerm::Chr>()) {
    std::string s = "(chr \"";
    if (c->c == U'"' || c->c == U'\\') s += '\\';
    if (c->c == U'\n') s += "\\n";
    else append_utf8(s, c->c);
    return s + "\")";
  }
  if (const auto* a = t.as<CharsTerm::Append>()) {
    return "(cat " + print_chars_sexpr(*a->l) + " " + print_chars_sexpr(*a->r) + ")";
  }
  return "eps";
}

}  // namespace ebn::chars
