#pragma once

// Minimal s-expression reader shared by the term and Chars front ends.
// Atoms are maximal runs of non-delimiter characters; strings are
// double-quoted with `\"` and `\\` escapes; `;` starts a line comment.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ebn/error.hpp"

namespace ebn {

struct Sexp {
  enum class Kind { atom, string, list };

  Kind kind = Kind::atom;
  std::string text;  // atom or decoded string contents
  std::vector<Sexp> items;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_atom() const noexcept { return kind == Kind::atom; }
  bool is_atom(std::string_view s) const noexcept { return kind == Kind::atom && text == s; }
  bool is_list() const noexcept { return kind == Kind::list; }

  [[noreturn]] void error(const std::string& msg) const { throw SyntaxError(msg, line, column); }
};

class SexpReader {
public:
  explicit SexpReader(std::string_view src) : src_(src) {}

  /// Reads exactly one datum; trailing non-comment text is an error.
  Sexp read_single() {
    skip();
    if (at_end()) throw SyntaxError("empty input", line_, col_);
    Sexp s = read();
    skip();
    if (!at_end()) throw SyntaxError("unexpected trailing input", line_, col_);
    return s;
  }

private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;  // count code points, not continuation bytes
    }
    ++pos_;
  }

  void skip() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  static bool delimiter(char c) {
    return c == '(' || c == ')' || c == ';' || c == '"' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  Sexp read() {
    Sexp s;
    s.line = line_;
    s.column = col_;
    char c = peek();
    if (c == '(') {
      advance();
      s.kind = Sexp::Kind::list;
      for (;;) {
        skip();
        if (at_end()) throw SyntaxError("unclosed '('", s.line, s.column);
        if (peek() == ')') {
          advance();
          return s;
        }
        s.items.push_back(read());
      }
    }
    if (c == ')') throw SyntaxError("unexpected ')'", line_, col_);
    if (c == '"') {
      advance();
      s.kind = Sexp::Kind::string;
      for (;;) {
        if (at_end()) throw SyntaxError("unterminated string", s.line, s.column);
        char d = peek();
        advance();
        if (d == '"') return s;
        if (d == '\\') {
          if (at_end()) throw SyntaxError("unterminated string", s.line, s.column);
          d = peek();
          advance();
          if (d == 'n') d = '\n';
          else if (d != '"' && d != '\\') throw SyntaxError("unknown escape", line_, col_);
        }
        s.text += d;
      }
    }
    while (!at_end() && !delimiter(peek())) {
      s.text += peek();
      advance();
    }
    return s;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline Sexp read_sexp(std::string_view src) { return SexpReader(src).read_single(); }

}  // namespace ebn
