#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ebn {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A lambda or injection without its type annotation.
class AnnotationMissing : public SyntaxError {
public:
  using SyntaxError::SyntaxError;
};

enum class TypeErrorKind {
  unbound_variable,
  arity_mismatch,
  type_mismatch,
  unknown_primitive,
  unknown_base_type,
};

inline const char* to_string(TypeErrorKind k) {
  switch (k) {
    case TypeErrorKind::unbound_variable: return "unbound variable";
    case TypeErrorKind::arity_mismatch: return "arity mismatch";
    case TypeErrorKind::type_mismatch: return "type mismatch";
    case TypeErrorKind::unknown_primitive: return "unknown primitive";
    case TypeErrorKind::unknown_base_type: return "unknown base type";
  }
  return "type error";
}

/// Raised by the typechecker. `path` lists the constructor steps from the
/// root of the checked term down to the offending subterm.
class TypeError : public Error {
public:
  TypeError(TypeErrorKind kind, const std::string& detail, std::vector<std::string> path)
      : Error(format(kind, detail, path)), kind_(kind), path_(std::move(path)) {}

  TypeErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& path() const noexcept { return path_; }

private:
  static std::string format(TypeErrorKind kind, const std::string& detail,
                            const std::vector<std::string>& path) {
    std::string out = std::string(to_string(kind)) + ": " + detail;
    if (!path.empty()) {
      out += " (at ";
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += '/';
        out += path[i];
      }
      out += ')';
    }
    return out;
  }

  TypeErrorKind kind_;
  std::vector<std::string> path_;
};

/// A semantic value whose shape contradicts its type. Unreachable from
/// well-typed input; seeing one means an evaluator bug.
class ShapeMismatch : public Error {
public:
  using Error::Error;
};

/// Static folding hit a zero divisor during normalization.
class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// The reference interpreter divided by zero.
class RuntimeDivisionByZero : public Error {
public:
  RuntimeDivisionByZero() : Error("runtime division by zero") {}
};

class ArithmeticOverflow : public Error {
public:
  using Error::Error;
};

class NotCanonical : public Error {
public:
  NotCanonical() : Error("term is not in canonical form") {}
};

}  // namespace ebn
