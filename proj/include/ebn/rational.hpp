#pragma once

#include <charconv>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "ebn/error.hpp"

namespace ebn {

/// Exact rational number over 64-bit integers. Always kept in lowest terms
/// with a positive denominator; any overflow throws ArithmeticOverflow.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT: implicit from integers
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
  }

  /// Throws DivisionByZero on a zero divisor.
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZero();
    return a * Rational(b.den_, b.num_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t l = mul(a.den_ / g, b.den_);
    return Rational(add(mul(a.num_, l / a.den_), mul(b.num_, l / b.den_)), l);
  }

  friend Rational operator-(const Rational& a) { return Rational(neg(a.num_), a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

  /// `p` for integers, `p/q` otherwise; the sign goes on the numerator.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parses the wire format written by str(). Also accepts non-reduced input
  /// such as `2/4`, which is normalized.
  static bool parse(std::string_view text, Rational& out) {
    auto slash = text.find('/');
    std::string_view ntext = text.substr(0, slash);
    std::int64_t n = 0;
    std::int64_t d = 1;
    if (!parse_int(ntext, true, n)) return false;
    if (slash != std::string_view::npos) {
      if (!parse_int(text.substr(slash + 1), false, d) || d == 0) return false;
    }
    out = Rational(n, d);
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static bool parse_int(std::string_view s, bool allow_sign, std::int64_t& out) {
    if (s.empty()) return false;
    if (s.front() == '-' && !allow_sign) return false;
    if (s.front() == '+') return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  }

  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("rational overflow");
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("rational overflow");
    return r;
  }
  static std::int64_t neg(std::int64_t a) {
    if (a == INT64_MIN) throw ArithmeticOverflow("rational overflow");
    return -a;
  }

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DivisionByZero();
    if (d < 0) {
      n = neg(n);
      d = neg(d);
    }
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ebn
