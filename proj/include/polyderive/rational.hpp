#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "polyderive/error.hpp"

namespace polyderive {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(const BigInt& value) : q_(value) {}

  /// num/den in canonical form. Throws zero_division when den == 0.
  static Rational from_fraction(const BigInt& num, const BigInt& den) {
    if (den == 0) throw zero_division("rational with zero denominator");
    Rational r;
    r.q_.get_num() = num;
    r.q_.get_den() = den;
    r.q_.canonicalize();
    return r;
  }

  /// Accepts "p", "p/q" and decimal "x.y" (converted exactly).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  Rational inverse() const {
    if (is_zero()) throw zero_division("inverse of zero");
    Rational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  double to_double() const { return q_.get_d(); }

  std::string to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw zero_division("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpq_class q_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw parse_error("not a number: \"" + std::string(whole) + "\"");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = detail::parse_integer(text.substr(0, slash), whole);
    const std::string_view den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text)) throw parse_error("bad denominator: \"" + std::string(whole) + "\"");
    const BigInt den(std::string(den_text), 10);
    if (den == 0) throw zero_division("zero denominator in \"" + std::string(whole) + "\"");
    return from_fraction(num, den);
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !detail::all_digits(int_part)) ||
        (!frac_part.empty() && !detail::all_digits(frac_part)))
      throw parse_error("not a number: \"" + std::string(whole) + "\"");
    const std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    if (negative) num = -num;
    return from_fraction(num, den);
  }

  return Rational(detail::parse_integer(text, whole));
}

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational::from_fraction(num, den); }

inline int sign(const Rational& r) { return r.sign(); }
inline double to_double(const Rational& r) { return r.to_double(); }
inline Rational inverse(const Rational& r) { return r.inverse(); }

}  // namespace polyderive
