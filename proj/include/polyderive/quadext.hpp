#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "polyderive/rational.hpp"

namespace polyderive {

/// a + b*sqrt(d) over the rationals.
///
/// The radicand is stored as given (no square-free reduction). A value built
/// from a plain Rational carries no radicand yet; it adopts the radicand of
/// whatever it is combined with, which is exactly the embedding r -> r + 0*sqrt(d).
/// Combining two values whose radicands are both set and differ throws
/// radicand_mismatch.
class QuadExt {
 public:
  QuadExt() = default;

  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I>
  QuadExt(I a) : a_(a) {}  // NOLINT(google-explicit-constructor)

  QuadExt(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_->sign() <= 0) throw precondition_error("radicand must be positive, got " + d_->to_string());
  }

  /// sqrt(d) itself.
  static QuadExt root(const Rational& d) { return QuadExt(Rational{}, Rational{1}, d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const std::optional<Rational>& radicand() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Exact sign of a + b*sqrt(d).
  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with b^2 d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * *d_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  /// Conjugate-over-norm inverse. Throws zero_division for x == 0 and for a
  /// vanishing norm a^2 - b^2 d (only possible when d is a rational square).
  QuadExt inverse() const {
    if (is_zero()) throw zero_division("inverse of zero");
    if (b_.is_zero()) return QuadExt(a_.inverse(), Rational{}, d_);
    const Rational norm = a_ * a_ - b_ * b_ * *d_;
    if (norm.is_zero())
      throw zero_division("a^2 - b^2 d vanishes; radicand " + d_->to_string() + " is a rational square");
    return QuadExt(a_ / norm, -b_ / norm, d_);
  }

  double to_double() const {
    if (b_.is_zero()) return a_.to_double();
    return a_.to_double() + b_.to_double() * std::sqrt(d_->to_double());
  }

  std::string to_string() const {
    if (!d_ || b_.is_zero()) return a_.to_string();
    return a_.to_string() + " + " + b_.to_string() + "*sqrt(" + d_->to_string() + ")";
  }

  QuadExt& operator+=(const QuadExt& o) {
    d_ = common_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    d_ = common_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    d_ = common_radicand(*this, o);
    Rational a = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) a += b_ * o.b_ * *d_;
    Rational b = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) {
    common_radicand(*this, o);
    return *this *= o.inverse();
  }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.d_); }

  /// Equal iff the (a, b) pairs agree. Radicands that are both set must match.
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    common_radicand(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

 private:
  QuadExt(Rational a, Rational b, std::optional<Rational> d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  static std::optional<Rational> common_radicand(const QuadExt& x, const QuadExt& y) {
    if (!x.d_) return y.d_;
    if (!y.d_) return x.d_;
    if (*x.d_ != *y.d_)
      throw radicand_mismatch("radicand mismatch: " + x.d_->to_string() + " vs " + y.d_->to_string());
    return x.d_;
  }

  Rational a_;
  Rational b_;
  std::optional<Rational> d_;
};

inline QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }
inline QuadExt quad_inv(const QuadExt& x) { return x.inverse(); }

inline int sign(const QuadExt& x) { return x.sign(); }
inline double to_double(const QuadExt& x) { return x.to_double(); }
inline QuadExt inverse(const QuadExt& x) { return x.inverse(); }

}  // namespace polyderive
