#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace hodge {

/// Ground field of a document or computation.
enum class Field { Q, Qi };

/// Exact element of Q(i): a pair of reduced GMP rationals.
///
/// The rational subfield is the set of values with zero imaginary part, so
/// Q and Q(i) share one representation. String form is "a/b" for rationals
/// and "a/b+c/d*i" (sign of the imaginary part always written) otherwise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}
  Scalar(long v) : re_(v) {}
  explicit Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(long num, long den = 1);
  static Scalar gaussian(long re_num, long re_den, long im_num, long im_den);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Throws MathViolation on zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const;
  /// Accepts "a", "a/b", "a/b+c/d*i", "c/d*i", "i", "-i", and whitespace-free
  /// variants thereof. Throws ParseError.
  static Scalar parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hodge
