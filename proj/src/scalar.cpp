#include "hodgeconn/scalar.hpp"

#include <cctype>

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty rational in scalar '" + std::string(whole) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw ParseError("bad character in scalar '" + std::string(whole) + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("unparsable rational '" + std::string(whole) + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

// "c/d*i", "c/di", "i", "-i", "+i" without the leading real part.
mpq_class parse_imaginary(std::string_view text, std::string_view whole) {
  std::string_view body = text.substr(0, text.size() - 1);  // drop 'i'
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  if (body.empty() || body == "+") return mpq_class(1);
  if (body == "-") return mpq_class(-1);
  return parse_rational(body, whole);
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw MathViolation("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::gaussian(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0) throw MathViolation("zero denominator");
  return Scalar(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathViolation("division by zero");
  if (sgn(im_) == 0) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw MathViolation("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::str() const {
  std::string out = re_.get_str();
  if (sgn(im_) == 0) return out;
  if (sgn(im_) > 0) out += '+';
  out += im_.get_str();
  out += "*i";
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  std::string_view s(compact);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s, text));
  // Split at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(mpq_class(0), parse_imaginary(s, text));
  return Scalar(parse_rational(s.substr(0, split), text), parse_imaginary(s.substr(split), text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hodge
