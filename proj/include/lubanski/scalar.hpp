#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "lubanski/error.hpp"

namespace lubanski {

using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rational_string(const Rational& r) { return r.get_str(); }

// Fixed-point rendering of r, rounded half away from zero to `digits` places.
inline std::string decimal_string(const Rational& r, unsigned digits) {
  mpz_class scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  mpz_class num = r.get_num() * scale;
  mpz_class den = r.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_class q = (2 * num + den) / (2 * den);
  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  if (negative && q != 0) body.insert(0, "-");
  return body;
}

// Gaussian rational re + i*im. mpq_class keeps both parts canonical.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar frac(long num, long den) {
    if (den == 0) throw DivisionByZero();
    return Scalar(Rational(num, den));
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_gaussian_integer() const { return re_.get_den() == 1 && im_.get_den() == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    Rational n = o.norm();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  // Non-throwing division for callers that treat a zero divisor as data.
  std::optional<Scalar> try_div(const Scalar& o) const {
    if (o.is_zero()) return std::nullopt;
    Scalar r = *this;
    r /= o;
    return r;
  }

  Scalar inverse() const { return Scalar(1) / *this; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "num/den" when real, "a/b+c/d i" style otherwise ("1/2-3i", "2i").
  std::string str() const {
    if (im_ == 0) return re_.get_str();
    std::string imag = (abs(im_) == 1) ? std::string() : Rational(abs(im_)).get_str();
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag + "i";
    return re_.get_str() + (im_ < 0 ? "-" : "+") + imag + "i";
  }

  std::string decimal(unsigned digits) const {
    if (im_ == 0) return decimal_string(re_, digits);
    std::string imag = decimal_string(abs(im_), digits);
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag + "i";
    return decimal_string(re_, digits) + (im_ < 0 ? "-" : "+") + imag + "i";
  }

  static Scalar parse(std::string_view text);

private:
  Rational re_{0};
  Rational im_{0};
};

// Accepts the output of Scalar::str().
inline Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty scalar literal");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    if (t.front() == '+') t.erase(0, 1);
    return parse_rational(t);
  };
  if (split == std::string::npos) return Scalar(Rational(0), imag_part(body));
  return Scalar(parse_rational(body.substr(0, split)), imag_part(body.substr(split)));
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace lubanski
