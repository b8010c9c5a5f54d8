#pragma once

#include <gmpxx.h>

#include <string>

#include "adorb/errors.hpp"

namespace adorb {

// Arbitrary-precision rational, always in canonical reduced form
// (GMP keeps results of arithmetic canonical as long as inputs are).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Strict parser for "p" or "p/q" with optional leading sign.
// Rejects floating-point literals and empty input.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

// Exact scalar a + b*i over Q(i), the base field for everything here.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(const Rational& re) : re_(re), im_(0) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  // re^2 + im^2, the multiplicative norm down to Q.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inverse() const;

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

 private:
  Rational re_, im_;
};

// Structural total order (re, then im), used only for canonical sorting.
int cmp_structural(const GaussianRational& a, const GaussianRational& b);

// Canonical text form: "0", "p/q", or "p/q+r/s i" / "p/q-r/s i".
std::string to_string(const GaussianRational& z);

// Parses the matrix-literal entry format: "p/q", "p/q+r/s i", "r/s i",
// "i" with optional signs. Exact; floating literals are rejected.
GaussianRational parse_gaussian(const std::string& s);

}  // namespace adorb
