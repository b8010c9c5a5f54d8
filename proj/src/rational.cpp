#include "adorb/rational.hpp"

#include <cctype>
#include <sstream>

namespace adorb {

Rational make_rational(long num, long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

// number := digits ('/' digits)?
Rational parse_rational_at(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits in rational at '" + s.substr(start) + "'");
  if (pos < s.size() && (s[pos] == '.' || s[pos] == 'e' || s[pos] == 'E'))
    throw ParseError("floating-point literal rejected: '" + s + "'");
  std::string num = s.substr(start, pos - start);
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected denominator digits in '" + s + "'");
    if (pos < s.size() && (s[pos] == '.' || s[pos] == 'e' || s[pos] == 'E'))
      throw ParseError("floating-point literal rejected: '" + s + "'");
    den = s.substr(dstart, pos - dstart);
  }
  Rational r(num + "/" + den);
  if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  size_t pos = 0;
  skip_ws(s, pos);
  int sign = 1;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign = -1;
    ++pos;
    skip_ws(s, pos);
  }
  Rational r = parse_rational_at(s, pos);
  skip_ws(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters in rational '" + s + "'");
  return sign < 0 ? Rational(-r) : r;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  Rational n = norm();
  return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

int cmp_structural(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re(), b.re());
  if (c != 0) return c;
  return cmp(a.im(), b.im());
}

std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  if (z.is_real()) return to_string(z.re());
  std::ostringstream out;
  out << to_string(z.re());
  if (sgn(z.im()) >= 0)
    out << "+" << to_string(z.im());
  else
    out << "-" << to_string(Rational(-z.im()));
  out << " i";
  return out.str();
}

GaussianRational parse_gaussian(const std::string& s) {
  size_t pos = 0;
  GaussianRational acc;
  bool saw_re = false, saw_im = false;
  int parts = 0;
  skip_ws(s, pos);
  if (pos == s.size()) throw ParseError("empty scalar literal");
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
      skip_ws(s, pos);
    } else if (parts > 0) {
      throw ParseError("expected '+' or '-' between parts of '" + s + "'");
    }
    Rational mag;
    bool imaginary = false;
    if (pos < s.size() && s[pos] == 'i') {
      mag = 1;
      imaginary = true;
      ++pos;
    } else {
      mag = parse_rational_at(s, pos);
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == 'i') {
        imaginary = true;
        ++pos;
      }
    }
    if (sign < 0) mag = -mag;
    if (imaginary) {
      if (saw_im) throw ParseError("duplicate imaginary part in '" + s + "'");
      saw_im = true;
      acc += GaussianRational(Rational(0), mag);
    } else {
      if (saw_re) throw ParseError("duplicate real part in '" + s + "'");
      saw_re = true;
      acc += GaussianRational(mag);
    }
    ++parts;
    skip_ws(s, pos);
  }
  if (parts > 2) throw ParseError("too many parts in scalar '" + s + "'");
  return acc;
}

}  // namespace adorb
