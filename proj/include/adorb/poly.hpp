#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "adorb/errors.hpp"
#include "adorb/rational.hpp"

namespace adorb {

// Ordered list of variable names; shared between the polynomials of one
// computation. Polynomials with a null ring are plain constants and unify
// with any ring on demand.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> vars);

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(std::move(vars));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int index_of(const std::string& name) const;  // -1 if absent

  std::shared_ptr<const PolyRing> extended(const std::string& extra) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// Exponent vector, always of length ring->nvars() once the ring is known.
using Mono = std::vector<std::uint32_t>;

std::uint64_t mono_degree(const Mono& m);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& b, const Mono& a);  // b / a, requires a | b
Mono mono_lcm(const Mono& a, const Mono& b);

struct MonomialOrder {
  enum class Kind { Grevlex, Grlex, Lex };
  Kind kind = Kind::Grevlex;
  std::vector<std::string> vars;  // most significant first

  static MonomialOrder grevlex(const RingPtr& ring) { return {Kind::Grevlex, ring->vars()}; }
  static MonomialOrder grlex(const RingPtr& ring) { return {Kind::Grlex, ring->vars()}; }
  static MonomialOrder lex(const RingPtr& ring) { return {Kind::Lex, ring->vars()}; }
  static MonomialOrder of_kind(const std::string& kind, const RingPtr& ring);

  bool graded() const { return kind != Kind::Lex; }
  std::string kind_name() const;
};

// An order resolved against a concrete ring: compares exponent vectors.
class OrderCtx {
 public:
  OrderCtx(const MonomialOrder& order, const RingPtr& ring);
  // <0, 0, >0 as a < b, a == b, a > b.
  int compare(const Mono& a, const Mono& b) const;
  bool less(const Mono& a, const Mono& b) const { return compare(a, b) < 0; }
  const MonomialOrder& order() const { return order_; }

 private:
  MonomialOrder order_;
  std::vector<int> pos_;  // pos_[k] = ring index of the k-th order variable
};

struct Term {
  Mono mono;
  GaussianRational coeff;
  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

// Sparse multivariate polynomial over Q(i). Terms are kept sorted in
// descending grevlex (the ring's natural variable order) with no zero
// coefficients and no duplicate monomials; equality is structural.
class Polynomial {
 public:
  Polynomial() = default;  // zero, ring-agnostic
  Polynomial(int v) : Polynomial(GaussianRational(static_cast<long>(v))) {}  // NOLINT
  explicit Polynomial(const GaussianRational& c);
  Polynomial(RingPtr ring, std::vector<Term> terms);  // canonicalizes

  static Polynomial variable(const RingPtr& ring, int index);
  static Polynomial variable(const RingPtr& ring, const std::string& name);
  static Polynomial constant(const RingPtr& ring, const GaussianRational& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianRational constant_value() const;  // coefficient of the 1 monomial

  std::uint64_t total_degree() const;  // 0 for the zero polynomial

  GaussianRational coeff_of(const Mono& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const GaussianRational& s) const;
  Polynomial operator*(const Rational& s) const { return *this * GaussianRational(s); }
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Term-wise image under var -> images[var]; images must share a ring
  // (or be constants). Exact expansion.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

  Polynomial derivative(int var) const;

  // Same polynomial over a superset ring (variables matched by name).
  Polynomial lifted(const RingPtr& bigger) const;
  // Drop variables that never appear; requires them absent.
  Polynomial restricted(const RingPtr& smaller) const;

  // Multiply each term by t^(maxdeg - deg); t must be a ring variable
  // not occurring in this polynomial.
  Polynomial homogenized(int t_index) const;
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  friend class PolyBuilder;
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Parses standard infix notation ("2*a11*a22 - t^2") against a ring.
// Exact; floating literals are rejected. The token "i" is the imaginary
// unit unless the ring declares a variable named "i".
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace adorb
