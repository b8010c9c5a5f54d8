#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "adorb/matrix.hpp"
#include "adorb/rational.hpp"

namespace adorb {

using SquareMatrix = MatrixT<GaussianRational>;

// Univariate polynomial over Q(i), coefficients stored lowest degree first,
// leading coefficient nonzero unless the zero polynomial.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static UnivariatePolynomial x_power(int k);
  // (x - r)
  static UnivariatePolynomial linear_root(const GaussianRational& r);

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  GaussianRational leading() const { return c_.empty() ? GaussianRational() : c_.back(); }

  UnivariatePolynomial monic() const;
  GaussianRational evaluate(const GaussianRational& x) const;
  SquareMatrix evaluate_matrix(const SquareMatrix& a) const;
  UnivariatePolynomial derivative() const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a.c_ == b.c_;
  }

  // Euclidean remainder; divisor must be nonzero.
  UnivariatePolynomial remainder_by(const UnivariatePolynomial& divisor) const;
  bool divides(const UnivariatePolynomial& other) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussianRational> c_;
};

// Fraction-free Bareiss determinant, exact over Q(i).
GaussianRational det_bareiss(const SquareMatrix& a);

// Classical adjoint together with the determinant: A * adj(A) = det(A) * Id.
std::pair<SquareMatrix, GaussianRational> adjugate(const SquareMatrix& a);

// Exact rank via fraction-free elimination.
int rank(const SquareMatrix& a);

// Basis of the right kernel (independent of the rank routine).
std::vector<std::vector<GaussianRational>> kernel_basis(const SquareMatrix& a);

// Monic polynomial of least degree with p(A) = 0, by growing the linear
// span of Id, A, A^2, ... until the first dependency.
UnivariatePolynomial minimal_polynomial(const SquareMatrix& a);

// det(x Id - A) by the Faddeev-LeVerrier recursion.
UnivariatePolynomial characteristic_polynomial(const SquareMatrix& a);

// Matrix literal format: JSON array of rows, entries as exact strings.
SquareMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const SquareMatrix& a);

}  // namespace adorb
