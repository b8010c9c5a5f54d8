#pragma once

#include <vector>

#include "adorb/exact.hpp"
#include "adorb/matrix.hpp"

namespace adorb {

// Multiplier on the trace form tr(XY). The trace form is the default;
// the Cartan-Killing normalization for sl(n+1) is 2(n+1) times it.
struct FormSpec {
  GaussianRational scale;

  static FormSpec trace_form() { return FormSpec{GaussianRational(1)}; }
  static FormSpec killing(int n) { return FormSpec{GaussianRational(2 * (n + 1))}; }
};

// Trace-zero matrix in sl(n+1); the trace is checked at construction.
class LieElement {
 public:
  explicit LieElement(SquareMatrix mat) : mat_(std::move(mat)) {
    if (!mat_.trace().is_zero()) throw PreconditionError("LieElement must be trace-zero");
  }
  static LieElement diagonal(const std::vector<GaussianRational>& d) {
    return LieElement(SquareMatrix::diagonal(d));
  }
  const SquareMatrix& mat() const { return mat_; }
  int dim() const { return mat_.dim(); }
  bool is_diagonal() const;

 private:
  SquareMatrix mat_;
};

// Element of SL(n+1): determinant exactly one, checked at construction.
class GroupElement {
 public:
  explicit GroupElement(SquareMatrix mat) : mat_(std::move(mat)) {
    if (!(det_bareiss(mat_) == GaussianRational(1)))
      throw PreconditionError("GroupElement must have determinant 1");
  }
  const SquareMatrix& mat() const { return mat_; }
  int dim() const { return mat_.dim(); }

 private:
  SquareMatrix mat_;
};

// Permutation of {1,...,n+1} acting on matrices by conjugation with the
// permutation matrix; on diagonal matrices it permutes the diagonal.
class WeylElement {
 public:
  explicit WeylElement(std::vector<int> perm);
  static WeylElement identity(int dim);
  static WeylElement transposition(int dim, int a, int b);  // 0-based

  int dim() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }

  SquareMatrix apply(const SquareMatrix& a) const;
  LieElement apply(const LieElement& x) const { return LieElement(apply(x.mat())); }

 private:
  std::vector<int> perm_;
};

SquareMatrix bracket(const SquareMatrix& a, const SquareMatrix& b);

// Fixed basis of sl(d): E_ij (i != j, row-major) then E_ii - E_{i+1,i+1}.
std::vector<SquareMatrix> sl_basis(int d);
// Coordinates of a trace-zero matrix in that basis.
std::vector<GaussianRational> sl_coordinates(const SquareMatrix& m);

// Real basis of the compact form su(d) (as complex matrices over Q(i)).
std::vector<SquareMatrix> su_basis(int d);

GaussianRational bilinear_form(const LieElement& x, const LieElement& y, const FormSpec& form);

// Matrix of Z -> [X,Z] on the fixed sl basis; dimension d^2 - 1.
SquareMatrix ad_operator(const LieElement& x);

// exp(ad X) Z as the finite series; X must have nilpotent ad, verified by
// powering the ad operator with cap (n+1)^2.
LieElement exp_ad_nilpotent(const LieElement& x, const LieElement& z);

// Distinct permutations of the diagonal of H0 (H0 diagonal, trace zero).
std::vector<LieElement> weyl_orbit_points(const LieElement& h0);

enum class NilSign { Plus, Minus };

// Basis {E_ij : alpha_ij(H0) > 0} (Plus) or < 0 (Minus) for diagonal
// real H0, with alpha_ij(H0) = (H0)_ii - (H0)_jj.
std::vector<LieElement> nilradical_basis(const LieElement& h0, NilSign sign);

// Compact-form conjugation tau(Z) = -conj(Z)^T for su(d).
SquareMatrix tau(const SquareMatrix& z);

// H_tau(X,Y) = -scale * tr(X * tau(Y)); positive definite at trace scale.
GaussianRational hermitian_form(const LieElement& x, const LieElement& y, const FormSpec& form);

// Omega = Im H_tau, the symplectic form on the underlying real space.
Rational omega(const LieElement& x, const LieElement& y, const FormSpec& form);

}  // namespace adorb
