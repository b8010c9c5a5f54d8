#pragma once

#include <utility>
#include <vector>

#include "adorb/errors.hpp"
#include "adorb/rational.hpp"

namespace adorb {

// Dense square matrix over a commutative ring R. R must be default
// constructible (= 0), constructible from int, and support +, -, *, ==,
// plus scaling by Rational. Instantiated with GaussianRational for the
// scalar layer and with Polynomial for symbolic work.
template <class R>
class MatrixT {
 public:
  explicit MatrixT(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {
    if (dim < 1) throw PreconditionError("matrix dimension must be >= 1");
  }

  static MatrixT identity(int dim) {
    MatrixT m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = R(1);
    return m;
  }

  static MatrixT diagonal(const std::vector<R>& d) {
    MatrixT m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim_; ++i) m.at(i, i) = d[i];
    return m;
  }

  int dim() const { return dim_; }

  R& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
  const R& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

  const std::vector<R>& entries() const { return e_; }

  bool is_zero() const {
    R zero{};
    for (const R& x : e_)
      if (!(x == zero)) return false;
    return true;
  }

  R trace() const {
    R t{};
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  MatrixT transpose() const {
    MatrixT m(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  MatrixT operator-() const {
    MatrixT m(dim_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
  }

  MatrixT& operator+=(const MatrixT& o) {
    check_dim(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  MatrixT& operator-=(const MatrixT& o) {
    check_dim(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }

  friend MatrixT operator+(MatrixT a, const MatrixT& b) { return a += b; }
  friend MatrixT operator-(MatrixT a, const MatrixT& b) { return a -= b; }

  friend MatrixT operator*(const MatrixT& a, const MatrixT& b) {
    a.check_dim(b);
    MatrixT c(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        const R& aik = a.at(i, k);
        if (aik == R{}) continue;
        for (int j = 0; j < a.dim_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend MatrixT operator*(const R& s, const MatrixT& m) {
    MatrixT c(m.dim_);
    for (size_t k = 0; k < m.e_.size(); ++k) c.e_[k] = s * m.e_[k];
    return c;
  }

  friend MatrixT operator*(const MatrixT& m, const R& s) {
    MatrixT c(m.dim_);
    for (size_t k = 0; k < m.e_.size(); ++k) c.e_[k] = m.e_[k] * s;
    return c;
  }

  MatrixT scaled(const Rational& s) const {
    MatrixT c(dim_);
    for (size_t k = 0; k < e_.size(); ++k) c.e_[k] = e_[k] * s;
    return c;
  }

  std::vector<R> apply(const std::vector<R>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw DimensionError("matrix/vector dimension mismatch");
    std::vector<R> out(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  std::vector<R> column(int j) const {
    std::vector<R> c(dim_);
    for (int i = 0; i < dim_; ++i) c[i] = at(i, j);
    return c;
  }
  std::vector<R> row(int i) const {
    std::vector<R> r(dim_);
    for (int j = 0; j < dim_; ++j) r[j] = at(i, j);
    return r;
  }

  friend bool operator==(const MatrixT& a, const MatrixT& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const MatrixT& a, const MatrixT& b) { return !(a == b); }

 private:
  void check_dim(const MatrixT& o) const {
    if (dim_ != o.dim_) throw DimensionError("matrix dimension mismatch");
  }

  int dim_;
  std::vector<R> e_;
};

template <class R>
MatrixT<R> outer(const std::vector<R>& v, const std::vector<R>& w) {
  if (v.size() != w.size()) throw DimensionError("outer product dimension mismatch");
  MatrixT<R> m(static_cast<int>(v.size()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) m.at(i, j) = v[i] * w[j];
  return m;
}

template <class R>
MatrixT<R> matrix_pow(const MatrixT<R>& a, unsigned k) {
  MatrixT<R> r = MatrixT<R>::identity(a.dim());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

// Determinant by cofactor expansion along the first row; works over any
// commutative ring, intended for small dimensions.
template <class R>
R det_cofactor(const MatrixT<R>& a) {
  int d = a.dim();
  if (d == 1) return a.at(0, 0);
  if (d == 2) return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
  R acc{};
  for (int j = 0; j < d; ++j) {
    if (a.at(0, j) == R{}) continue;
    MatrixT<R> minor(d - 1);
    for (int r = 1; r < d; ++r) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = a.at(r, c);
      }
    }
    R term = a.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Classical adjoint via cofactors: (adj A)_ij = C_ji; adj of a 1x1 is [1].
template <class R>
MatrixT<R> adjugate_cofactor(const MatrixT<R>& a) {
  int d = a.dim();
  MatrixT<R> adj(d);
  if (d == 1) {
    adj.at(0, 0) = R(1);
    return adj;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      MatrixT<R> minor(d - 1);
      int rr = 0;
      for (int r = 0; r < d; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < d; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = a.at(r, c);
        }
        ++rr;
      }
      R cof = det_cofactor(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj.at(j, i) = cof;
    }
  return adj;
}

// exp of a nilpotent matrix: finite series sum_k X^k / k!.
// Throws PreconditionError if X^dim != 0.
template <class R>
MatrixT<R> exp_nilpotent(const MatrixT<R>& x) {
  int d = x.dim();
  MatrixT<R> sum = MatrixT<R>::identity(d);
  MatrixT<R> term = MatrixT<R>::identity(d);
  for (int k = 1; k <= d; ++k) {
    term = (term * x).scaled(make_rational(1, k));
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw PreconditionError("exp_nilpotent: matrix is not nilpotent");
}

}  // namespace adorb
