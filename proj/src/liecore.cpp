#include "adorb/liecore.hpp"

#include <algorithm>
#include <set>

namespace adorb {

bool LieElement::is_diagonal() const {
  for (int i = 0; i < mat_.dim(); ++i)
    for (int j = 0; j < mat_.dim(); ++j)
      if (i != j && !mat_.at(i, j).is_zero()) return false;
  return true;
}

WeylElement::WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
  std::set<int> seen;
  for (int p : perm_) {
    if (p < 0 || p >= dim()) throw PreconditionError("permutation image out of range");
    if (!seen.insert(p).second) throw PreconditionError("permutation is not a bijection");
  }
}

WeylElement WeylElement::identity(int dim) {
  std::vector<int> p(dim);
  for (int i = 0; i < dim; ++i) p[i] = i;
  return WeylElement(std::move(p));
}

WeylElement WeylElement::transposition(int dim, int a, int b) {
  WeylElement w = identity(dim);
  std::swap(w.perm_[a], w.perm_[b]);
  return w;
}

SquareMatrix WeylElement::apply(const SquareMatrix& a) const {
  if (a.dim() != dim()) throw DimensionError("WeylElement dimension mismatch");
  SquareMatrix b(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) b.at(perm_[i], perm_[j]) = a.at(i, j);
  return b;
}

SquareMatrix bracket(const SquareMatrix& a, const SquareMatrix& b) { return a * b - b * a; }

std::vector<SquareMatrix> sl_basis(int d) {
  std::vector<SquareMatrix> basis;
  basis.reserve(static_cast<size_t>(d) * d - 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      SquareMatrix e(d);
      e.at(i, j) = GaussianRational(1);
      basis.push_back(std::move(e));
    }
  for (int i = 0; i + 1 < d; ++i) {
    SquareMatrix h(d);
    h.at(i, i) = GaussianRational(1);
    h.at(i + 1, i + 1) = GaussianRational(-1);
    basis.push_back(std::move(h));
  }
  return basis;
}

std::vector<GaussianRational> sl_coordinates(const SquareMatrix& m) {
  if (!m.trace().is_zero()) throw PreconditionError("sl_coordinates needs a trace-zero matrix");
  int d = m.dim();
  std::vector<GaussianRational> coords;
  coords.reserve(static_cast<size_t>(d) * d - 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) coords.push_back(m.at(i, j));
  GaussianRational partial;
  for (int i = 0; i + 1 < d; ++i) {
    partial += m.at(i, i);
    coords.push_back(partial);
  }
  return coords;
}

std::vector<SquareMatrix> su_basis(int d) {
  std::vector<SquareMatrix> basis;
  const GaussianRational i_unit = GaussianRational::i();
  for (int k = 0; k + 1 < d; ++k) {
    SquareMatrix h(d);
    h.at(k, k) = i_unit;
    h.at(k + 1, k + 1) = -i_unit;
    basis.push_back(std::move(h));
  }
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) {
      SquareMatrix a(d);
      a.at(k, l) = GaussianRational(1);
      a.at(l, k) = GaussianRational(-1);
      basis.push_back(std::move(a));
      SquareMatrix b(d);
      b.at(k, l) = i_unit;
      b.at(l, k) = i_unit;
      basis.push_back(std::move(b));
    }
  return basis;
}

GaussianRational bilinear_form(const LieElement& x, const LieElement& y, const FormSpec& form) {
  if (x.dim() != y.dim()) throw DimensionError("bilinear_form dimension mismatch");
  return form.scale * (x.mat() * y.mat()).trace();
}

SquareMatrix ad_operator(const LieElement& x) {
  int d = x.dim();
  std::vector<SquareMatrix> basis = sl_basis(d);
  int m = static_cast<int>(basis.size());
  SquareMatrix op(m);
  for (int k = 0; k < m; ++k) {
    std::vector<GaussianRational> col = sl_coordinates(bracket(x.mat(), basis[k]));
    for (int r = 0; r < m; ++r) op.at(r, k) = col[r];
  }
  return op;
}

LieElement exp_ad_nilpotent(const LieElement& x, const LieElement& z) {
  if (x.dim() != z.dim()) throw DimensionError("exp_ad_nilpotent dimension mismatch");
  int d = x.dim();
  SquareMatrix ad = ad_operator(x);
  SquareMatrix power = ad;
  int cap = d * d;
  bool nilpotent = power.is_zero();
  for (int k = 1; k < cap && !nilpotent; ++k) {
    power = power * ad;
    nilpotent = power.is_zero();
  }
  if (!nilpotent)
    throw PreconditionError("exp_ad_nilpotent: ad(X) is not nilpotent");
  SquareMatrix sum = z.mat();
  SquareMatrix term = z.mat();
  for (int k = 1; !term.is_zero(); ++k) {
    term = bracket(x.mat(), term).scaled(make_rational(1, k));
    sum += term;
  }
  return LieElement(std::move(sum));
}

std::vector<LieElement> weyl_orbit_points(const LieElement& h0) {
  if (!h0.is_diagonal()) throw PreconditionError("weyl_orbit_points needs a diagonal element");
  int d = h0.dim();
  std::vector<GaussianRational> diag(d);
  for (int i = 0; i < d; ++i) diag[i] = h0.mat().at(i, i);
  auto less = [](const GaussianRational& a, const GaussianRational& b) {
    return cmp_structural(a, b) < 0;
  };
  std::sort(diag.begin(), diag.end(), less);
  std::vector<LieElement> points;
  do {
    points.push_back(LieElement::diagonal(diag));
  } while (std::next_permutation(diag.begin(), diag.end(), less));
  return points;
}

std::vector<LieElement> nilradical_basis(const LieElement& h0, NilSign sign) {
  if (!h0.is_diagonal()) throw PreconditionError("nilradical_basis needs a diagonal element");
  int d = h0.dim();
  for (int i = 0; i < d; ++i)
    if (!h0.mat().at(i, i).is_real())
      throw PreconditionError("nilradical_basis needs a real diagonal");
  std::vector<LieElement> basis;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      Rational alpha = h0.mat().at(i, i).re() - h0.mat().at(j, j).re();
      int s = sgn(alpha);
      if ((sign == NilSign::Plus && s > 0) || (sign == NilSign::Minus && s < 0)) {
        SquareMatrix e(d);
        e.at(i, j) = GaussianRational(1);
        basis.push_back(LieElement(std::move(e)));
      }
    }
  return basis;
}

SquareMatrix tau(const SquareMatrix& z) {
  SquareMatrix t(z.dim());
  for (int i = 0; i < z.dim(); ++i)
    for (int j = 0; j < z.dim(); ++j) t.at(i, j) = -z.at(j, i).conj();
  return t;
}

GaussianRational hermitian_form(const LieElement& x, const LieElement& y, const FormSpec& form) {
  if (x.dim() != y.dim()) throw DimensionError("hermitian_form dimension mismatch");
  return -(form.scale * (x.mat() * tau(y.mat())).trace());
}

Rational omega(const LieElement& x, const LieElement& y, const FormSpec& form) {
  return hermitian_form(x, y, form).im();
}

}  // namespace adorb
