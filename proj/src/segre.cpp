#include "adorb/segre.hpp"

#include <sstream>

namespace adorb {

ProjectivePoint::ProjectivePoint(std::vector<GaussianRational> coords)
    : coords_(std::move(coords)) {
  int pivot = -1;
  for (size_t k = 0; k < coords_.size(); ++k)
    if (!coords_[k].is_zero()) {
      pivot = static_cast<int>(k);
      break;
    }
  if (pivot < 0) throw PreconditionError("projective point needs a nonzero coordinate");
  GaussianRational inv = coords_[pivot].inverse();
  for (auto& c : coords_) c *= inv;
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream out;
  out << "[";
  for (size_t k = 0; k < coords_.size(); ++k) {
    if (k) out << ":";
    out << adorb::to_string(coords_[k]);
  }
  out << "]";
  return out.str();
}

ProjectivePoint segre_coords(const GroupElement& g) {
  TensorPoint p = tensor_point(g);
  SquareMatrix m = p.outer();
  std::vector<GaussianRational> coords;
  coords.reserve(static_cast<size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) coords.push_back(m.at(i, j));
  return ProjectivePoint(std::move(coords));
}

Eigenstructure eigenstructure(const SquareMatrix& m, const GroupElement& g) {
  if (m.dim() != g.dim()) throw DimensionError("eigenstructure dimension mismatch");
  if (!(m.trace() == GaussianRational(1)))
    throw PreconditionError("eigenstructure: tr M must be 1");
  Eigenstructure e;
  e.image_vector = g.mat().column(0);
  for (int k = 1; k < g.dim(); ++k) e.kernel_basis.push_back(g.mat().column(k));
  return e;
}

bool incidence_member(const IncidencePair& pair) {
  if (pair.w.size() != pair.xi.size()) throw DimensionError("incidence pair dimension mismatch");
  bool w_zero = true, xi_zero = true;
  for (const auto& c : pair.w) w_zero = w_zero && c.is_zero();
  for (const auto& c : pair.xi) xi_zero = xi_zero && c.is_zero();
  if (w_zero || xi_zero) throw PreconditionError("incidence pair needs nonzero vector and covector");
  GaussianRational s;
  for (size_t k = 0; k < pair.w.size(); ++k) s += pair.xi[k] * pair.w[k];
  return s.is_zero();
}

std::pair<SquareMatrix, GaussianRational> ambient_change(const SquareMatrix& z) {
  int d = z.dim();
  GaussianRational t = z.trace();
  SquareMatrix a = z.scaled(Rational(d));
  for (int i = 0; i < d; ++i) a.at(i, i) -= t;
  return {std::move(a), std::move(t)};
}

SquareMatrix ambient_change_inverse(const SquareMatrix& a, const GaussianRational& t) {
  int d = a.dim();
  SquareMatrix z = a;
  for (int i = 0; i < d; ++i) z.at(i, i) += t;
  return z.scaled(make_rational(1, d));
}

}  // namespace adorb
