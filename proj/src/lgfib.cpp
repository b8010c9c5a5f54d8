#include "adorb/lgfib.hpp"

#include <string>

namespace adorb {

GaussianRational potential_f(const LieElement& a, const OrbitSpec& spec, const FormSpec& form) {
  if (a.dim() != spec.dim()) throw DimensionError("potential_f dimension mismatch");
  return form.scale * (spec.h().mat() * a.mat()).trace();
}

GaussianRational rational_potential_R(const SquareMatrix& m, const OrbitSpec& spec) {
  if (m.dim() != spec.dim()) throw DimensionError("rational_potential_R dimension mismatch");
  GaussianRational tr = m.trace();
  if (tr.is_zero())
    throw IndeterminacyError("rational potential undefined: tr M = 0 (incidence variety)");
  return (m * spec.h().mat()).trace() / tr;
}

RingPtr chart_ring(int n) {
  std::vector<std::string> vars;
  vars.reserve(2 * n);
  for (int k = 1; k <= n; ++k) vars.push_back("y" + std::to_string(k));
  for (int k = 1; k <= n; ++k) vars.push_back("x" + std::to_string(k));
  return PolyRing::make(std::move(vars));
}

Polynomial chart_potential_poly(const OrbitSpec& spec, int j, const FormSpec& form) {
  spec.require_regular();
  int d = spec.dim();
  if (j < 1 || j > d) throw PreconditionError("chart index out of range");
  int j0 = j - 1;
  RingPtr ring = chart_ring(spec.n());

  using PolyMatrix = MatrixT<Polynomial>;
  PolyMatrix Y(d), X(d);
  int k = 0;
  for (int r = 0; r < d; ++r) {
    if (r == j0) continue;
    Y.at(r, j0) = Polynomial::variable(ring, k);             // y_{k+1} E_{r,j}
    X.at(j0, r) = Polynomial::variable(ring, spec.n() + k);  // x_{k+1} E_{j,r}
    ++k;
  }

  WeylElement w = WeylElement::transposition(d, 0, j0);
  SquareMatrix base = w.apply(spec.h0()).mat();
  PolyMatrix W(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (!base.at(r, c).is_zero()) W.at(r, c) = Polynomial(base.at(r, c));

  // e^{ad Y} e^{ad X} W = exp(Y) exp(X) W exp(-X) exp(-Y), exact since
  // the nilradical elements square to zero.
  PolyMatrix eY = exp_nilpotent(Y), eX = exp_nilpotent(X);
  PolyMatrix eXi = exp_nilpotent(-X), eYi = exp_nilpotent(-Y);
  PolyMatrix A = eY * (eX * W * eXi) * eYi;

  Polynomial f;
  for (int r = 0; r < d; ++r) f += A.at(r, r) * spec.h().mat().at(r, r);
  return f * form.scale;
}

GaussianRational chart_constant_term(const Polynomial& p) { return p.constant_value(); }

std::vector<GaussianRational> chart_gradient_at_origin(const Polynomial& p) {
  int nv = p.ring() ? p.ring()->nvars() : 0;
  std::vector<GaussianRational> grad(nv);
  for (int v = 0; v < nv; ++v) {
    Mono m(nv, 0);
    m[v] = 1;
    grad[v] = p.coeff_of(m);
  }
  return grad;
}

std::pair<SquareMatrix, bool> hessian_at_critical(const OrbitSpec& spec, int j,
                                                  const FormSpec& form) {
  spec.require_regular();
  Polynomial p = chart_potential_poly(spec, j, form);
  int nv = 2 * spec.n();
  SquareMatrix h(nv);
  for (int a = 0; a < nv; ++a)
    for (int b = a; b < nv; ++b) {
      Mono m(nv, 0);
      m[a] += 1;
      m[b] += 1;
      GaussianRational c = p.coeff_of(m);
      if (a == b) c *= GaussianRational(2);
      h.at(a, b) = c;
      h.at(b, a) = c;
    }
  bool nondeg = !det_bareiss(h).is_zero();
  return {std::move(h), nondeg};
}

std::vector<CriticalDatum> critical_points(const OrbitSpec& spec, const FormSpec& form) {
  spec.require_regular();
  int d = spec.dim();
  std::vector<CriticalDatum> data;
  data.reserve(d);
  for (int j = 1; j <= d; ++j) {
    WeylElement w = WeylElement::transposition(d, 0, j - 1);
    LieElement point = w.apply(spec.h0());
    TensorPoint tensor = TensorPoint::basis_point(d, j);
    GaussianRational f = potential_f(point, spec, form);
    GaussianRational r = rational_potential_R(tensor.outer(), spec);
    auto [hessian, nondeg] = hessian_at_critical(spec, j, form);
    data.push_back(CriticalDatum{j, point, tensor, std::move(f), std::move(r),
                                 std::move(hessian), nondeg});
  }
  return data;
}

FiberDescription sl2_fiber(const GaussianRational& c) {
  FiberDescription fd{c,
                      Polynomial(),
                      Polynomial(),
                      Polynomial(),
                      {},
                      true};
  GaussianRational half_c = c / GaussianRational(2);
  GaussianRational half_c_sq = half_c * half_c;

  RingPtr affine = PolyRing::make({"y", "z"});
  fd.affine_equation = Polynomial::variable(affine, 0) * Polynomial::variable(affine, 1) +
                       Polynomial::constant(affine, half_c_sq - GaussianRational(1));

  RingPtr proj = PolyRing::make({"x", "y", "z", "t"});
  Polynomial x = Polynomial::variable(proj, 0);
  Polynomial y = Polynomial::variable(proj, 1);
  Polynomial z = Polynomial::variable(proj, 2);
  Polynomial t = Polynomial::variable(proj, 3);
  fd.closure_plane = x - t * half_c;
  fd.closure_quadric = y * z - (t * t) * (GaussianRational(1) - half_c_sq);

  auto point = [](int a, int b, int cc, int dd) {
    return ProjectivePoint({GaussianRational(a), GaussianRational(b), GaussianRational(cc),
                            GaussianRational(dd)});
  };
  fd.boundary_points = {point(0, 1, 0, 0), point(0, 0, 1, 0)};
  fd.smooth = !(c == GaussianRational(2) || c == GaussianRational(-2));
  return fd;
}

ProjectivePoint conic_param(const GaussianRational& s, const GaussianRational& r) {
  if (s.is_zero() && r.is_zero()) throw PreconditionError("conic_param: (0,0) is not allowed");
  return ProjectivePoint({GaussianRational(), s * s, r * r, s * r});
}

std::pair<GaussianRational, GaussianRational> conic_param_preimage(const ProjectivePoint& p) {
  if (p.dim() != 4) throw DimensionError("conic_param_preimage expects a P^3 point");
  const auto& c = p.coords();
  if (!c[0].is_zero() || !(c[1] * c[2] == c[3] * c[3]))
    throw PreconditionError("point is not on the closure of the level-0 fiber");
  // [0 : y : z : t] with yz = t^2. If y != 0 take (s, r) = (y, t); the
  // image [0 : y^2 : t^2 : yt] rescales to the point. Otherwise t = 0
  // and the point is [0:0:1:0] = image of (0, 1).
  if (!c[1].is_zero()) return {c[1], c[3]};
  return {GaussianRational(), GaussianRational(1)};
}

}  // namespace adorb
