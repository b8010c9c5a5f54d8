#pragma once

#include <utility>
#include <vector>

#include "adorb/orbit.hpp"
#include "adorb/poly.hpp"
#include "adorb/segre.hpp"

namespace adorb {

// One critical point of the potential: the Weyl point w H0 = (1j) H0,
// its tensor twin e_j (x) eps_j, the two potential values, and the chart
// Hessian with its nondegeneracy flag.
struct CriticalDatum {
  int chart_index;  // 1-based j
  LieElement point;
  TensorPoint tensor;
  GaussianRational f_value;
  GaussianRational r_value;
  SquareMatrix hessian;
  bool nondegenerate;
};

// The sl2 fiber of the potential at level c, its projective closure in
// P^3 (coordinates x, y, z, t), and the t = 0 boundary.
struct FiberDescription {
  GaussianRational level;
  Polynomial affine_equation;   // in (y, z): yz - 1 + (c/2)^2
  Polynomial closure_plane;     // x - (c/2) t
  Polynomial closure_quadric;   // yz - (1 - (c/2)^2) t^2
  std::vector<ProjectivePoint> boundary_points;
  bool smooth;  // c != +-2
};

// f_H(A) = scale * tr(H A); linear in A.
GaussianRational potential_f(const LieElement& a, const OrbitSpec& spec, const FormSpec& form);

// R_H(M) = tr(M H) / tr(M); throws IndeterminacyError when tr M = 0
// (the point lies on the incidence variety).
GaussianRational rational_potential_R(const SquareMatrix& m, const OrbitSpec& spec);

// The exact potential in chart j: (y_1..y_n, x_1..x_n) |->
// f_H(e^{ad Y} e^{ad X} (1j) H0), expanded symbolically.
Polynomial chart_potential_poly(const OrbitSpec& spec, int j, const FormSpec& form);

RingPtr chart_ring(int n);  // y1..yn, x1..xn

// Constant and linear parts of a chart polynomial at the origin.
GaussianRational chart_constant_term(const Polynomial& p);
std::vector<GaussianRational> chart_gradient_at_origin(const Polynomial& p);

// The 2n x 2n complex Hessian of chart j at the origin; nondegenerate
// iff its determinant is nonzero. Requires regular H.
std::pair<SquareMatrix, bool> hessian_at_critical(const OrbitSpec& spec, int j,
                                                  const FormSpec& form);

// The n+1 critical points w H0 with values f = (n+1) lambda_j and
// R = lambda_j at trace scale. Requires regular H.
std::vector<CriticalDatum> critical_points(const OrbitSpec& spec, const FormSpec& form);

// The sl2 fiber at level c and its compactification data.
FiberDescription sl2_fiber(const GaussianRational& c);

// Rational parametrization of the level-0 closure: [s:r] -> [0:s^2:r^2:sr].
ProjectivePoint conic_param(const GaussianRational& s, const GaussianRational& r);
// Preimage of a closure point under conic_param.
std::pair<GaussianRational, GaussianRational> conic_param_preimage(const ProjectivePoint& p);

}  // namespace adorb
