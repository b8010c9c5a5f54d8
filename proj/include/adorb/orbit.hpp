#pragma once

#include <cstdint>
#include <vector>

#include "adorb/liecore.hpp"

namespace adorb {

// One Landau-Ginzburg model instance on the minimal orbit of sl(n+1):
// H0 = diag(n, -1, ..., -1) and a diagonal trace-zero potential H.
// Regularity of H (pairwise distinct entries) is exposed as a query and
// enforced by the operations that need it.
class OrbitSpec {
 public:
  OrbitSpec(int n, std::vector<Rational> h_values);

  static std::vector<Rational> default_h(int n);  // (n, n-2, ..., -n)
  static OrbitSpec with_default_h(int n) { return OrbitSpec(n, default_h(n)); }

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  const LieElement& h0() const { return h0_; }
  const LieElement& h() const { return h_; }
  const std::vector<Rational>& lambda() const { return lambda_; }
  bool regular() const { return regular_; }
  void require_regular() const;

 private:
  int n_;
  LieElement h0_;
  LieElement h_;
  std::vector<Rational> lambda_;
  bool regular_;
};

// Point of the rank-one tensor model: v (vector) and eps (covector);
// on the orbit eps(v) = 1.
struct TensorPoint {
  std::vector<GaussianRational> v;
  std::vector<GaussianRational> eps;

  static TensorPoint basis_point(int dim, int j);  // e_j (x) eps_j, 1-based j

  int dim() const { return static_cast<int>(v.size()); }
  GaussianRational pairing() const;
  SquareMatrix outer() const { return adorb::outer(v, eps); }
};

// Deterministic product of `length` seeded transvections Id + c E_ij;
// the determinant is exactly 1 by construction.
GroupElement sample_sl(int n, std::uint64_t seed, int length);
int default_transvection_length(int n);

// Ad(g) H0 = g H0 g^{-1}, with g^{-1} = adj(g) since det g = 1.
LieElement adjoint_point(const GroupElement& g, const OrbitSpec& spec);

// First column of g tensor first row of adj(g).
TensorPoint tensor_point(const GroupElement& g);

// (A - nI)(A + I) = 0, exactly. A must be trace-zero of matching dimension.
bool orbit_membership(const LieElement& a, const OrbitSpec& spec);

// General diagonal H0: membership via the full minimal polynomial
// prod (x - d) over the distinct diagonal values d of H0.
bool orbit_membership_general(const LieElement& a, const LieElement& h0_diag);

// A = (n+1) v(x)eps - Id; sends e_1(x)eps_1 to H0 and is Ad-equivariant.
LieElement model_map(const TensorPoint& m, int n);
// Inverse: the rank-one matrix (A + Id)/(n+1).
SquareMatrix model_inverse(const LieElement& a, int n);
// Factor a rank-one matrix with trace 1 into a TensorPoint.
TensorPoint factor_rank_one(const SquareMatrix& z);

// e^{ad Y} e^{ad X} ((1j) H0) with Y, X in the nilradicals of (1j) H0
// (column j / row j supported); j is 1-based.
LieElement chart_param(const OrbitSpec& spec, int j, const LieElement& y, const LieElement& x);

// Chart domain test: the j-th coordinate of v is nonzero (1-based j).
bool chart_membership(const TensorPoint& m, int j);
// Same locus via the complement polynomial sum_k (v_j eps_k)^2 != 0.
bool chart_membership_complement_poly(const TensorPoint& m, int j);

}  // namespace adorb
