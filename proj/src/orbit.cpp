#include "adorb/orbit.hpp"

#include <set>

#include "adorb/rng.hpp"

namespace adorb {

namespace {

LieElement minimal_h0(int n) {
  if (n < 1) throw PreconditionError("OrbitSpec: n must be >= 1");
  std::vector<GaussianRational> d(n + 1, GaussianRational(-1));
  d[0] = GaussianRational(n);
  return LieElement::diagonal(d);
}

}  // namespace

OrbitSpec::OrbitSpec(int n, std::vector<Rational> h_values)
    : n_(n), h0_(minimal_h0(n)), h_(h0_), lambda_(std::move(h_values)) {
  if (n < 1) throw PreconditionError("OrbitSpec: n must be >= 1");
  if (static_cast<int>(lambda_.size()) != n + 1)
    throw PreconditionError("OrbitSpec: H needs exactly n+1 diagonal entries");
  Rational trace(0);
  for (const auto& l : lambda_) trace += l;
  if (sgn(trace) != 0) throw PreconditionError("OrbitSpec: H must be trace-zero");
  std::vector<GaussianRational> d(lambda_.begin(), lambda_.end());
  h_ = LieElement::diagonal(d);
  regular_ = true;
  for (size_t i = 0; i < lambda_.size() && regular_; ++i)
    for (size_t j = i + 1; j < lambda_.size(); ++j)
      if (lambda_[i] == lambda_[j]) {
        regular_ = false;
        break;
      }
}

void OrbitSpec::require_regular() const {
  if (regular_) return;
  // Name the degenerate directions: the colliding eigenvalue pairs.
  std::string detail;
  for (size_t i = 0; i < lambda_.size(); ++i)
    for (size_t j = i + 1; j < lambda_.size(); ++j)
      if (lambda_[i] == lambda_[j])
        detail += " (lambda_" + std::to_string(i + 1) + " = lambda_" + std::to_string(j + 1) +
                  " = " + lambda_[i].get_str() + ")";
  throw PreconditionError("H is not regular:" + detail);
}

std::vector<Rational> OrbitSpec::default_h(int n) {
  std::vector<Rational> h;
  h.reserve(n + 1);
  for (int i = 0; i <= n; ++i) h.push_back(Rational(n - 2 * i));
  return h;
}

TensorPoint TensorPoint::basis_point(int dim, int j) {
  if (j < 1 || j > dim) throw PreconditionError("basis_point: index out of range");
  TensorPoint p;
  p.v.assign(dim, GaussianRational());
  p.eps.assign(dim, GaussianRational());
  p.v[j - 1] = GaussianRational(1);
  p.eps[j - 1] = GaussianRational(1);
  return p;
}

GaussianRational TensorPoint::pairing() const {
  if (v.size() != eps.size()) throw DimensionError("TensorPoint dimension mismatch");
  GaussianRational s;
  for (size_t k = 0; k < v.size(); ++k) s += eps[k] * v[k];
  return s;
}

int default_transvection_length(int n) { return 4 * (n + 1); }

GroupElement sample_sl(int n, std::uint64_t seed, int length) {
  if (n < 1 || length < 1) throw PreconditionError("sample_sl: need n >= 1 and length >= 1");
  int d = n + 1;
  SplitMix64 rng(seed);
  SquareMatrix g = SquareMatrix::identity(d);
  for (int step = 0; step < length; ++step) {
    int i = static_cast<int>(rng.bounded(d));
    int j = static_cast<int>(rng.bounded(d - 1));
    if (j >= i) ++j;
    GaussianRational c = rng.gaussian(-3, 3, 1, 3);
    // g *= (Id + c E_ij): adds c * column i to column j.
    for (int r = 0; r < d; ++r) g.at(r, j) += g.at(r, i) * c;
  }
  return GroupElement(std::move(g));
}

LieElement adjoint_point(const GroupElement& g, const OrbitSpec& spec) {
  if (g.dim() != spec.dim()) throw DimensionError("adjoint_point dimension mismatch");
  SquareMatrix inv = adjugate(g.mat()).first;  // = g^{-1} since det g = 1
  return LieElement(g.mat() * spec.h0().mat() * inv);
}

TensorPoint tensor_point(const GroupElement& g) {
  TensorPoint p;
  p.v = g.mat().column(0);
  p.eps = adjugate(g.mat()).first.row(0);
  return p;
}

bool orbit_membership(const LieElement& a, const OrbitSpec& spec) {
  if (a.dim() != spec.dim()) throw DimensionError("orbit_membership dimension mismatch");
  return orbit_membership_general(a, spec.h0());
}

bool orbit_membership_general(const LieElement& a, const LieElement& h0_diag) {
  if (!h0_diag.is_diagonal()) throw PreconditionError("orbit membership needs a diagonal H0");
  if (a.dim() != h0_diag.dim()) throw DimensionError("orbit_membership dimension mismatch");
  int d = a.dim();
  std::vector<GaussianRational> values;
  for (int i = 0; i < d; ++i) {
    const GaussianRational& v = h0_diag.mat().at(i, i);
    bool seen = false;
    for (const auto& u : values)
      if (u == v) {
        seen = true;
        break;
      }
    if (!seen) values.push_back(v);
  }
  SquareMatrix prod = SquareMatrix::identity(d);
  for (const auto& v : values) {
    SquareMatrix factor = a.mat();
    for (int i = 0; i < d; ++i) factor.at(i, i) -= v;
    prod = prod * factor;
  }
  return prod.is_zero();
}

LieElement model_map(const TensorPoint& m, int n) {
  if (m.dim() != n + 1) throw DimensionError("model_map dimension mismatch");
  if (!(m.pairing() == GaussianRational(1)))
    throw PreconditionError("model_map: eps(v) must be 1");
  SquareMatrix a = m.outer().scaled(Rational(n + 1));
  for (int i = 0; i <= n; ++i) a.at(i, i) -= GaussianRational(1);
  return LieElement(std::move(a));
}

SquareMatrix model_inverse(const LieElement& a, int n) {
  if (a.dim() != n + 1) throw DimensionError("model_inverse dimension mismatch");
  SquareMatrix z = a.mat();
  for (int i = 0; i <= n; ++i) z.at(i, i) += GaussianRational(1);
  return z.scaled(make_rational(1, n + 1));
}

TensorPoint factor_rank_one(const SquareMatrix& z) {
  int d = z.dim();
  int pr = -1, pc = -1;
  for (int i = 0; i < d && pr < 0; ++i)
    for (int j = 0; j < d; ++j)
      if (!z.at(i, j).is_zero()) {
        pr = i;
        pc = j;
        break;
      }
  if (pr < 0) throw PreconditionError("factor_rank_one: zero matrix");
  TensorPoint p;
  p.v = z.column(pc);
  GaussianRational inv = z.at(pr, pc).inverse();
  p.eps.resize(d);
  for (int j = 0; j < d; ++j) p.eps[j] = z.at(pr, j) * inv;
  if (!(p.outer() == z)) throw PreconditionError("factor_rank_one: matrix has rank > 1");
  return p;
}

namespace {

// Y (resp. X) must lie in the span of the minus (resp. plus) nilradical
// of (1j) H0: entries only in column j (resp. row j), zero diagonal.
void check_nilradical_support(const LieElement& z, int j0, bool row_supported,
                              const char* which) {
  int d = z.dim();
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      bool allowed = row_supported ? (i == j0 && k != j0) : (k == j0 && i != j0);
      if (!allowed && !z.mat().at(i, k).is_zero())
        throw PreconditionError(std::string(which) + " is outside the chart nilradical span");
    }
}

}  // namespace

LieElement chart_param(const OrbitSpec& spec, int j, const LieElement& y, const LieElement& x) {
  int d = spec.dim();
  if (j < 1 || j > d) throw PreconditionError("chart_param: index out of range");
  if (y.dim() != d || x.dim() != d) throw DimensionError("chart_param dimension mismatch");
  int j0 = j - 1;
  check_nilradical_support(y, j0, /*row_supported=*/false, "Y");
  check_nilradical_support(x, j0, /*row_supported=*/true, "X");
  WeylElement w = WeylElement::transposition(d, 0, j0);
  LieElement base = w.apply(spec.h0());
  return exp_ad_nilpotent(y, exp_ad_nilpotent(x, base));
}

bool chart_membership(const TensorPoint& m, int j) {
  if (j < 1 || j > m.dim()) throw PreconditionError("chart_membership: index out of range");
  return !m.v[j - 1].is_zero();
}

bool chart_membership_complement_poly(const TensorPoint& m, int j) {
  if (j < 1 || j > m.dim()) throw PreconditionError("chart_membership: index out of range");
  GaussianRational sum;
  for (int k = 0; k < m.dim(); ++k) {
    GaussianRational term = m.v[j - 1] * m.eps[k];
    sum += term * term;
  }
  return !sum.is_zero();
}

}  // namespace adorb
