#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adorb/orbit.hpp"
#include "adorb/rng.hpp"

using namespace adorb;

TEST_CASE("orbit spec validation") {
  OrbitSpec spec = OrbitSpec::with_default_h(2);
  CHECK(spec.h0().mat().at(0, 0) == GaussianRational(2));
  CHECK(spec.regular());
  CHECK_THROWS_AS(OrbitSpec(2, {Rational(1), Rational(1)}), PreconditionError);  // wrong size
  CHECK_THROWS_AS(OrbitSpec(2, {Rational(1), Rational(1), Rational(1)}), PreconditionError);
  OrbitSpec irregular(2, {Rational(1), Rational(1), Rational(-2)});
  CHECK_FALSE(irregular.regular());
  CHECK_THROWS_AS(irregular.require_regular(), PreconditionError);
}

TEST_CASE("sampling is deterministic and lands in SL") {
  GroupElement a = sample_sl(2, 42, 12);
  GroupElement b = sample_sl(2, 42, 12);
  CHECK(a.mat() == b.mat());
  GroupElement c = sample_sl(2, 43, 12);
  CHECK_FALSE(a.mat() == c.mat());
  for (int n = 1; n <= 4; ++n) {
    GroupElement g = sample_sl(n, 7 + n, default_transvection_length(n));
    CHECK(det_bareiss(g.mat()) == GaussianRational(1));
  }
}

TEST_CASE("adjoint point basics and the sl2 hand oracle") {
  OrbitSpec spec = OrbitSpec::with_default_h(1);
  GroupElement id(SquareMatrix::identity(2));
  CHECK(adjoint_point(id, spec).mat() == spec.h0().mat());

  SquareMatrix gm(2);
  gm.at(0, 0) = GaussianRational(1);
  gm.at(0, 1) = GaussianRational(1);
  gm.at(1, 1) = GaussianRational(1);
  GroupElement g(gm);
  SquareMatrix expected(2);
  expected.at(0, 0) = GaussianRational(1);
  expected.at(0, 1) = GaussianRational(-2);
  expected.at(1, 1) = GaussianRational(-1);
  CHECK(adjoint_point(g, spec).mat() == expected);

  SplitMix64 master(1);
  UnivariatePolynomial mp = minimal_polynomial(spec.h0().mat());
  for (int k = 0; k < 10; ++k) {
    GroupElement s = sample_sl(1, master.next(), 8);
    CHECK(minimal_polynomial(adjoint_point(s, spec).mat()) == mp);
  }
}

TEST_CASE("tensor point: base case and eq. det1") {
  GroupElement id(SquareMatrix::identity(3));
  TensorPoint p = tensor_point(id);
  CHECK(p.v[0] == GaussianRational(1));
  CHECK(p.eps[0] == GaussianRational(1));
  CHECK(p.v[1].is_zero());
  SplitMix64 master(2);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 10; ++k) {
      GroupElement g = sample_sl(n, master.next(), default_transvection_length(n));
      TensorPoint tp = tensor_point(g);
      CHECK(tp.pairing() == GaussianRational(1));
      CHECK(tp.outer().trace() == GaussianRational(1));
    }
}

TEST_CASE("orbit membership") {
  OrbitSpec spec = OrbitSpec::with_default_h(2);
  CHECK(orbit_membership(spec.h0(), spec));
  CHECK_FALSE(orbit_membership(LieElement(SquareMatrix(3)), spec));

  SplitMix64 master(3);
  for (int n = 1; n <= 4; ++n) {
    OrbitSpec s = OrbitSpec::with_default_h(n);
    for (int k = 0; k < 25; ++k) {
      GroupElement g = sample_sl(n, master.next(), default_transvection_length(n));
      LieElement a = adjoint_point(g, s);
      CHECK(orbit_membership(a, s));
      // Eigenvalue-n multiplicity is exactly 1: rank(A - n Id) = n.
      SquareMatrix shifted = a.mat();
      for (int i = 0; i <= n; ++i) shifted.at(i, i) -= GaussianRational(n);
      CHECK(rank(shifted) == n);
      // Minimal polynomial divides (x - n)(x + 1).
      UnivariatePolynomial target =
          UnivariatePolynomial::linear_root(GaussianRational(n)) *
          UnivariatePolynomial::linear_root(GaussianRational(-1));
      CHECK(minimal_polynomial(a.mat()).divides(target));
    }
  }
}

TEST_CASE("membership for a general diagonal H0") {
  // Non-minimal orbit: H0 = diag(1, 0, -1), minimal polynomial x(x-1)(x+1).
  LieElement h0 = LieElement::diagonal(
      {GaussianRational(1), GaussianRational(0), GaussianRational(-1)});
  CHECK(orbit_membership_general(h0, h0));
  OrbitSpec spec = OrbitSpec::with_default_h(2);
  SplitMix64 master(4);
  for (int k = 0; k < 10; ++k) {
    GroupElement g = sample_sl(2, master.next(), 12);
    SquareMatrix inv = adjugate(g.mat()).first;
    LieElement a(g.mat() * h0.mat() * inv);
    CHECK(orbit_membership_general(a, h0));
    CHECK_FALSE(orbit_membership(a, spec));  // wrong orbit
  }
}

TEST_CASE("model map and its inverse") {
  for (int n = 1; n <= 3; ++n) {
    TensorPoint base = TensorPoint::basis_point(n + 1, 1);
    OrbitSpec spec = OrbitSpec::with_default_h(n);
    CHECK(model_map(base, n).mat() == spec.h0().mat());
  }

  SplitMix64 master(5);
  for (int k = 0; k < 50; ++k) {
    int n = 1 + k % 3;
    GroupElement g = sample_sl(n, master.next(), default_transvection_length(n));
    TensorPoint tp = tensor_point(g);
    LieElement a = model_map(tp, n);
    CHECK(model_inverse(a, n) == tp.outer());
    TensorPoint back = factor_rank_one(model_inverse(a, n));
    CHECK(back.outer() == tp.outer());
  }

  // Equivariance: g M g^-1 corresponds to Ad(g) A.
  SplitMix64 m2(6);
  for (int k = 0; k < 20; ++k) {
    int n = 1 + k % 3;
    OrbitSpec spec = OrbitSpec::with_default_h(n);
    GroupElement g = sample_sl(n, m2.next(), default_transvection_length(n));
    GroupElement h = sample_sl(n, m2.next(), default_transvection_length(n));
    TensorPoint tp = tensor_point(h);
    SquareMatrix ginv = adjugate(g.mat()).first;
    SquareMatrix conjugated = g.mat() * tp.outer() * ginv;
    LieElement lhs = LieElement(g.mat() * model_map(tp, n).mat() * ginv);
    CHECK(model_map(factor_rank_one(conjugated), n).mat() == lhs.mat());
  }

  TensorPoint bad;
  bad.v = {GaussianRational(1), GaussianRational(0)};
  bad.eps = {GaussianRational(0), GaussianRational(1)};
  CHECK_THROWS_AS(model_map(bad, 1), PreconditionError);
}

TEST_CASE("charts: base point, sl2 formula, membership") {
  OrbitSpec sl2 = OrbitSpec::with_default_h(1);
  LieElement zero(SquareMatrix(2));
  CHECK(chart_param(sl2, 1, zero, zero).mat() == sl2.h0().mat());

  // (Y, X) = (yF, xE) at (1,1): (1+2xy) H0 - 2x E + (2y + 2xy^2) F.
  SquareMatrix ym(2), xm(2);
  ym.at(1, 0) = GaussianRational(1);
  xm.at(0, 1) = GaussianRational(1);
  LieElement p = chart_param(sl2, 1, LieElement(ym), LieElement(xm));
  SquareMatrix expected(2);
  expected.at(0, 0) = GaussianRational(3);
  expected.at(1, 1) = GaussianRational(-3);
  expected.at(0, 1) = GaussianRational(-2);
  expected.at(1, 0) = GaussianRational(4);
  CHECK(p.mat() == expected);
  CHECK(orbit_membership(p, sl2));

  // Support violations are rejected.
  SquareMatrix badm(2);
  badm.at(0, 1) = GaussianRational(1);
  CHECK_THROWS_AS(chart_param(sl2, 1, LieElement(badm), zero), PreconditionError);

  SplitMix64 master(7);
  for (int k = 0; k < 50; ++k) {
    int n = 1 + k % 3;
    OrbitSpec spec = OrbitSpec::with_default_h(n);
    int d = n + 1;
    int j = 1 + static_cast<int>(master.bounded(d));
    SquareMatrix ymat(d), xmat(d);
    for (int i = 0; i < d; ++i) {
      if (i == j - 1) continue;
      ymat.at(i, j - 1) = master.gaussian(-3, 3, 1, 2);
      xmat.at(j - 1, i) = master.gaussian(-3, 3, 1, 2);
    }
    LieElement pt = chart_param(spec, j, LieElement(ymat), LieElement(xmat));
    CHECK(orbit_membership(pt, spec));
    TensorPoint tp = factor_rank_one(model_inverse(pt, n));
    CHECK(chart_membership(tp, j));
  }
}

TEST_CASE("chart membership tests agree and charts cover") {
  TensorPoint base = TensorPoint::basis_point(3, 1);
  CHECK(chart_membership(base, 1));
  CHECK_FALSE(chart_membership(base, 2));
  CHECK(chart_membership_complement_poly(base, 1));
  CHECK_FALSE(chart_membership_complement_poly(base, 2));

  SplitMix64 master(8);
  for (int k = 0; k < 200; ++k) {
    int n = 1 + k % 3;
    GroupElement g = sample_sl(n, master.next(), default_transvection_length(n));
    TensorPoint tp = tensor_point(g);
    bool covered = false;
    for (int j = 1; j <= n + 1; ++j) {
      CHECK(chart_membership(tp, j) == chart_membership_complement_poly(tp, j));
      covered = covered || chart_membership(tp, j);
    }
    CHECK(covered);
  }
}
