#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adorb/rng.hpp"
#include "adorb/segre.hpp"

using namespace adorb;

TEST_CASE("projective point canonicalization") {
  ProjectivePoint a({GaussianRational(2), GaussianRational(4)});
  ProjectivePoint b({GaussianRational(1), GaussianRational(2)});
  CHECK(a == b);
  ProjectivePoint c({GaussianRational(0), GaussianRational(-3), GaussianRational(6)});
  CHECK(c.coords()[1] == GaussianRational(1));
  CHECK(c.coords()[2] == GaussianRational(-2));
  CHECK_THROWS_AS(ProjectivePoint({GaussianRational(0), GaussianRational(0)}), PreconditionError);
}

TEST_CASE("segre coordinates: identity and rank-one locus") {
  GroupElement id(SquareMatrix::identity(3));
  ProjectivePoint p = segre_coords(id);
  CHECK(p.coords()[0] == GaussianRational(1));
  for (int k = 1; k < 9; ++k) CHECK(p.coords()[k].is_zero());

  SplitMix64 master(1);
  for (int k = 0; k < 50; ++k) {
    int n = 1 + k % 4;
    int d = n + 1;
    GroupElement g = sample_sl(n, master.next(), default_transvection_length(n));
    ProjectivePoint sc = segre_coords(g);
    TensorPoint tp = tensor_point(g);
    // Agreement with the outer product, as projective points.
    std::vector<GaussianRational> outer_coords;
    SquareMatrix m = tp.outer();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) outer_coords.push_back(m.at(i, j));
    CHECK(sc == ProjectivePoint(outer_coords));
    // Every 2x2 minor of the coordinate matrix vanishes.
    for (int i = 0; i < d; ++i)
      for (int k2 = i + 1; k2 < d; ++k2)
        for (int j = 0; j < d; ++j)
          for (int l = j + 1; l < d; ++l)
            CHECK((m.at(i, j) * m.at(k2, l) - m.at(i, l) * m.at(k2, j)).is_zero());
  }
}

TEST_CASE("eigenstructure of the rank-one model") {
  GroupElement id(SquareMatrix::identity(4));
  Eigenstructure e = eigenstructure(tensor_point(id).outer(), id);
  CHECK(e.image_vector[0] == GaussianRational(1));
  CHECK(e.kernel_basis.size() == 3);

  SplitMix64 master(2);
  for (int k = 0; k < 20; ++k) {
    GroupElement g = sample_sl(2, master.next(), 12);
    SquareMatrix m = tensor_point(g).outer();
    Eigenstructure es = eigenstructure(m, g);
    CHECK(m.apply(es.image_vector) == es.image_vector);
    std::vector<GaussianRational> zero(3);
    for (const auto& w : es.kernel_basis) CHECK(m.apply(w) == zero);
  }

  SquareMatrix not_trace_one(3);
  not_trace_one.at(0, 0) = GaussianRational(2);
  CHECK_THROWS_AS(eigenstructure(not_trace_one, GroupElement(SquareMatrix::identity(3))),
                  PreconditionError);
}

TEST_CASE("incidence membership") {
  IncidencePair p;
  p.w = {GaussianRational(1), GaussianRational(0)};
  p.xi = {GaussianRational(0), GaussianRational(1)};
  CHECK(incidence_member(p));
  p.xi = {GaussianRational(1), GaussianRational(0)};
  CHECK_FALSE(incidence_member(p));
  p.w = {GaussianRational(1), GaussianRational(1)};
  p.xi = {GaussianRational(1), GaussianRational(-1)};
  CHECK(incidence_member(p));
  p.xi = {GaussianRational(0), GaussianRational(0)};
  CHECK_THROWS_AS(incidence_member(p), PreconditionError);
}

TEST_CASE("ambient change: base point, roundtrip, equivariance") {
  for (int n = 1; n <= 3; ++n) {
    int d = n + 1;
    SquareMatrix z(d);
    z.at(0, 0) = GaussianRational(1);  // e1 (x) eps1
    auto [a, t] = ambient_change(z);
    CHECK(t == GaussianRational(1));
    CHECK(a.at(0, 0) == GaussianRational(n));
    CHECK(a.at(1, 1) == GaussianRational(-1));
    CHECK(a.trace().is_zero());
    CHECK(ambient_change_inverse(a, t) == z);
  }

  SplitMix64 master(3);
  for (int k = 0; k < 50; ++k) {
    int d = 2 + k % 3;
    SquareMatrix z(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) z.at(i, j) = master.gaussian(-4, 4, 1, 3);
    auto [a, t] = ambient_change(z);
    CHECK(a.trace().is_zero());
    CHECK(ambient_change_inverse(a, t) == z);
  }

  // Conjugation equivariance: Z -> g Z g^-1 gives A -> g A g^-1, same t.
  for (int k = 0; k < 10; ++k) {
    int n = 1 + k % 3;
    int d = n + 1;
    GroupElement g = sample_sl(n, master.next(), default_transvection_length(n));
    SquareMatrix ginv = adjugate(g.mat()).first;
    SquareMatrix z(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) z.at(i, j) = master.gaussian(-3, 3, 1, 2);
    auto [a, t] = ambient_change(z);
    auto [a2, t2] = ambient_change(g.mat() * z * ginv);
    CHECK(t2 == t);
    CHECK(a2 == g.mat() * a * ginv);
  }
}

TEST_CASE("rank-one points satisfy the homogenized minimal-polynomial system") {
  SplitMix64 master(4);
  for (int n = 1; n <= 4; ++n) {
    int d = n + 1;
    for (int k = 0; k < 10; ++k) {
      std::vector<GaussianRational> v(d), xi(d);
      for (int i = 0; i < d; ++i) {
        v[i] = master.gaussian(-3, 3, 1, 2);
        xi[i] = master.gaussian(-3, 3, 1, 2);
      }
      if (v[0].is_zero()) v[0] = GaussianRational(1);
      if (xi[0].is_zero()) xi[0] = GaussianRational(1);
      SquareMatrix z = outer(v, xi);
      auto [a, t] = ambient_change(z);
      // (A - n t Id)(A + t Id) = 0 identically on the rank-one locus.
      SquareMatrix lhs = a, rhs = a;
      for (int i = 0; i < d; ++i) {
        lhs.at(i, i) -= GaussianRational(n) * t;
        rhs.at(i, i) += t;
      }
      CHECK((lhs * rhs).is_zero());
      // Rank-one trace-zero Z: t = 0 and A^2 = 0.
      if (t.is_zero()) CHECK((a * a).is_zero());
    }
  }
}
