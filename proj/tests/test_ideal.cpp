#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "adorb/ideal.hpp"
#include "adorb/orbit.hpp"
#include "adorb/rng.hpp"

using namespace adorb;

namespace {
RingPtr xyz() { return PolyRing::make({"x", "y", "z"}); }
}  // namespace

TEST_CASE("normal form basics") {
  RingPtr r = xyz();
  MonomialOrder ord = MonomialOrder::grevlex(r);
  Polynomial f = parse_polynomial("x^2 + y*z - 1", r);
  CHECK(normal_form(f, {f}, ord).is_zero());

  Polynomial x2 = parse_polynomial("x^2", r);
  CHECK(normal_form(x2, {f}, ord) == parse_polynomial("1 - y*z", r));

  Polynomial g = parse_polynomial("x^3*y - 2*z + 5", r);
  Polynomial nf = normal_form(g, {f}, ord);
  CHECK(normal_form(nf, {f}, ord) == nf);  // idempotence
}

TEST_CASE("groebner of a principal ideal normalizes the generator") {
  RingPtr r = xyz();
  PolynomialIdeal I(r, {parse_polynomial("2*x^2 + 2*y*z - 2", r)});
  auto basis = groebner(I, MonomialOrder::grevlex(r));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == parse_polynomial("x^2 + y*z - 1", r));
}

TEST_CASE("sl2 orbit ideal is principal: x^2 + yz - 1") {
  PolynomialIdeal I = orbit_ideal(1);
  CHECK(I.generators.size() == 1);
  MonomialOrder ord = MonomialOrder::grevlex(I.ring);
  auto basis = groebner(I, ord);
  REQUIRE(basis.size() == 1);
  // a11^2 + a12 a21 - 1 in the independent sl2 coordinates.
  CHECK(basis[0] == parse_polynomial("a11^2 + a12*a21 - 1", I.ring));
  CHECK(is_groebner_basis(basis, OrderCtx(ord, I.ring)));
}

TEST_CASE("orbit ideal n=2: nine quadratic generators vanishing on the orbit") {
  PolynomialIdeal I = orbit_ideal(2);
  CHECK(I.generators.size() == 9);
  for (const auto& g : I.generators) CHECK(g.total_degree() == 2);

  OrbitSpec spec = OrbitSpec::with_default_h(2);
  SplitMix64 master(3);
  for (int k = 0; k < 20; ++k) {
    GroupElement g = sample_sl(2, master.next(), default_transvection_length(2));
    LieElement a = adjoint_point(g, spec);
    // Evaluate at the independent coordinates of A.
    std::vector<GaussianRational> point;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == 2 && j == 2) continue;
        point.push_back(a.mat().at(i, j));
      }
    for (const auto& gen : I.generators) CHECK(gen.evaluate(point).is_zero());
  }
}

TEST_CASE("groebner basis property holds and is input-order independent") {
  RingPtr r = xyz();
  std::vector<Polynomial> gens = {
      parse_polynomial("x^2 + y*z - 1", r),
      parse_polynomial("x*y - z", r),
      parse_polynomial("y^2 - 2*x*z", r),
  };
  MonomialOrder ord = MonomialOrder::grevlex(r);
  PolynomialIdeal I(r, gens);
  auto basis = groebner(I, ord);
  CHECK(is_groebner_basis(basis, OrderCtx(ord, r)));

  std::vector<Polynomial> shuffled = {gens[2], gens[0], gens[1]};
  PolynomialIdeal J(r, shuffled);
  CHECK(ideal_equal(I, J, ord));
  // Reduced bases are unique, so they agree element-wise.
  auto basis2 = groebner(J, ord);
  CHECK(basis == basis2);
}

TEST_CASE("ideal equality distinguishes <x> from <x^2>") {
  RingPtr r = xyz();
  PolynomialIdeal I(r, {parse_polynomial("x", r)});
  PolynomialIdeal J(r, {parse_polynomial("x^2", r)});
  MonomialOrder ord = MonomialOrder::grevlex(r);
  CHECK_FALSE(ideal_equal(I, J, ord));
  PolynomialIdeal K(r, {parse_polynomial("3*x", r)});
  CHECK(ideal_equal(I, K, ord));
}

TEST_CASE("homogenization of the sl2 equation and roundtrip") {
  RingPtr r = xyz();
  PolynomialIdeal I(r, {parse_polynomial("x^2 + y*z - 1", r)});
  PolynomialIdeal H = homogenize_ideal(I);
  REQUIRE(H.generators.size() == 1);
  CHECK(H.generators[0] == parse_polynomial("x^2 + y*z - t^2", H.ring));

  // Already homogeneous input comes back unchanged up to normalization.
  PolynomialIdeal I2(r, {parse_polynomial("2*x^2 + 2*y*z", r)});
  PolynomialIdeal H2 = homogenize_ideal(I2);
  REQUIRE(H2.generators.size() == 1);
  CHECK(H2.generators[0] == parse_polynomial("x^2 + y*z", H2.ring));

  // Dehomogenization regenerates exactly I (mutual reduction).
  PolynomialIdeal back = dehomogenize_ideal(H);
  CHECK(ideal_equal(back, I, MonomialOrder::grevlex(r)));
}

TEST_CASE("minors ideal shapes") {
  PolynomialIdeal m1 = minors_ideal(1);
  REQUIRE(m1.generators.size() == 1);
  CHECK(m1.generators[0] == parse_polynomial("z11*z22 - z12*z21", m1.ring));
  CHECK(minors_ideal(2).generators.size() == 9);
}

TEST_CASE("substitute_linear: identity, pullback quadric, composition") {
  RingPtr r = xyz();
  PolynomialIdeal I(r, {parse_polynomial("x^2 + y*z - 1", r)});
  std::vector<Polynomial> identity = {Polynomial::variable(r, 0), Polynomial::variable(r, 1),
                                      Polynomial::variable(r, 2)};
  PolynomialIdeal same = substitute_linear(I, identity);
  CHECK(ideal_equal(I, same, MonomialOrder::grevlex(r)));

  // The sl2 ambient change sends x^2 + yz - t^2 to a multiple of the minor.
  PolynomialIdeal H = homogenize_ideal(I);  // x^2 + y*z - t^2 over x,y,z,t
  std::vector<Polynomial> images = segre_pullback_images(1);
  PolynomialIdeal pulled = substitute_linear(H, images);
  REQUIRE(pulled.generators.size() == 1);
  RingPtr rz = segre_ring(1);
  CHECK(pulled.generators[0] == parse_polynomial("z11*z22 - z12*z21", rz) * GaussianRational(-4));

  // The pulled-back quadric vanishes on rank-one samples.
  SplitMix64 rng(5);
  for (int k = 0; k < 20; ++k) {
    GaussianRational v0 = rng.gaussian(-3, 3, 1, 2), v1 = rng.gaussian(-3, 3, 1, 2);
    GaussianRational e0 = rng.gaussian(-3, 3, 1, 2), e1 = rng.gaussian(-3, 3, 1, 2);
    std::vector<GaussianRational> z = {v0 * e0, v0 * e1, v1 * e0, v1 * e1};
    CHECK(pulled.generators[0].evaluate(z).is_zero());
  }
}

TEST_CASE("theorem seg at n = 1: pullback of the homogenized ideal is the minors ideal") {
  PolynomialIdeal I = orbit_ideal(1);
  PolynomialIdeal H = homogenize_ideal(I);
  PolynomialIdeal pulled = substitute_linear(H, segre_pullback_images(1));
  PolynomialIdeal minors = minors_ideal(1);
  CHECK(ideal_equal(pulled, minors, MonomialOrder::grevlex(segre_ring(1))));
}

TEST_CASE("theorem seg at n = 2: pullback of the homogenized ideal is the minors ideal") {
  PolynomialIdeal I = orbit_ideal(2);
  PolynomialIdeal H = homogenize_ideal(I);
  for (const auto& g : H.generators) CHECK(g.is_homogeneous());
  PolynomialIdeal pulled = substitute_linear(H, segre_pullback_images(2));
  PolynomialIdeal minors = minors_ideal(2);
  CHECK(ideal_equal(pulled, minors, MonomialOrder::grevlex(segre_ring(2))));
  // Negative control: a single minor generates a strictly smaller ideal.
  PolynomialIdeal sub(minors.ring, {minors.generators[0]});
  CHECK_FALSE(ideal_equal(pulled, sub, MonomialOrder::grevlex(segre_ring(2))));
}

TEST_CASE("seeded ideals: basis is a groebner basis generating the same ideal") {
  SplitMix64 rng(21);
  RingPtr r = xyz();
  MonomialOrder ord = MonomialOrder::grevlex(r);
  OrderCtx ctx(ord, r);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<Term> terms;
      for (int t = 0; t < 4; ++t) {
        Mono m = {static_cast<std::uint32_t>(rng.bounded(3)),
                  static_cast<std::uint32_t>(rng.bounded(3)),
                  static_cast<std::uint32_t>(rng.bounded(2))};
        terms.push_back(Term{m, rng.gaussian(-3, 3, 1, 2)});
      }
      Polynomial p(r, std::move(terms));
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
    if (gens.empty()) continue;
    PolynomialIdeal I(r, gens);
    auto basis = groebner(I, ord);
    CHECK(is_groebner_basis(basis, ctx));
    for (const auto& g : gens) CHECK(normal_form(g, basis, ctx).is_zero());
    PolynomialIdeal J(r, basis);
    CHECK(ideal_equal(I, J, ord));
  }
}

TEST_CASE("normal form against a groebner basis is constant on ideal cosets") {
  RingPtr r = xyz();
  MonomialOrder ord = MonomialOrder::grevlex(r);
  OrderCtx ctx(ord, r);
  PolynomialIdeal I(r, {parse_polynomial("x^2 + y*z - 1", r), parse_polynomial("x*y - z", r)});
  auto basis = groebner(I, ord);
  SplitMix64 rng(22);
  for (int k = 0; k < 10; ++k) {
    std::vector<Term> terms;
    for (int t = 0; t < 5; ++t) {
      Mono m = {static_cast<std::uint32_t>(rng.bounded(3)),
                static_cast<std::uint32_t>(rng.bounded(3)),
                static_cast<std::uint32_t>(rng.bounded(3))};
      terms.push_back(Term{m, rng.gaussian(-4, 4, 1, 3)});
    }
    Polynomial f(r, std::move(terms));
    Polynomial shift = I.generators[0] * rng.gaussian(-3, 3, 1, 2) +
                       I.generators[1] * Polynomial::variable(r, static_cast<int>(rng.bounded(3)));
    CHECK(normal_form(f + shift, basis, ctx) == normal_form(f, basis, ctx));
  }
}

TEST_CASE("resource cap aborts with a resource error") {
  // Cyclic-4: known to need many pair reductions.
  RingPtr r = PolyRing::make({"a", "b", "c", "d"});
  PolynomialIdeal I(r, {
                           parse_polynomial("a + b + c + d", r),
                           parse_polynomial("a*b + b*c + c*d + d*a", r),
                           parse_polynomial("a*b*c + b*c*d + c*d*a + d*a*b", r),
                           parse_polynomial("a*b*c*d - 1", r),
                       });
  CHECK_THROWS_AS(groebner(I, MonomialOrder::grevlex(r), 2), ResourceCapError);
}

TEST_CASE("lex order elimination solves a triangular system") {
  RingPtr r = PolyRing::make({"x", "y"});
  PolynomialIdeal I(r, {parse_polynomial("x + y - 3", r), parse_polynomial("x - y - 1", r)});
  auto basis = groebner(I, MonomialOrder::lex(r));
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == parse_polynomial("y - 1", r));
  CHECK(basis[1] == parse_polynomial("x - 2", r));
}

TEST_CASE("monomial orders may permute the ring variables") {
  RingPtr r = PolyRing::make({"x", "y"});
  PolynomialIdeal I(r, {parse_polynomial("x^2 - y", r)});
  // Under lex with x > y the generator is already reduced with LT x^2.
  auto bx = groebner(I, MonomialOrder::lex(r));
  REQUIRE(bx.size() == 1);
  OrderCtx cx(MonomialOrder::lex(r), r);
  CHECK(leading_term(bx[0], cx).mono == Mono{2, 0});
  // Under lex with y > x the leading term is y, so the basis is y - x^2.
  MonomialOrder yx{MonomialOrder::Kind::Lex, {"y", "x"}};
  PolynomialIdeal J(r, I.generators);
  auto by = groebner(J, yx);
  REQUIRE(by.size() == 1);
  OrderCtx cy(yx, r);
  CHECK(leading_term(by[0], cy).mono == Mono{0, 1});
  CHECK(by[0] == parse_polynomial("y - x^2", r));
}

TEST_CASE("ideal json round trip") {
  nlohmann::json j = nlohmann::json::parse(
      R"({"variables":["x","y","z"],"generators":["x^2 + y*z - 1","2*x - z"]})");
  PolynomialIdeal I = ideal_from_json(j);
  CHECK(I.generators.size() == 2);
  nlohmann::json out = ideal_to_json(I);
  PolynomialIdeal I2 = ideal_from_json(out);
  CHECK(ideal_equal(I, I2, MonomialOrder::grevlex(I.ring)));
  CHECK_THROWS_AS(ideal_from_json(nlohmann::json::parse(
                      R"({"variables":["x"],"generators":["0.5*x"]})")),
                  ParseError);
}
