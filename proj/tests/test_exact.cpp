#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adorb/exact.hpp"
#include "adorb/rng.hpp"

using namespace adorb;

namespace {

SquareMatrix random_matrix(SplitMix64& rng, int d) {
  SquareMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = rng.gaussian(-4, 4, 1, 3);
  return m;
}

SquareMatrix from_json_text(const char* text) {
  return matrix_from_json(nlohmann::json::parse(text));
}

}  // namespace

TEST_CASE("gaussian rational arithmetic and canonical form") {
  GaussianRational a(make_rational(2, 4), make_rational(-6, 4));  // 1/2 - 3/2 i
  CHECK(to_string(a) == "1/2-3/2 i");
  CHECK(a + (-a) == GaussianRational(0));
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK(a.conj().conj() == a);
  GaussianRational b(make_rational(1, 3), make_rational(2, 1));
  CHECK((a * b).conj() == a.conj() * b.conj());  // conjugation is a field map
  CHECK((a + b).conj() == a.conj() + b.conj());
}

TEST_CASE("scalar parsing round-trips and rejects floats") {
  for (const char* s : {"0", "5", "-7/3", "1/2+3/4 i", "-2-1/5 i", "0+1 i"}) {
    GaussianRational v = parse_gaussian(s);
    CHECK(parse_gaussian(to_string(v)) == v);
  }
  CHECK(parse_gaussian("i") == GaussianRational::i());
  CHECK(parse_gaussian("3/2i") == GaussianRational(Rational(0), make_rational(3, 2)));
  CHECK_THROWS_AS(parse_gaussian("1.5"), ParseError);
  CHECK_THROWS_AS(parse_gaussian("1e3"), ParseError);
  CHECK_THROWS_AS(parse_gaussian(""), ParseError);
  CHECK_THROWS_AS(parse_gaussian("1+2"), ParseError);
}

TEST_CASE("adjugate: identity case") {
  SquareMatrix id3 = SquareMatrix::identity(3);
  auto [adj, det] = adjugate(id3);
  CHECK(adj == id3);
  CHECK(det == GaussianRational(1));
}

TEST_CASE("adjugate: 2x2 hand oracle adj = [[d,-b],[-c,a]]") {
  SquareMatrix a = from_json_text(R"([["1","1"],["0","1"]])");
  auto [adj, det] = adjugate(a);
  SquareMatrix expected = from_json_text(R"([["1","-1"],["0","1"]])");
  CHECK(adj == expected);
  CHECK(det == GaussianRational(1));
}

TEST_CASE("adjugate: defining identity on seeded random 4x4 over Q(i)") {
  SplitMix64 rng(7);
  for (int k = 0; k < 10; ++k) {
    SquareMatrix a = random_matrix(rng, 4);
    auto [adj, det] = adjugate(a);
    SquareMatrix d4 = SquareMatrix::identity(4);
    for (int i = 0; i < 4; ++i) d4.at(i, i) = det;
    CHECK(a * adj == d4);
    CHECK(adj * a == d4);
  }
}

TEST_CASE("cofactor expansion along a column equals det") {
  SplitMix64 rng(11);
  for (int d = 2; d <= 5; ++d) {
    SquareMatrix a = random_matrix(rng, d);
    auto [adj, det] = adjugate(a);
    for (int j = 0; j < d; ++j) {
      GaussianRational sum;
      for (int i = 0; i < d; ++i) sum += a.at(i, j) * adj.at(j, i);
      CHECK(sum == det);
    }
  }
}

TEST_CASE("det is multiplicative on seeded pairs") {
  SplitMix64 rng(13);
  for (int k = 0; k < 8; ++k) {
    int d = 2 + k % 3;
    SquareMatrix a = random_matrix(rng, d), b = random_matrix(rng, d);
    CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
  }
}

TEST_CASE("matrix product is associative and distributes over addition") {
  SplitMix64 rng(23);
  for (int k = 0; k < 6; ++k) {
    int d = 2 + k % 3;
    SquareMatrix a = random_matrix(rng, d), b = random_matrix(rng, d), c = random_matrix(rng, d);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("minimal polynomial examples") {
  // diag(2,-1,-1) -> (x-2)(x+1) = x^2 - x - 2
  SquareMatrix h0 = SquareMatrix::diagonal(
      {GaussianRational(2), GaussianRational(-1), GaussianRational(-1)});
  UnivariatePolynomial p = minimal_polynomial(h0);
  UnivariatePolynomial expected({GaussianRational(-2), GaussianRational(-1), GaussianRational(1)});
  CHECK(p == expected);
  CHECK(p.to_string() == "x^2 - x - 2");

  CHECK(minimal_polynomial(SquareMatrix::identity(4)) ==
        UnivariatePolynomial({GaussianRational(-1), GaussianRational(1)}));

  // e1 (x) eps2: single off-diagonal 1, squares to zero.
  SquareMatrix e12(3);
  e12.at(0, 1) = GaussianRational(1);
  CHECK((e12 * e12).is_zero());
  CHECK(minimal_polynomial(e12) == UnivariatePolynomial::x_power(2));
}

TEST_CASE("minimal polynomial annihilates and divides the characteristic polynomial") {
  SplitMix64 rng(17);
  for (int k = 0; k < 6; ++k) {
    int d = 2 + k % 3;
    SquareMatrix a = random_matrix(rng, d);
    UnivariatePolynomial mp = minimal_polynomial(a);
    CHECK(mp.evaluate_matrix(a).is_zero());
    UnivariatePolynomial cp = characteristic_polynomial(a);
    CHECK(cp.evaluate_matrix(a).is_zero());  // Cayley-Hamilton
    CHECK(mp.divides(cp));
  }
}

TEST_CASE("rank examples and rank-nullity") {
  CHECK(rank(SquareMatrix(3)) == 0);
  SquareMatrix e11(3);
  e11.at(0, 0) = GaussianRational(1);
  CHECK(rank(e11) == 1);

  SplitMix64 rng(19);
  for (int k = 0; k < 8; ++k) {
    int d = 2 + k % 4;
    SquareMatrix a = random_matrix(rng, d);
    if (k % 2 == 0) {  // force singularity: copy a row
      for (int j = 0; j < d; ++j) a.at(d - 1, j) = a.at(0, j);
    }
    auto kernel = kernel_basis(a);
    CHECK(rank(a) + static_cast<int>(kernel.size()) == d);
    std::vector<GaussianRational> zero(d);
    for (const auto& v : kernel) CHECK(a.apply(v) == zero);
  }
}

TEST_CASE("matrix json round-trip and exactness") {
  SquareMatrix a = from_json_text(R"([["1/2","-3+1/2 i"],["0","2/3"]])");
  CHECK(a.at(0, 1) == GaussianRational(make_rational(-3), make_rational(1, 2)));
  CHECK(matrix_from_json(matrix_to_json(a)) == a);
  CHECK_THROWS_AS(from_json_text(R"([["0.5"]])"), ParseError);
  CHECK_THROWS_AS(from_json_text(R"([["1","2"]])"), ParseError);
}

TEST_CASE("univariate polynomial remainder and printing") {
  // (x-2)(x+1) has remainder 0 by (x-2)
  UnivariatePolynomial p({GaussianRational(-2), GaussianRational(-1), GaussianRational(1)});
  UnivariatePolynomial d({GaussianRational(-2), GaussianRational(1)});
  CHECK(p.remainder_by(d).is_zero());
  CHECK(d.divides(p));
  UnivariatePolynomial r = p.remainder_by(UnivariatePolynomial({GaussianRational(1), GaussianRational(1)}));
  CHECK(r.is_zero());  // (x+1) also divides
  CHECK_FALSE(UnivariatePolynomial::x_power(2).divides(d));
}
