#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adorb/poly.hpp"

namespace adorb {

// Finitely generated ideal with an optional cached Groebner basis.
struct PolynomialIdeal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  // Cache of the last reduced basis (the reduced basis is unique per
  // order, so caching is sound).
  mutable std::optional<std::string> cached_order_key;
  mutable std::vector<Polynomial> cached_basis;

  PolynomialIdeal() = default;
  PolynomialIdeal(RingPtr r, std::vector<Polynomial> gens);
};

// Leading term of f under the resolved order; f must be nonzero.
Term leading_term(const Polynomial& f, const OrderCtx& ctx);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderCtx& ctx);

// Remainder of multivariate division of f by the list G (not necessarily a
// Groebner basis): no term of the result is divisible by any LT(g).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const OrderCtx& ctx);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order);

// Buchberger with the product and chain pair-elimination criteria and a
// pair-reduction cap. Returns the reduced basis (monic, auto-reduced,
// sorted by leading term); caches the result inside the ideal.
std::vector<Polynomial> groebner(const PolynomialIdeal& ideal, const MonomialOrder& order,
                                 long pair_cap = 1000000);

bool is_groebner_basis(const std::vector<Polynomial>& G, const OrderCtx& ctx);

bool ideal_equal(const PolynomialIdeal& I, const PolynomialIdeal& J, const MonomialOrder& order,
                 long pair_cap = 1000000);

// True homogenization: Groebner under a graded order first, then
// term-wise homogenization of the basis with the new variable t.
PolynomialIdeal homogenize_ideal(const PolynomialIdeal& I, const std::string& t = "t",
                                 long pair_cap = 1000000);

// Substitute t := 1 and drop t from the ring.
PolynomialIdeal dehomogenize_ideal(const PolynomialIdeal& I, const std::string& t = "t");

// Generator-wise exact substitution; every image must be a linear form
// (degree <= 1) over one common target ring.
PolynomialIdeal substitute_linear(const PolynomialIdeal& I, const std::vector<Polynomial>& images);

// The affine ideal cutting out the minimal orbit inside sl(n+1): the
// entries of (A - nI)(A + I) in the independent coordinates a_ij,
// with a_{n+1,n+1} eliminated by the trace.
PolynomialIdeal orbit_ideal(int n);

// All 2x2 minors z_ij z_kl - z_il z_kj of the (n+1)x(n+1) coordinate
// matrix: the rank-one locus of the Segre ambient.
PolynomialIdeal minors_ideal(int n);

RingPtr orbit_ring(int n);                       // a11 ... (skips a_{n+1,n+1})
RingPtr segre_ring(int n);                       // z11 ... z_{n+1,n+1}
std::string orbit_var(int i, int j);             // 1-based
std::string segre_var(int i, int j);

// Images for pulling the homogenization ambient (a_ij, t) back to the
// Segre ambient: a_ij -> (n+1) z_ij - delta_ij * tr(Z), t -> tr(Z).
// Ordered like orbit_ring(n)->extended("t").
std::vector<Polynomial> segre_pullback_images(int n);

// Ideal file format: {"variables": [...], "generators": ["..."]}.
PolynomialIdeal ideal_from_json(const nlohmann::json& j);
nlohmann::json ideal_to_json(const PolynomialIdeal& I);

}  // namespace adorb
