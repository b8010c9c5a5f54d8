#include "adorb/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "adorb/matrix.hpp"

namespace adorb {

PolynomialIdeal::PolynomialIdeal(RingPtr r, std::vector<Polynomial> gens)
    : ring(std::move(r)) {
  generators.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial lifted = g.ring() ? g : Polynomial::constant(ring, g.constant_value());
    if (!(*lifted.ring() == *ring)) throw DimensionError("generator over a different ring");
    generators.push_back(std::move(lifted));
  }
}

namespace {

using Terms = std::vector<Term>;

Terms sorted_terms(const Polynomial& f, const OrderCtx& ctx) {
  Terms t(f.terms().begin(), f.terms().end());
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return ctx.compare(a.mono, b.mono) > 0; });
  return t;
}

// h -= c * x^m * g, all term lists sorted descending under ctx.
Terms merge_axpy(const Terms& h, const GaussianRational& c, const Mono& m, const Terms& g,
                 const OrderCtx& ctx) {
  Terms out;
  out.reserve(h.size() + g.size());
  size_t i = 0, j = 0;
  while (i < h.size() && j < g.size()) {
    Mono gm = mono_mul(m, g[j].mono);
    int cmp = ctx.compare(h[i].mono, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), -(c * g[j].coeff)});
      ++j;
    } else {
      GaussianRational s = h[i].coeff - c * g[j].coeff;
      if (!s.is_zero()) out.push_back(Term{h[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < h.size()) out.push_back(h[i++]);
  while (j < g.size()) {
    out.push_back(Term{mono_mul(m, g[j].mono), -(c * g[j].coeff)});
    ++j;
  }
  return out;
}

// Full reduction of h by the divisor list (term lists sorted descending
// under ctx, with precomputed leading-coefficient inverses). `skip` allows
// excluding one divisor (for interreduction).
Terms reduce_terms(Terms h, const std::vector<Terms>& divisors,
                   const std::vector<GaussianRational>& lc_inv, const OrderCtx& ctx,
                   long skip = -1) {
  Terms rem;
  while (!h.empty()) {
    bool hit = false;
    for (size_t k = 0; k < divisors.size(); ++k) {
      if (static_cast<long>(k) == skip) continue;
      if (!mono_divides(divisors[k].front().mono, h.front().mono)) continue;
      Mono q = mono_div(h.front().mono, divisors[k].front().mono);
      GaussianRational c = h.front().coeff * lc_inv[k];
      h = merge_axpy(h, c, q, divisors[k], ctx);
      hit = true;
      break;
    }
    if (!hit) {
      rem.push_back(std::move(h.front()));
      h.erase(h.begin());
    }
  }
  return rem;
}

Polynomial from_terms(const RingPtr& ring, Terms t) {
  return Polynomial(ring, std::move(t));
}

struct Pair {
  int i, j;
  Mono lcm;
  std::uint64_t deg;
};

// Gebauer-Moeller style pair update with the product and chain criteria.
void update_pairs(std::vector<Terms>& G, std::vector<Pair>& P, const Terms& f) {
  const int nf = static_cast<int>(G.size());
  const Mono& lf = f.front().mono;

  // Chain criterion against existing pairs.
  P.erase(std::remove_if(P.begin(), P.end(),
                         [&](const Pair& p) {
                           if (!mono_divides(lf, p.lcm)) return false;
                           Mono li = mono_lcm(G[p.i].front().mono, lf);
                           Mono lj = mono_lcm(G[p.j].front().mono, lf);
                           return li != p.lcm && lj != p.lcm;
                         }),
          P.end());

  // New pairs, grouped by lcm; keep minimal lcms only.
  std::vector<Pair> fresh;
  fresh.reserve(G.size());
  for (int i = 0; i < nf; ++i) {
    Mono l = mono_lcm(G[i].front().mono, lf);
    fresh.push_back(Pair{i, nf, l, mono_degree(l)});
  }
  std::vector<bool> drop(fresh.size(), false);
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    for (size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || drop[a]) continue;
      if (fresh[b].lcm == fresh[a].lcm) {
        if (b < a) drop[a] = true;  // duplicate lcm class: keep the first
      } else if (!drop[b] && mono_divides(fresh[b].lcm, fresh[a].lcm)) {
        drop[a] = true;
      }
    }
  }
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    // Product criterion: coprime leading monomials reduce to zero anyway.
    bool coprime_in_class = false;
    for (size_t b = 0; b < fresh.size(); ++b) {
      if (fresh[b].lcm != fresh[a].lcm) continue;
      const Mono& li = G[fresh[b].i].front().mono;
      if (mono_mul(li, lf) == fresh[b].lcm) {
        coprime_in_class = true;
        break;
      }
    }
    if (!coprime_in_class) P.push_back(fresh[a]);
  }
  G.push_back(f);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                   const OrderCtx& ctx, long pair_cap) {
  std::vector<Terms> G;
  std::vector<GaussianRational> lc_inv;
  std::vector<Pair> P;
  auto add_element = [&](const Terms& t) {
    update_pairs(G, P, t);
    lc_inv.push_back(G.back().front().coeff.inverse());
  };
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    add_element(sorted_terms(g, ctx));
  }

  long reductions = 0;
  while (!P.empty()) {
    // Normal selection: smallest lcm under the order, ties by index.
    size_t best = 0;
    for (size_t k = 1; k < P.size(); ++k) {
      int c = ctx.compare(P[k].lcm, P[best].lcm);
      if (c < 0 || (c == 0 && (P[k].i < P[best].i ||
                               (P[k].i == P[best].i && P[k].j < P[best].j))))
        best = k;
    }
    Pair p = P[best];
    P.erase(P.begin() + static_cast<long>(best));

    if (++reductions > pair_cap)
      throw ResourceCapError("groebner: pair-reduction cap exceeded (" +
                             std::to_string(pair_cap) + ")");

    const Terms& f = G[p.i];
    const Terms& g = G[p.j];
    Mono mf = mono_div(p.lcm, f.front().mono);
    Mono mg = mono_div(p.lcm, g.front().mono);
    // S = (1/lc_f) x^mf f - (1/lc_g) x^mg g
    Terms sf;
    sf.reserve(f.size());
    GaussianRational inv_f = lc_inv[p.i];
    for (const auto& t : f) sf.push_back(Term{mono_mul(mf, t.mono), t.coeff * inv_f});
    Terms s = merge_axpy(sf, lc_inv[p.j], mg, g, ctx);
    Terms r = reduce_terms(std::move(s), G, lc_inv, ctx);
    if (!r.empty()) add_element(r);
  }

  // Minimalize: drop elements whose LT is divisible by another kept LT.
  std::vector<int> order_idx(G.size());
  for (size_t k = 0; k < G.size(); ++k) order_idx[k] = static_cast<int>(k);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    return ctx.compare(G[a].front().mono, G[b].front().mono) < 0;
  });
  std::vector<Terms> minimal;
  for (int idx : order_idx) {
    bool divisible = false;
    for (const auto& m : minimal)
      if (mono_divides(m.front().mono, G[idx].front().mono)) {
        divisible = true;
        break;
      }
    if (!divisible) minimal.push_back(G[idx]);
  }

  // Interreduce and normalize to monic.
  std::vector<GaussianRational> min_inv;
  min_inv.reserve(minimal.size());
  for (const auto& m : minimal) min_inv.push_back(m.front().coeff.inverse());
  std::vector<Terms> reduced(minimal.size());
  for (size_t k = 0; k < minimal.size(); ++k) {
    Terms r = reduce_terms(minimal[k], minimal, min_inv, ctx, static_cast<long>(k));
    GaussianRational inv = r.front().coeff.inverse();
    for (auto& t : r) t.coeff *= inv;
    reduced[k] = std::move(r);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Terms& a, const Terms& b) {
    return ctx.compare(a.front().mono, b.front().mono) < 0;
  });

  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (auto& r : reduced) out.push_back(from_terms(ring, std::move(r)));
  return out;
}

std::string order_key(const MonomialOrder& order) {
  std::ostringstream key;
  key << order.kind_name();
  for (const auto& v : order.vars) key << "," << v;
  return key.str();
}

}  // namespace

Term leading_term(const Polynomial& f, const OrderCtx& ctx) {
  if (f.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (ctx.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderCtx& ctx) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("s_polynomial of zero");
  Terms tf = sorted_terms(f, ctx);
  Terms tg = sorted_terms(g, ctx);
  Mono l = mono_lcm(tf.front().mono, tg.front().mono);
  Mono mf = mono_div(l, tf.front().mono);
  Mono mg = mono_div(l, tg.front().mono);
  GaussianRational inv_f = tf.front().coeff.inverse();
  Terms sf;
  sf.reserve(tf.size());
  for (const auto& t : tf) sf.push_back(Term{mono_mul(mf, t.mono), t.coeff * inv_f});
  Terms s = merge_axpy(sf, tg.front().coeff.inverse(), mg, tg, ctx);
  return from_terms(f.ring() ? f.ring() : g.ring(), std::move(s));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const OrderCtx& ctx) {
  if (f.is_zero()) return f;
  RingPtr ring = f.ring();
  std::vector<Terms> divisors;
  std::vector<GaussianRational> lc_inv;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    if (g.ring() && f.ring() && !(*g.ring() == *f.ring()))
      throw DimensionError("normal_form: variable-set mismatch");
    if (!ring) ring = g.ring();
    Polynomial gg = (g.ring() || !ring) ? g : g.lifted(ring);
    divisors.push_back(sorted_terms(gg, ctx));
    lc_inv.push_back(divisors.back().front().coeff.inverse());
  }
  if (divisors.empty()) return f;
  Polynomial ff = (f.ring() || !ring) ? f : f.lifted(ring);
  Terms r = reduce_terms(sorted_terms(ff, ctx), divisors, lc_inv, ctx);
  return from_terms(ring, std::move(r));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order) {
  if (f.is_zero()) return f;
  RingPtr ring = f.ring();
  for (const auto& g : G)
    if (!ring && g.ring()) ring = g.ring();
  if (!ring) throw PreconditionError("normal_form: no ring in sight");
  return normal_form(f, G, OrderCtx(order, ring));
}

std::vector<Polynomial> groebner(const PolynomialIdeal& ideal, const MonomialOrder& order,
                                 long pair_cap) {
  std::string key = order_key(order);
  if (ideal.cached_order_key && *ideal.cached_order_key == key) return ideal.cached_basis;
  OrderCtx ctx(order, ideal.ring);
  std::vector<Polynomial> basis = buchberger(ideal.generators, ideal.ring, ctx, pair_cap);
  ideal.cached_order_key = key;
  ideal.cached_basis = basis;
  return basis;
}

bool is_groebner_basis(const std::vector<Polynomial>& G, const OrderCtx& ctx) {
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) {
      Polynomial s = s_polynomial(G[i], G[j], ctx);
      if (!normal_form(s, G, ctx).is_zero()) return false;
    }
  return true;
}

bool ideal_equal(const PolynomialIdeal& I, const PolynomialIdeal& J, const MonomialOrder& order,
                 long pair_cap) {
  if (!(*I.ring == *J.ring)) throw DimensionError("ideal_equal: different variable sets");
  OrderCtx ctx(order, I.ring);
  std::vector<Polynomial> gi = groebner(I, order, pair_cap);
  std::vector<Polynomial> gj = groebner(J, order, pair_cap);
  for (const auto& g : I.generators)
    if (!normal_form(g, gj, ctx).is_zero()) return false;
  for (const auto& g : J.generators)
    if (!normal_form(g, gi, ctx).is_zero()) return false;
  // Also check the bases against each other so cached bases certify too.
  for (const auto& g : gi)
    if (!normal_form(g, gj, ctx).is_zero()) return false;
  for (const auto& g : gj)
    if (!normal_form(g, gi, ctx).is_zero()) return false;
  return true;
}

PolynomialIdeal homogenize_ideal(const PolynomialIdeal& I, const std::string& t, long pair_cap) {
  if (I.ring->index_of(t) >= 0)
    throw PreconditionError("homogenize_ideal: variable '" + t + "' already in the ring");
  MonomialOrder graded = MonomialOrder::grevlex(I.ring);
  std::vector<Polynomial> basis = groebner(I, graded, pair_cap);
  RingPtr ext = I.ring->extended(t);
  int t_idx = ext->index_of(t);
  std::vector<Polynomial> gens;
  gens.reserve(basis.size());
  for (const auto& b : basis) gens.push_back(b.lifted(ext).homogenized(t_idx));
  return PolynomialIdeal(ext, std::move(gens));
}

PolynomialIdeal dehomogenize_ideal(const PolynomialIdeal& I, const std::string& t) {
  int t_idx = I.ring->index_of(t);
  if (t_idx < 0) throw PreconditionError("dehomogenize_ideal: no variable '" + t + "'");
  std::vector<std::string> rest;
  for (const auto& v : I.ring->vars())
    if (v != t) rest.push_back(v);
  RingPtr small = PolyRing::make(rest);
  std::vector<Polynomial> images;
  for (int v = 0; v < I.ring->nvars(); ++v)
    images.push_back(v == t_idx ? Polynomial(1) : Polynomial::variable(I.ring, v));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(g.substitute(images).restricted(small));
  return PolynomialIdeal(small, std::move(gens));
}

PolynomialIdeal substitute_linear(const PolynomialIdeal& I, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != I.ring->nvars())
    throw PreconditionError("substitute_linear: one image per variable required");
  RingPtr target;
  for (const auto& img : images) {
    if (img.total_degree() > 1) throw PreconditionError("substitute_linear: image is not linear");
    if (img.ring()) {
      if (target && !(*target == *img.ring()))
        throw DimensionError("substitute_linear: images over different rings");
      target = img.ring();
    }
  }
  if (!target) throw PreconditionError("substitute_linear: no target ring");
  std::vector<Polynomial> gens;
  gens.reserve(I.generators.size());
  for (const auto& g : I.generators) gens.push_back(g.substitute(images));
  return PolynomialIdeal(target, std::move(gens));
}

std::string orbit_var(int i, int j) { return "a" + std::to_string(i) + std::to_string(j); }
std::string segre_var(int i, int j) { return "z" + std::to_string(i) + std::to_string(j); }

RingPtr orbit_ring(int n) {
  if (n < 1 || n > 8) throw PreconditionError("orbit_ring: need 1 <= n <= 8");
  std::vector<std::string> vars;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j) {
      if (i == n + 1 && j == n + 1) continue;  // eliminated by the trace
      vars.push_back(orbit_var(i, j));
    }
  return PolyRing::make(std::move(vars));
}

RingPtr segre_ring(int n) {
  if (n < 1 || n > 8) throw PreconditionError("segre_ring: need 1 <= n <= 8");
  std::vector<std::string> vars;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j) vars.push_back(segre_var(i, j));
  return PolyRing::make(std::move(vars));
}

PolynomialIdeal orbit_ideal(int n) {
  RingPtr ring = orbit_ring(n);
  int d = n + 1;
  MatrixT<Polynomial> A(d);
  Polynomial trace_rest;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == d - 1 && j == d - 1) continue;
      A.at(i, j) = Polynomial::variable(ring, orbit_var(i + 1, j + 1));
      if (i == j) trace_rest += A.at(i, j);
    }
  A.at(d - 1, d - 1) = -trace_rest;

  MatrixT<Polynomial> lhs = A, rhs = A;
  for (int i = 0; i < d; ++i) {
    lhs.at(i, i) -= Polynomial(n);
    rhs.at(i, i) += Polynomial(1);
  }
  MatrixT<Polynomial> prod = lhs * rhs;

  std::vector<Polynomial> gens;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Polynomial& e = prod.at(i, j);
      if (e.is_zero()) continue;
      if (std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
    }
  return PolynomialIdeal(ring, std::move(gens));
}

PolynomialIdeal minors_ideal(int n) {
  RingPtr ring = segre_ring(n);
  int d = n + 1;
  auto var = [&](int i, int j) { return Polynomial::variable(ring, segre_var(i, j)); };
  std::vector<Polynomial> gens;
  for (int i = 1; i <= d; ++i)
    for (int k = i + 1; k <= d; ++k)
      for (int j = 1; j <= d; ++j)
        for (int l = j + 1; l <= d; ++l)
          gens.push_back(var(i, j) * var(k, l) - var(i, l) * var(k, j));
  return PolynomialIdeal(ring, std::move(gens));
}

std::vector<Polynomial> segre_pullback_images(int n) {
  RingPtr rz = segre_ring(n);
  Polynomial tr;
  for (int k = 1; k <= n + 1; ++k) tr += Polynomial::variable(rz, segre_var(k, k));
  std::vector<Polynomial> images;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j) {
      if (i == n + 1 && j == n + 1) continue;
      Polynomial img = Polynomial::variable(rz, segre_var(i, j)) * GaussianRational(n + 1);
      if (i == j) img -= tr;
      images.push_back(std::move(img));
    }
  images.push_back(tr);  // image of t
  return images;
}

PolynomialIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
    throw ParseError("ideal file must have 'variables' and 'generators'");
  std::vector<std::string> vars;
  for (const auto& v : j.at("variables")) {
    if (!v.is_string()) throw ParseError("variables must be strings");
    vars.push_back(v.get<std::string>());
  }
  RingPtr ring = PolyRing::make(std::move(vars));
  std::vector<Polynomial> gens;
  for (const auto& g : j.at("generators")) {
    if (!g.is_string()) throw ParseError("generators must be strings");
    gens.push_back(parse_polynomial(g.get<std::string>(), ring));
  }
  return PolynomialIdeal(ring, std::move(gens));
}

nlohmann::json ideal_to_json(const PolynomialIdeal& I) {
  nlohmann::json j;
  j["variables"] = I.ring->vars();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : I.generators) gens.push_back(g.to_string());
  j["generators"] = gens;
  return j;
}

}  // namespace adorb
