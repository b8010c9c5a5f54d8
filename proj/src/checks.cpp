#include "adorb/checks.hpp"

#include <chrono>

#include "adorb/ideal.hpp"
#include "adorb/rng.hpp"

namespace adorb {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void fail(VerificationReport& r, int sample_index, const std::string& reason,
          nlohmann::json detail = nlohmann::json::object()) {
  r.passed = false;
  nlohmann::json w;
  w["sample_index"] = sample_index;
  w["seed"] = r.seed;
  w["reason"] = reason;
  w["detail"] = std::move(detail);
  r.witnesses.push_back(std::move(w));
}

VerificationReport base_report(const std::string& name, const std::string& anchor,
                               const CheckOptions& opts) {
  VerificationReport r;
  r.check_name = name;
  r.paper_anchor = anchor;
  r.n = opts.n;
  r.seed = opts.seed;
  r.sample_count = opts.samples;
  r.passed = true;
  r.params["scale"] = opts.scale;
  r.params["transvection_length"] = default_transvection_length(opts.n);
  return r;
}

SquareMatrix random_matrix(SplitMix64& rng, int d) {
  SquareMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = rng.gaussian(-4, 4, 1, 3);
  return m;
}

LieElement random_trace_zero(SplitMix64& rng, int d) {
  for (;;) {
    SquareMatrix m = random_matrix(rng, d);
    GaussianRational partial;
    for (int i = 0; i + 1 < d; ++i) partial += m.at(i, i);
    m.at(d - 1, d - 1) = -partial;
    LieElement x(std::move(m));
    if (!x.mat().is_zero()) return x;
  }
}

std::string h_string(const OrbitSpec& spec) {
  std::string s;
  for (size_t k = 0; k < spec.lambda().size(); ++k) {
    if (k) s += ",";
    s += spec.lambda()[k].get_str();
  }
  return s;
}

nlohmann::json vector_json(const std::vector<GaussianRational>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : v) j.push_back(to_string(c));
  return j;
}

}  // namespace

OrbitSpec spec_from_options(const CheckOptions& opts) {
  if (opts.h.empty()) return OrbitSpec::with_default_h(opts.n);
  return OrbitSpec(opts.n, opts.h);
}

FormSpec form_from_options(const CheckOptions& opts) {
  if (opts.scale == "trace") return FormSpec::trace_form();
  if (opts.scale == "killing") return FormSpec::killing(opts.n);
  throw PreconditionError("unknown scale '" + opts.scale + "' (use trace or killing)");
}

VerificationReport check_adjugate(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("adjugate", "identity:classical-adjoint", opts);
  r.n = 0;
  r.params["dims"] = "2-5";
  SplitMix64 rng(opts.seed);
  for (int k = 0; k < opts.samples; ++k) {
    int d = 2 + k % 4;
    SquareMatrix a = random_matrix(rng, d);
    auto [adj, det] = adjugate(a);
    SquareMatrix expected = SquareMatrix::identity(d);
    for (int i = 0; i < d; ++i) expected.at(i, i) = det;
    if (!(a * adj == expected) || !(adj * a == expected)) {
      fail(r, k, "A * adj(A) != det(A) * Id", {{"A", matrix_to_json(a)}});
      break;
    }
    int j = k % d;
    GaussianRational sum;
    for (int i = 0; i < d; ++i) sum += a.at(i, j) * adj.at(j, i);
    if (!(sum == det)) {
      fail(r, k, "cofactor column expansion != det", {{"A", matrix_to_json(a)}});
      break;
    }
    if (!(det == det_bareiss(a))) {
      fail(r, k, "cofactor and Bareiss determinants disagree", {{"A", matrix_to_json(a)}});
      break;
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_trace_one(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("trace-one", "identity:orbit-trace-one", opts);
  SplitMix64 master(opts.seed);
  int d = opts.n + 1;
  for (int k = 0; k < opts.samples; ++k) {
    std::uint64_t s = master.next();
    GroupElement g = sample_sl(opts.n, s, default_transvection_length(opts.n));
    if (!(det_bareiss(g.mat()) == GaussianRational(1))) {
      fail(r, k, "det g != 1", {{"g", matrix_to_json(g.mat())}});
      break;
    }
    TensorPoint p = tensor_point(g);
    SquareMatrix m = p.outer();
    if (!(m.trace() == GaussianRational(1)) || !(p.pairing() == GaussianRational(1))) {
      fail(r, k, "tr(v x eps) != 1", {{"g", matrix_to_json(g.mat())}});
      break;
    }
    Eigenstructure e = eigenstructure(m, g);
    if (!(m.apply(e.image_vector) == e.image_vector)) {
      fail(r, k, "M w1 != w1", {{"g", matrix_to_json(g.mat())}});
      break;
    }
    bool kernel_ok = true;
    std::vector<GaussianRational> zero(d);
    for (const auto& w : e.kernel_basis) kernel_ok = kernel_ok && m.apply(w) == zero;
    if (!kernel_ok) {
      fail(r, k, "M wk != 0 for some k >= 2", {{"g", matrix_to_json(g.mat())}});
      break;
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_ratmap(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("ratmap", "theorem:rational-potential", opts);
  OrbitSpec spec = spec_from_options(opts);
  FormSpec form = form_from_options(opts);
  r.params["h"] = h_string(spec);
  SplitMix64 master(opts.seed);
  GaussianRational factor = form.scale * GaussianRational(opts.n + 1);
  for (int k = 0; k < opts.samples; ++k) {
    std::uint64_t s = master.next();
    GroupElement g = sample_sl(opts.n, s, default_transvection_length(opts.n));
    LieElement a = adjoint_point(g, spec);
    TensorPoint p = tensor_point(g);
    SquareMatrix m = p.outer();
    if (!(model_map(p, opts.n).mat() == a.mat())) {
      fail(r, k, "tensor and adjoint incarnations disagree", {{"g", matrix_to_json(g.mat())}});
      break;
    }
    GaussianRational f = potential_f(a, spec, form);
    GaussianRational rv = rational_potential_R(m, spec);
    if (!(f == factor * rv)) {
      fail(r, k, "f_H != (n+1) R_H",
           {{"g", matrix_to_json(g.mat())}, {"f", to_string(f)}, {"R", to_string(rv)}});
      break;
    }
    // Degree-0 homogeneity of R.
    GaussianRational lambda = GaussianRational(7) + GaussianRational(static_cast<long>(k % 5));
    if (!(rational_potential_R(m.scaled(lambda.re()), spec) == rv)) {
      fail(r, k, "R is not scale-invariant", {{"g", matrix_to_json(g.mat())}});
      break;
    }
    // A constructed incidence point must hit the indeterminacy error.
    std::vector<GaussianRational> v = p.v;
    int pivot = -1;
    for (int i = 0; i <= opts.n; ++i)
      if (!v[i].is_zero()) {
        pivot = i;
        break;
      }
    std::vector<GaussianRational> xi(opts.n + 1);
    int other = (pivot + 1) % (opts.n + 1);
    xi[other] = GaussianRational(1);
    xi[pivot] = -(v[other] / v[pivot]);
    bool raised = false;
    try {
      rational_potential_R(outer(v, xi), spec);
    } catch (const IndeterminacyError&) {
      raised = true;
    }
    if (!raised) {
      fail(r, k, "no indeterminacy error on an incidence point", {{"g", matrix_to_json(g.mat())}});
      break;
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_sl3_formula() {
  Timer timer;
  CheckOptions opts;
  opts.n = 2;
  opts.samples = 5;
  VerificationReport r = base_report("sl3-formula", "example:sl3-rational-map", opts);
  RingPtr ring = PolyRing::make(
      {"a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32", "a33"});
  MatrixT<Polynomial> g(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      g.at(i, j) = Polynomial::variable(ring, "a" + std::to_string(i + 1) + std::to_string(j + 1));
  MatrixT<Polynomial> adj = adjugate_cofactor(g);
  std::vector<long> lambda = {3, -2, -1};
  Polynomial numerator, denominator;
  for (int i = 0; i < 3; ++i) {
    Polynomial mii = g.at(i, 0) * adj.at(0, i);  // M_ii = a_i1 (adj g)_1i
    numerator += mii * GaussianRational(lambda[i]);
    denominator += mii;
  }
  Polynomial expected_num = parse_polynomial(
      "3*a11*a22*a33 - 3*a11*a23*a32 - 2*a21*a13*a32 + 2*a21*a12*a33"
      " - a31*a12*a23 + a31*a13*a22",
      ring);
  Polynomial expected_den = parse_polynomial(
      "a11*a22*a33 - a11*a23*a32 + a21*a13*a32 - a21*a12*a33"
      " + a31*a12*a23 - a31*a13*a22",
      ring);
  if (!(numerator == expected_num))
    fail(r, 0, "numerator coefficients do not match the (3,-3,-2,2,-1,1) pattern",
         {{"got", numerator.to_string()}});
  if (!(denominator == expected_den))
    fail(r, 1, "denominator is not the determinant expansion", {{"got", denominator.to_string()}});
  if (!(denominator == det_cofactor(g)))
    fail(r, 2, "denominator does not equal det g");

  // Numeric cross-check of M_ij = a_i1 (adj g)_1j at seeded group elements.
  SplitMix64 master(opts.seed);
  for (int k = 0; k < opts.samples; ++k) {
    GroupElement gg = sample_sl(2, master.next(), default_transvection_length(2));
    SquareMatrix m = tensor_point(gg).outer();
    SquareMatrix adjg = adjugate(gg.mat()).first;
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        ok = ok && m.at(i, j) == gg.mat().at(i, 0) * adjg.at(0, j);
    if (!ok) {
      fail(r, 3 + k, "M_ij != a_i1 (adj g)_1j at a seeded point",
           {{"g", matrix_to_json(gg.mat())}});
      break;
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_hessian(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("hessian", "theorem:lefschetz-fibration", opts);
  OrbitSpec spec = spec_from_options(opts);
  FormSpec form = form_from_options(opts);
  r.params["h"] = h_string(spec);
  std::vector<CriticalDatum> data = critical_points(spec, form);
  if (static_cast<int>(data.size()) != opts.n + 1)
    fail(r, 0, "critical point count != n+1", {{"count", data.size()}});
  for (const auto& cd : data) {
    if (!cd.nondegenerate) {
      fail(r, cd.chart_index, "degenerate Hessian at a critical point",
           {{"hessian", matrix_to_json(cd.hessian)}});
      continue;
    }
    if (!orbit_membership(cd.point, spec))
      fail(r, cd.chart_index, "critical point fails orbit membership");
    GaussianRational expected_f =
        form.scale * GaussianRational(opts.n + 1) * GaussianRational(spec.lambda()[cd.chart_index - 1]);
    if (!(cd.f_value == expected_f))
      fail(r, cd.chart_index, "critical value != (n+1) lambda_j at the given scale",
           {{"f", to_string(cd.f_value)}});
  }
  // The sl2 Hessian in chart 1 is exactly [[0,4],[4,0]] at trace scale.
  if (opts.n == 1 && spec.lambda()[0] == 1 && opts.scale == "trace") {
    SquareMatrix expected(2);
    expected.at(0, 1) = GaussianRational(4);
    expected.at(1, 0) = GaussianRational(4);
    if (!(data[0].hessian == expected))
      fail(r, 0, "sl2 chart-1 Hessian is not [[0,4],[4,0]]",
           {{"hessian", matrix_to_json(data[0].hessian)}});
    if (!(det_bareiss(data[0].hessian) == GaussianRational(-16)))
      fail(r, 0, "sl2 Hessian determinant is not -16");
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_critical(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("critical", "theorem:lefschetz-fibration", opts);
  OrbitSpec spec = spec_from_options(opts);
  FormSpec form = form_from_options(opts);
  r.params["h"] = h_string(spec);
  std::vector<CriticalDatum> data = critical_points(spec, form);
  if (static_cast<int>(data.size()) != opts.n + 1)
    fail(r, 0, "critical point count != n+1", {{"count", data.size()}});
  for (const auto& cd : data) {
    const Rational& lambda = spec.lambda()[cd.chart_index - 1];
    if (!(cd.r_value == GaussianRational(lambda)))
      fail(r, cd.chart_index, "R-value != lambda_j", {{"r", to_string(cd.r_value)}});
    if (!(cd.f_value == form.scale * GaussianRational(opts.n + 1) * GaussianRational(lambda)))
      fail(r, cd.chart_index, "f-value != (n+1) lambda_j", {{"f", to_string(cd.f_value)}});
  }
  for (size_t a = 0; a < data.size(); ++a)
    for (size_t b = a + 1; b < data.size(); ++b)
      if (data[a].f_value == data[b].f_value)
        fail(r, static_cast<int>(a), "critical values are not pairwise distinct");

  // Cross-check against the Weyl enumeration rather than assuming it:
  // each chart potential is a quadric with zero gradient at its center
  // and nondegenerate Hessian, so the center is the only critical point
  // in the chart, and the charts cover the orbit (v != 0 forces some
  // v_j != 0). The critical set is therefore exactly the Weyl orbit.
  for (int j = 1; j <= opts.n + 1; ++j) {
    Polynomial p = chart_potential_poly(spec, j, form);
    if (p.total_degree() > 2)
      fail(r, j, "chart potential is not quadratic; uniqueness argument void");
    for (const auto& g : chart_gradient_at_origin(p))
      if (!g.is_zero()) fail(r, j, "chart center is not a critical point");
    if (!data[j - 1].nondegenerate)
      fail(r, j, "degenerate chart Hessian; center may not be isolated");
  }
  std::vector<LieElement> weyl = weyl_orbit_points(spec.h0());
  if (weyl.size() != data.size())
    fail(r, 0, "Weyl orbit size differs from the critical count",
         {{"weyl", weyl.size()}, {"critical", data.size()}});
  for (const auto& w : weyl) {
    bool found = false;
    for (const auto& cd : data) found = found || cd.point.mat() == w.mat();
    if (!found) {
      fail(r, 0, "a Weyl point is missing from the critical set",
           {{"point", matrix_to_json(w.mat())}});
      break;
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_symplectic(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("symplectic", "form:hermitian-symplectic", opts);
  OrbitSpec spec = spec_from_options(opts);
  FormSpec form = form_from_options(opts);
  int d = opts.n + 1;
  SplitMix64 master(opts.seed);
  // Nondegeneracy witness Omega(iX, X) != 0 on nonzero samples.
  int nondeg_samples = std::min(opts.samples, 50);
  for (int k = 0; k < nondeg_samples; ++k) {
    LieElement x = random_trace_zero(master, d);
    LieElement ix(x.mat() * GaussianRational::i());
    if (sgn(omega(ix, x, form)) == 0) {
      fail(r, k, "Omega(iX, X) == 0 for a nonzero X", {{"X", matrix_to_json(x.mat())}});
      break;
    }
    if (sgn(omega(x, x, form)) != 0) {
      fail(r, k, "Omega(X, X) != 0", {{"X", matrix_to_json(x.mat())}});
      break;
    }
    // Conjugate symmetry of the Hermitian form and positivity at trace scale.
    LieElement y = random_trace_zero(master, d);
    if (!(hermitian_form(x, y, form) == hermitian_form(y, x, form).conj())) {
      fail(r, k, "Hermitian form is not conjugate-symmetric");
      break;
    }
    GaussianRational hxx = hermitian_form(x, x, FormSpec::trace_form());
    if (!hxx.is_real() || sgn(hxx.re()) <= 0) {
      fail(r, k, "H(X, X) is not a positive rational at trace scale");
      break;
    }
  }
  // Full symplectic rank 4n of the Omega-Gram matrix on tangent spaces.
  int gram_samples = std::min(opts.samples, 20);
  std::vector<SquareMatrix> basis = sl_basis(d);
  for (int k = 0; k < gram_samples; ++k) {
    GroupElement g = sample_sl(opts.n, master.next(), default_transvection_length(opts.n));
    LieElement a = adjoint_point(g, spec);
    std::vector<LieElement> tangents;
    tangents.reserve(2 * basis.size());
    for (const auto& b : basis) {
      tangents.push_back(LieElement(bracket(b, a.mat())));
      tangents.push_back(LieElement(bracket(b * GaussianRational::i(), a.mat())));
    }
    int m = static_cast<int>(tangents.size());
    SquareMatrix gram(m);
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) {
        Rational o = omega(tangents[u], tangents[v], form);
        gram.at(u, v) = GaussianRational(o);
        gram.at(v, u) = GaussianRational(-o);
      }
    if (rank(gram) != 4 * opts.n) {
      fail(r, k, "Omega-Gram rank != 4n on an orbit tangent space",
           {{"rank", rank(gram)}, {"expected", 4 * opts.n}});
      break;
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_lagrangian(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("lagrangian", "fact:flag-lagrangian-zero-section", opts);
  OrbitSpec spec = spec_from_options(opts);
  FormSpec form = form_from_options(opts);
  int d = opts.n + 1;
  std::vector<SquareMatrix> su = su_basis(d);
  std::vector<LieElement> weyl_points = weyl_orbit_points(spec.h0());
  if (static_cast<int>(weyl_points.size()) != opts.n + 1)
    fail(r, 0, "Weyl orbit of the minimal H0 does not have n+1 points",
         {{"count", weyl_points.size()}});
  int idx = 0;
  for (const auto& w : weyl_points) {
    std::vector<LieElement> tangents;
    for (const auto& u : su) {
      SquareMatrix t = bracket(u, w.mat());
      if (!t.is_zero()) tangents.push_back(LieElement(std::move(t)));
    }
    for (size_t a = 0; a < tangents.size(); ++a)
      for (size_t b = a; b < tangents.size(); ++b)
        if (sgn(omega(tangents[a], tangents[b], form)) != 0) {
          fail(r, idx, "Omega does not vanish on the su-tangent space at a Weyl point",
               {{"point", matrix_to_json(w.mat())}});
          a = tangents.size();
          break;
        }
    ++idx;
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_charts(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("charts", "corollary:bruhat-charts-dense", opts);
  OrbitSpec spec = spec_from_options(opts);
  FormSpec form = form_from_options(opts);
  int d = opts.n + 1;
  SplitMix64 master(opts.seed);

  // Sampled chart points land on the orbit and in chart j.
  int param_samples = std::min(opts.samples, 50);
  for (int k = 0; k < param_samples; ++k) {
    int j = 1 + static_cast<int>(master.bounded(d));
    SquareMatrix ym(d), xm(d);
    for (int i = 0; i < d; ++i) {
      if (i == j - 1) continue;
      ym.at(i, j - 1) = master.gaussian(-3, 3, 1, 2);
      xm.at(j - 1, i) = master.gaussian(-3, 3, 1, 2);
    }
    LieElement y(std::move(ym)), x(std::move(xm));
    LieElement p = chart_param(spec, j, y, x);
    if (!orbit_membership(p, spec)) {
      fail(r, k, "chart point fails orbit membership", {{"j", j}});
      break;
    }
    TensorPoint tp = factor_rank_one(model_inverse(p, opts.n));
    if (!chart_membership(tp, j)) {
      fail(r, k, "chart point does not satisfy the chart coordinate test", {{"j", j}});
      break;
    }
  }

  // Potential in every chart: gradient vanishes at the center, the
  // constant term is the critical value, and a shifted center has a
  // nonzero linear part.
  for (int j = 1; j <= d; ++j) {
    Polynomial p = chart_potential_poly(spec, j, form);
    GaussianRational expected =
        form.scale * GaussianRational(opts.n + 1) * GaussianRational(spec.lambda()[j - 1]);
    if (!(chart_constant_term(p) == expected))
      fail(r, j, "chart constant term != critical value", {{"j", j}});
    for (const auto& gcoord : chart_gradient_at_origin(p))
      if (!gcoord.is_zero()) {
        fail(r, j, "chart gradient at the center is nonzero", {{"j", j}});
        break;
      }
    std::vector<Polynomial> shift;
    for (int v = 0; v < 2 * opts.n; ++v)
      shift.push_back(Polynomial::variable(p.ring(), v) + Polynomial(1));
    Polynomial shifted = p.substitute(shift);
    bool some_linear = false;
    for (const auto& gcoord : chart_gradient_at_origin(shifted))
      if (!gcoord.is_zero()) some_linear = true;
    if (!some_linear)
      fail(r, j, "linear part vanishes at a non-critical center", {{"j", j}});
  }

  // Coordinate test vs complement polynomial, and chart covering.
  for (int k = 0; k < opts.samples; ++k) {
    GroupElement g = sample_sl(opts.n, master.next(), default_transvection_length(opts.n));
    TensorPoint tp = tensor_point(g);
    bool covered = false;
    for (int j = 1; j <= d; ++j) {
      bool coord = chart_membership(tp, j);
      bool poly = chart_membership_complement_poly(tp, j);
      if (coord != poly) {
        fail(r, k, "coordinate and complement-polynomial chart tests disagree", {{"j", j}});
        break;
      }
      covered = covered || coord;
    }
    if (!covered) {
      fail(r, k, "sampled orbit point lies in no chart");
      break;
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_incidence(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("incidence", "fact:incidence-variety-complement", opts);
  OrbitSpec spec = spec_from_options(opts);
  int d = opts.n + 1;
  SplitMix64 master(opts.seed);

  // Fixed witnesses.
  {
    IncidencePair p;
    p.w.assign(d, GaussianRational());
    p.xi.assign(d, GaussianRational());
    p.w[0] = GaussianRational(1);
    p.xi[std::min(1, d - 1)] = GaussianRational(1);
    if (d >= 2 && !incidence_member(p)) fail(r, 0, "(e1, eps2) is not recognized as incident");
  }
  if (d >= 2) {
    IncidencePair p;
    p.w.assign(d, GaussianRational());
    p.xi.assign(d, GaussianRational());
    p.w[0] = GaussianRational(1);
    p.w[1] = GaussianRational(1);
    p.xi[0] = GaussianRational(1);
    p.xi[1] = GaussianRational(-1);
    if (!incidence_member(p)) fail(r, 1, "(e1+e2, eps1-eps2) is not recognized as incident");
  }

  for (int k = 0; k < opts.samples; ++k) {
    GroupElement g = sample_sl(opts.n, master.next(), default_transvection_length(opts.n));
    TensorPoint tp = tensor_point(g);
    IncidencePair p{tp.v, tp.eps};
    if (incidence_member(p)) {
      fail(r, k, "orbit point flagged as incident (eps(v) should be 1)",
           {{"g", matrix_to_json(g.mat())}});
      break;
    }
    // Segre coordinates of g are rank one: all 2x2 minors vanish.
    ProjectivePoint sc = segre_coords(g);
    SquareMatrix z(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) z.at(i, j) = sc.coords()[i * d + j];
    bool minors_ok = true;
    for (int i = 0; i < d && minors_ok; ++i)
      for (int kk = i + 1; kk < d && minors_ok; ++kk)
        for (int j = 0; j < d && minors_ok; ++j)
          for (int l = j + 1; l < d; ++l)
            if (!(z.at(i, j) * z.at(kk, l) - z.at(i, l) * z.at(kk, j)).is_zero()) {
              minors_ok = false;
              break;
            }
    if (!minors_ok) {
      fail(r, k, "a 2x2 minor of the Segre coordinates is nonzero",
           {{"g", matrix_to_json(g.mat())}});
      break;
    }
    // Points of the incidence variety have tr = 0 and are rejected by R.
    std::vector<GaussianRational> xi(d);
    int pivot = -1;
    for (int i = 0; i < d; ++i)
      if (!tp.v[i].is_zero()) {
        pivot = i;
        break;
      }
    int other = (pivot + 1) % d;
    xi[other] = GaussianRational(1);
    xi[pivot] = -(tp.v[other] / tp.v[pivot]);
    SquareMatrix sigma_point = outer(tp.v, xi);
    if (!sigma_point.trace().is_zero()) {
      fail(r, k, "constructed incidence point has nonzero trace");
      break;
    }
    bool raised = false;
    try {
      rational_potential_R(sigma_point, spec);
    } catch (const IndeterminacyError&) {
      raised = true;
    }
    if (!raised) {
      fail(r, k, "R did not reject an incidence point");
      break;
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_fiber_sl2(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("fiber-sl2", "theorem:sl2-fiber-compactification", opts);
  r.n = 1;
  RingPtr proj = PolyRing::make({"x", "y", "z", "t"});
  std::vector<GaussianRational> levels = {GaussianRational(0), GaussianRational(2),
                                          GaussianRational(-2), GaussianRational(6)};
  std::vector<ProjectivePoint> expected_boundary = {
      ProjectivePoint({0, 1, 0, 0}), ProjectivePoint({0, 0, 1, 0})};

  for (size_t li = 0; li < levels.size(); ++li) {
    const GaussianRational& c = levels[li];
    FiberDescription fd = sl2_fiber(c);
    if (fd.boundary_points != expected_boundary)
      fail(r, static_cast<int>(li), "boundary points depend on the level");
    bool expect_smooth = !(c == GaussianRational(2) || c == GaussianRational(-2));
    if (fd.smooth != expect_smooth)
      fail(r, static_cast<int>(li), "smoothness flag is wrong");
    // Boundary points satisfy the closure equations with t = 0.
    for (const auto& bp : fd.boundary_points) {
      if (!fd.closure_plane.evaluate(bp.coords()).is_zero() ||
          !fd.closure_quadric.evaluate(bp.coords()).is_zero())
        fail(r, static_cast<int>(li), "a boundary point misses the closure");
    }
  }

  // Level 0: closure is {x = 0, yz = t^2} and the conic parametrization
  // covers sampled closure points.
  {
    FiberDescription fd = sl2_fiber(GaussianRational(0));
    if (!(fd.closure_plane == parse_polynomial("x", proj)))
      fail(r, 10, "level-0 plane is not x = 0");
    if (!(fd.closure_quadric == parse_polynomial("y*z - t^2", proj)))
      fail(r, 10, "level-0 quadric is not yz - t^2");
    if (!(fd.affine_equation ==
          parse_polynomial("y*z - 1", PolyRing::make({"y", "z"}))))
      fail(r, 10, "level-0 affine fiber is not yz = 1");

    SplitMix64 master(opts.seed);
    std::vector<ProjectivePoint> samples = fd.boundary_points;
    for (int k = 0; k < std::min(opts.samples, 25); ++k) {
      GaussianRational yv = master.gaussian(-5, 5, 1, 3);
      if (yv.is_zero()) yv = GaussianRational(1);
      samples.push_back(ProjectivePoint({GaussianRational(), yv, yv.inverse(),
                                         GaussianRational(1)}));
    }
    int idx = 0;
    for (const auto& p : samples) {
      auto [s, t] = conic_param_preimage(p);
      if (!(conic_param(s, t) == p)) {
        fail(r, 20 + idx, "conic parametrization does not reach a closure point",
             {{"point", p.to_string()}});
        break;
      }
      ++idx;
    }
    // Images of the parametrization always land on the closure.
    for (int k = 0; k < 10; ++k) {
      GaussianRational s = master.gaussian(-4, 4, 1, 2);
      GaussianRational t = master.gaussian(-4, 4, 1, 2);
      if (s.is_zero() && t.is_zero()) s = GaussianRational(1);
      ProjectivePoint img = conic_param(s, t);
      if (!fd.closure_quadric.evaluate(img.coords()).is_zero() ||
          !fd.closure_plane.evaluate(img.coords()).is_zero()) {
        fail(r, 40 + k, "parametrization image misses the closure");
        break;
      }
    }

    // Boundary ideal: adding t cuts exactly the two coordinate points;
    // the ideal contains x and yz.
    PolynomialIdeal boundary(proj, {fd.closure_plane, fd.closure_quadric,
                                    Polynomial::variable(proj, "t")});
    MonomialOrder ord = MonomialOrder::grevlex(proj);
    std::vector<Polynomial> basis = groebner(boundary, ord, opts.cap);
    if (!normal_form(parse_polynomial("x", proj), basis, ord).is_zero() ||
        !normal_form(parse_polynomial("y*z", proj), basis, ord).is_zero())
      fail(r, 50, "boundary ideal does not contain x and yz");
    for (const auto& bp : expected_boundary)
      for (const auto& g : basis)
        if (!g.evaluate(bp.coords()).is_zero())
          fail(r, 51, "a coordinate boundary point misses the boundary ideal");
  }

  // Level 2 contains the critical point H0 = (x,y,z) = (1,0,0) and the
  // affine conic degenerates to yz = 0; generic level 6 is smooth with
  // full-rank Jacobian at sampled solutions.
  {
    FiberDescription f2 = sl2_fiber(GaussianRational(2));
    std::vector<GaussianRational> yz0 = {GaussianRational(), GaussianRational()};
    if (!f2.affine_equation.evaluate(yz0).is_zero())
      fail(r, 60, "level-2 fiber does not contain the critical point");

    FiberDescription f6 = sl2_fiber(GaussianRational(6));
    SplitMix64 master(opts.seed ^ 0xF1BEULL);
    GaussianRational half(Rational(3));  // c/2 for c = 6
    GaussianRational rhs = GaussianRational(1) - half * half;
    for (int k = 0; k < 10; ++k) {
      GaussianRational yv = master.gaussian(-5, 5, 1, 2);
      if (yv.is_zero()) yv = GaussianRational(2);
      GaussianRational zv = rhs / yv;
      std::vector<GaussianRational> pt = {yv, zv};
      if (!f6.affine_equation.evaluate(pt).is_zero()) {
        fail(r, 70 + k, "constructed point misses the level-6 fiber");
        break;
      }
      // Jacobian of (2x - c, x^2 + yz - 1) at (c/2, y, z), embedded 3x3.
      SquareMatrix jac(3);
      jac.at(0, 0) = GaussianRational(2);
      jac.at(1, 0) = GaussianRational(2) * half;
      jac.at(1, 1) = zv;
      jac.at(1, 2) = yv;
      if (rank(jac) != 2) {
        fail(r, 70 + k, "Jacobian rank != 2 at a smooth fiber point");
        break;
      }
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

VerificationReport check_segre(const CheckOptions& opts) {
  Timer timer;
  VerificationReport r = base_report("segre", "theorem:segre-compactification", opts);
  r.params["cap"] = opts.cap;
  int n = opts.n;
  if (n <= 2) {
    PolynomialIdeal affine = orbit_ideal(n);
    PolynomialIdeal hom = homogenize_ideal(affine, "t", opts.cap);
    PolynomialIdeal pulled = substitute_linear(hom, segre_pullback_images(n));
    PolynomialIdeal minors = minors_ideal(n);
    MonomialOrder ord = MonomialOrder::grevlex(segre_ring(n));
    r.params["mode"] = "ideal-equality";
    if (!ideal_equal(pulled, minors, ord, opts.cap))
      fail(r, 0, "pulled-back homogenized orbit ideal != 2x2 minors ideal");
  } else {
    // Desk-scale sampling containment: every rank-one point satisfies the
    // pulled-back homogeneous system (A - n t I)(A + t I) = 0.
    r.params["mode"] = "sampling-containment";
    RingPtr ra = orbit_ring(n);
    RingPtr rat = ra->extended("t");
    int d = n + 1;
    MatrixT<Polynomial> A(d);
    Polynomial trace_rest;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == d - 1 && j == d - 1) continue;
        A.at(i, j) = Polynomial::variable(rat, orbit_var(i + 1, j + 1));
        if (i == j) trace_rest += A.at(i, j);
      }
    A.at(d - 1, d - 1) = -trace_rest;
    Polynomial t = Polynomial::variable(rat, "t");
    MatrixT<Polynomial> lhs = A, rhs = A;
    for (int i = 0; i < d; ++i) {
      lhs.at(i, i) -= t * GaussianRational(n);
      rhs.at(i, i) += t;
    }
    MatrixT<Polynomial> prod = lhs * rhs;
    std::vector<Polynomial> gens;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!prod.at(i, j).is_zero()) gens.push_back(prod.at(i, j));
    PolynomialIdeal hom_raw(rat, std::move(gens));
    PolynomialIdeal pulled = substitute_linear(hom_raw, segre_pullback_images(n));

    SplitMix64 master(opts.seed);
    for (int k = 0; k < opts.samples; ++k) {
      std::vector<GaussianRational> v(d), xi(d);
      bool vz = true, xz = true;
      for (int i = 0; i < d; ++i) {
        v[i] = master.gaussian(-4, 4, 1, 3);
        xi[i] = master.gaussian(-4, 4, 1, 3);
        vz = vz && v[i].is_zero();
        xz = xz && xi[i].is_zero();
      }
      if (vz) v[0] = GaussianRational(1);
      if (xz) xi[0] = GaussianRational(1);
      SquareMatrix z = outer(v, xi);
      std::vector<GaussianRational> point;
      point.reserve(static_cast<size_t>(d) * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) point.push_back(z.at(i, j));
      for (const auto& g : pulled.generators)
        if (!g.evaluate(point).is_zero()) {
          fail(r, k, "a rank-one point misses the pulled-back homogeneous system");
          k = opts.samples;
          break;
        }
    }
  }
  r.timing_ms = timer.ms();
  return r;
}

std::vector<VerificationReport> check_all(const CheckOptions& opts) {
  std::vector<VerificationReport> reports;
  reports.push_back(check_adjugate(opts));
  reports.push_back(check_trace_one(opts));
  reports.push_back(check_ratmap(opts));
  if (opts.n == 2) reports.push_back(check_sl3_formula());
  reports.push_back(check_hessian(opts));
  reports.push_back(check_critical(opts));
  CheckOptions small = opts;
  small.n = std::min(opts.n, 3);
  reports.push_back(check_symplectic(small));
  reports.push_back(check_lagrangian(small));
  reports.push_back(check_charts(small));
  reports.push_back(check_incidence(opts));
  reports.push_back(check_fiber_sl2(opts));
  CheckOptions segre_opts = opts;
  segre_opts.n = std::min(opts.n, 2);
  reports.push_back(check_segre(segre_opts));
  return reports;
}

nlohmann::json critical_listing(const OrbitSpec& spec, const FormSpec& form) {
  nlohmann::json j;
  j["check_name"] = "critical";
  j["paper_anchor"] = "theorem:lefschetz-fibration";
  j["n"] = spec.n();
  nlohmann::json h = nlohmann::json::array();
  for (const auto& l : spec.lambda()) h.push_back(l.get_str());
  j["h"] = h;
  nlohmann::json pts = nlohmann::json::array();
  nlohmann::json fvals = nlohmann::json::array();
  for (const auto& cd : critical_points(spec, form)) {
    nlohmann::json p;
    p["chart_index"] = cd.chart_index;
    p["point"] = matrix_to_json(cd.point.mat());
    p["f_value"] = to_string(cd.f_value);
    p["r_value"] = to_string(cd.r_value);
    p["hessian"] = matrix_to_json(cd.hessian);
    p["hessian_det"] = to_string(det_bareiss(cd.hessian));
    p["nondegenerate"] = cd.nondegenerate;
    pts.push_back(std::move(p));
    fvals.push_back(to_string(cd.f_value));
  }
  j["critical_points"] = pts;
  j["f_values"] = fvals;
  return j;
}

nlohmann::json orbit_info_listing(const OrbitSpec& spec) {
  nlohmann::json j;
  j["check_name"] = "orbit-info";
  j["paper_anchor"] = "def:minimal-adjoint-orbit";
  j["n"] = spec.n();
  j["dim_complex"] = 2 * spec.n();
  j["h0"] = matrix_to_json(spec.h0().mat());
  nlohmann::json h = nlohmann::json::array();
  for (const auto& l : spec.lambda()) h.push_back(l.get_str());
  j["h"] = h;
  j["h_regular"] = spec.regular();
  j["minimal_polynomial"] = minimal_polynomial(spec.h0().mat()).to_string();
  j["weyl_point_count"] = weyl_orbit_points(spec.h0()).size();
  return j;
}

nlohmann::json orbit_sample_listing(const OrbitSpec& spec, std::uint64_t seed, int length) {
  GroupElement g = sample_sl(spec.n(), seed, length);
  LieElement a = adjoint_point(g, spec);
  TensorPoint tp = tensor_point(g);
  nlohmann::json j;
  j["check_name"] = "orbit-sample";
  j["paper_anchor"] = "def:minimal-adjoint-orbit";
  j["n"] = spec.n();
  j["seed"] = seed;
  j["transvection_length"] = length;
  j["g"] = matrix_to_json(g.mat());
  j["adjoint_point"] = matrix_to_json(a.mat());
  j["tensor_v"] = vector_json(tp.v);
  j["tensor_eps"] = vector_json(tp.eps);
  j["membership"] = orbit_membership(a, spec);
  j["minimal_polynomial"] = minimal_polynomial(a.mat()).to_string();
  return j;
}

}  // namespace adorb
