#include "adorb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace adorb {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
  }
}

int PolyRing::index_of(const std::string& name) const {
  for (int k = 0; k < nvars(); ++k)
    if (vars_[k] == name) return k;
  return -1;
}

std::shared_ptr<const PolyRing> PolyRing::extended(const std::string& extra) const {
  std::vector<std::string> vars = vars_;
  vars.push_back(extra);
  return PolyRing::make(std::move(vars));
}

std::uint64_t mono_degree(const Mono& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (size_t k = 0; k < a.size(); ++k) m[k] = a[k] + b[k];
  return m;
}

Mono mono_div(const Mono& b, const Mono& a) {
  Mono m(b.size());
  for (size_t k = 0; k < b.size(); ++k) {
    if (a[k] > b[k]) throw PreconditionError("monomial division is not exact");
    m[k] = b[k] - a[k];
  }
  return m;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
  return m;
}

MonomialOrder MonomialOrder::of_kind(const std::string& kind, const RingPtr& ring) {
  if (kind == "grevlex") return grevlex(ring);
  if (kind == "grlex") return grlex(ring);
  if (kind == "lex") return lex(ring);
  throw PreconditionError("unknown monomial order '" + kind + "'");
}

std::string MonomialOrder::kind_name() const {
  switch (kind) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Grlex: return "grlex";
    case Kind::Lex: return "lex";
  }
  return "?";
}

OrderCtx::OrderCtx(const MonomialOrder& order, const RingPtr& ring) : order_(order) {
  if (static_cast<int>(order.vars.size()) != ring->nvars())
    throw DimensionError("monomial order must list exactly the ring variables");
  pos_.reserve(order.vars.size());
  std::set<int> used;
  for (const auto& v : order.vars) {
    int idx = ring->index_of(v);
    if (idx < 0) throw DimensionError("order variable '" + v + "' is not a ring variable");
    if (!used.insert(idx).second) throw DimensionError("order repeats variable '" + v + "'");
    pos_.push_back(idx);
  }
}

int OrderCtx::compare(const Mono& a, const Mono& b) const {
  auto lex_from_front = [&]() {
    for (int p : pos_) {
      long d = static_cast<long>(a[p]) - static_cast<long>(b[p]);
      if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
  };
  switch (order_.kind) {
    case MonomialOrder::Kind::Lex:
      return lex_from_front();
    case MonomialOrder::Kind::Grlex: {
      std::uint64_t da = mono_degree(a), db = mono_degree(b);
      if (da != db) return da > db ? 1 : -1;
      return lex_from_front();
    }
    case MonomialOrder::Kind::Grevlex: {
      std::uint64_t da = mono_degree(a), db = mono_degree(b);
      if (da != db) return da > db ? 1 : -1;
      for (auto it = pos_.rbegin(); it != pos_.rend(); ++it) {
        long d = static_cast<long>(a[*it]) - static_cast<long>(b[*it]);
        if (d != 0) return d < 0 ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

namespace {

// Canonical storage order: grevlex with the ring's natural variable order.
int grevlex_cmp(const Mono& a, const Mono& b) {
  std::uint64_t da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

struct GrevlexDesc {
  bool operator()(const Mono& a, const Mono& b) const { return grevlex_cmp(a, b) > 0; }
};

}  // namespace

Polynomial::Polynomial(const GaussianRational& c) {
  if (!c.is_zero()) terms_.push_back(Term{Mono{}, c});
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const size_t nv = ring_ ? static_cast<size_t>(ring_->nvars()) : 0;
  for (auto& t : terms) {
    if (t.mono.empty()) t.mono.resize(nv, 0);
    if (t.mono.size() != nv) throw DimensionError("exponent vector length mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
  terms_.clear();
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!terms_.empty() && terms_.back().mono == t.mono)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
    if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
  }
}

Polynomial Polynomial::variable(const RingPtr& ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw PreconditionError("variable index out of range");
  Mono m(ring->nvars(), 0);
  m[index] = 1;
  return Polynomial(ring, {Term{std::move(m), GaussianRational(1)}});
}

Polynomial Polynomial::variable(const RingPtr& ring, const std::string& name) {
  int idx = ring->index_of(name);
  if (idx < 0) throw PreconditionError("unknown variable '" + name + "'");
  return variable(ring, idx);
}

Polynomial Polynomial::constant(const RingPtr& ring, const GaussianRational& c) {
  Polynomial p(c);
  if (!c.is_zero()) p.terms_.front().mono.resize(ring->nvars(), 0);
  p.ring_ = ring;
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].mono) == 0);
}

GaussianRational Polynomial::constant_value() const {
  if (terms_.empty()) return GaussianRational();
  const Term& last = terms_.back();
  return mono_degree(last.mono) == 0 ? last.coeff : GaussianRational();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_degree(t.mono));
  return d;
}

GaussianRational Polynomial::coeff_of(const Mono& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return GaussianRational();
}

namespace {

void adopt_ring(Polynomial& p, const RingPtr& ring);

}  // namespace

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

// Ring unification: a null ring is a plain constant and adopts the other
// side's ring; two distinct non-null rings are an error.
namespace {

void adopt_ring(Polynomial& p, const RingPtr& ring) {
  // Rebuild through the canonicalizing constructor.
  p = Polynomial(ring, std::vector<Term>(p.terms().begin(), p.terms().end()));
}

void unify(Polynomial& a, const Polynomial& b, Polynomial& b_copy, bool& use_copy) {
  use_copy = false;
  if (a.ring() && b.ring()) {
    if (!(*a.ring() == *b.ring())) throw DimensionError("polynomial variable-set mismatch");
    return;
  }
  if (!a.ring() && b.ring()) {
    adopt_ring(a, b.ring());
    return;
  }
  if (a.ring() && !b.ring()) {
    b_copy = b;
    adopt_ring(b_copy, a.ring());
    use_copy = true;
    return;
  }
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  Polynomial tmp;
  bool use_copy = false;
  unify(*this, o, tmp, use_copy);
  const Polynomial& rhs = use_copy ? tmp : o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = grevlex_cmp(terms_[i].mono, rhs.terms_[j].mono);
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back(rhs.terms_[j++]);
    } else {
      GaussianRational s = terms_[i].coeff + rhs.terms_[j].coeff;
      if (!s.is_zero()) merged.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
  while (j < rhs.terms_.size()) merged.push_back(rhs.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    Polynomial z;
    z.ring_ = a.ring_ ? a.ring_ : b.ring_;
    return z;
  }
  Polynomial lhs = a;
  Polynomial rhs_copy;
  bool use_copy = false;
  unify(lhs, b, rhs_copy, use_copy);
  const Polynomial& rhs = use_copy ? rhs_copy : b;
  std::map<Mono, GaussianRational, GrevlexDesc> acc;
  for (const auto& ta : lhs.terms_)
    for (const auto& tb : rhs.terms_) {
      Mono m = mono_mul(ta.mono, tb.mono);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), ta.coeff * tb.coeff);
      else
        it->second += ta.coeff * tb.coeff;
    }
  Polynomial out;
  out.ring_ = lhs.ring_;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_.push_back(Term{m, std::move(c)});
  return out;
}

Polynomial Polynomial::operator*(const GaussianRational& s) const {
  if (s.is_zero()) {
    Polynomial z;
    z.ring_ = ring_;
    return z;
  }
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= s;
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r(1);
  if (ring_) r = Polynomial::constant(ring_, GaussianRational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (a.ring_ && b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  if (!a.ring_ != !b.ring_) {
    // Constant vs ringed polynomial: compare as constants.
    if (!a.is_constant() || !b.is_constant()) return false;
    return a.constant_value() == b.constant_value();
  }
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (!ring_) return *this;
  if (static_cast<int>(images.size()) != ring_->nvars())
    throw PreconditionError("substitute: one image per ring variable required");
  // Per-variable power cache.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](int v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial(1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial out;
  for (const auto& t : terms_) {
    Polynomial term(t.coeff);
    for (int v = 0; v < ring_->nvars(); ++v)
      if (t.mono[v] > 0) term = term * power_of(v, t.mono[v]);
    out += term;
  }
  return out;
}

GaussianRational Polynomial::evaluate(const std::vector<GaussianRational>& point) const {
  if (!ring_) return constant_value();
  if (static_cast<int>(point.size()) != ring_->nvars())
    throw DimensionError("evaluate: wrong point dimension");
  GaussianRational acc;
  for (const auto& t : terms_) {
    GaussianRational m = t.coeff;
    for (int v = 0; v < ring_->nvars(); ++v)
      for (std::uint32_t e = 0; e < t.mono[v]; ++e) m *= point[v];
    acc += m;
  }
  return acc;
}

Polynomial Polynomial::derivative(int var) const {
  if (!ring_ || var < 0 || var >= ring_->nvars())
    throw PreconditionError("derivative: bad variable index");
  Polynomial out;
  out.ring_ = ring_;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term d;
    d.mono = t.mono;
    d.coeff = t.coeff * GaussianRational(static_cast<long>(t.mono[var]));
    d.mono[var] -= 1;
    out.terms_.push_back(std::move(d));
  }
  return out;  // dividing by a fixed variable preserves the term order
}

Polynomial Polynomial::lifted(const RingPtr& bigger) const {
  if (!ring_) {
    Polynomial p = *this;
    adopt_ring(p, bigger);
    return p;
  }
  std::vector<int> map(ring_->nvars());
  for (int v = 0; v < ring_->nvars(); ++v) {
    map[v] = bigger->index_of(ring_->vars()[v]);
    if (map[v] < 0) throw DimensionError("lift: variable '" + ring_->vars()[v] + "' missing");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Mono m(bigger->nvars(), 0);
    for (int v = 0; v < ring_->nvars(); ++v) m[map[v]] = t.mono[v];
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(bigger, std::move(terms));
}

Polynomial Polynomial::restricted(const RingPtr& smaller) const {
  if (!ring_) {
    Polynomial p = *this;
    adopt_ring(p, smaller);
    return p;
  }
  std::vector<int> map(smaller->nvars());
  for (int v = 0; v < smaller->nvars(); ++v) {
    map[v] = ring_->index_of(smaller->vars()[v]);
    if (map[v] < 0) throw DimensionError("restrict: variable '" + smaller->vars()[v] + "' missing");
  }
  std::vector<bool> kept(ring_->nvars(), false);
  for (int v : map) kept[v] = true;
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    for (int v = 0; v < ring_->nvars(); ++v)
      if (!kept[v] && t.mono[v] != 0)
        throw PreconditionError("restrict: variable '" + ring_->vars()[v] + "' occurs");
    Mono m(smaller->nvars(), 0);
    for (int v = 0; v < smaller->nvars(); ++v) m[v] = t.mono[map[v]];
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(smaller, std::move(terms));
}

Polynomial Polynomial::homogenized(int t_index) const {
  if (!ring_) return *this;
  std::uint64_t d = total_degree();
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono[t_index] != 0)
      throw PreconditionError("homogenize: the homogenizing variable already occurs");
    Term h = t;
    h.mono[t_index] += static_cast<std::uint32_t>(d - mono_degree(t.mono));
    terms.push_back(std::move(h));
  }
  return Polynomial(ring_, std::move(terms));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = mono_degree(terms_.front().mono);
  for (const auto& t : terms_)
    if (mono_degree(t.mono) != d) return false;
  return true;
}

namespace {

// Coefficient in parser-compatible infix: "3/2", "i", "5/2*i",
// "(1/2+3/4*i)". Sign handling is the caller's job for real and pure
// imaginary values; mixed values keep their signs inside parentheses.
std::string coeff_infix(const GaussianRational& c) {
  if (c.is_real()) return to_string(c.re());
  if (sgn(c.re()) == 0) {
    if (c.im() == 1) return "i";
    return to_string(c.im()) + "*i";
  }
  std::string s = "(" + to_string(c.re());
  Rational im = c.im();
  if (sgn(im) >= 0)
    s += "+";
  else {
    s += "-";
    im = -im;
  }
  if (im == 1)
    s += "i";
  else
    s += to_string(im) + "*i";
  return s + ")";
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const GaussianRational& c = t.coeff;
    bool pullable = c.is_real() || sgn(c.re()) == 0;  // sign out front
    bool neg = pullable && (sgn(c.re()) < 0 || (c.is_real() ? false : sgn(c.im()) < 0));
    GaussianRational mag = neg ? -c : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    bool has_vars = mono_degree(t.mono) > 0;
    bool coeff_needed = !(mag.is_one() && has_vars);
    if (coeff_needed) {
      out << coeff_infix(mag);
      if (has_vars) out << "*";
    }
    if (has_vars) {
      bool first_var = true;
      for (int v = 0; v < static_cast<int>(t.mono.size()); ++v) {
        if (t.mono[v] == 0) continue;
        if (!first_var) out << "*";
        first_var = false;
        out << ring_->vars()[v];
        if (t.mono[v] > 1) out << "^" << t.mono[v];
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input at '" + s_.substr(pos_) + "'");
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (take() == '-') sign = -1;
    }
    Polynomial acc = term();
    if (sign < 0) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      take();
      Polynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      take();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      unsigned e = parse_uint();
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      take();
      Polynomial p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'");
      take();
      return p;
    }
    if (c == '-') {
      take();
      return -base();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t p = pos_;
      Rational r = parse_rational_at_pos(p);
      pos_ = p;
      return Polynomial::constant(ring_, GaussianRational(r));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = parse_ident();
      int idx = ring_->index_of(name);
      if (idx >= 0) return Polynomial::variable(ring_, idx);
      if (name == "i") return Polynomial::constant(ring_, GaussianRational::i());
      throw ParseError("unknown variable '" + name + "'");
    }
    throw ParseError(std::string("unexpected character '") + c + "' in polynomial");
  }

  Rational parse_rational_at_pos(size_t& p) {
    size_t start = p;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    if (p < s_.size() && (s_[p] == '.' || s_[p] == 'e' || s_[p] == 'E'))
      throw ParseError("floating-point literal rejected in polynomial");
    std::string num = s_.substr(start, p - start);
    std::string den = "1";
    if (p < s_.size() && s_[p] == '/') {
      ++p;
      size_t ds = p;
      while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
      if (p == ds) throw ParseError("expected denominator digits");
      if (p < s_.size() && (s_[p] == '.' || s_[p] == 'e' || s_[p] == 'E'))
        throw ParseError("floating-point literal rejected in polynomial");
      den = s_.substr(ds, p - ds);
    }
    Rational r(num + "/" + den);
    r.canonicalize();
    return r;
  }

  unsigned parse_uint() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected exponent digits");
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }

  std::string parse_ident() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }

  const std::string& s_;
  size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace adorb
