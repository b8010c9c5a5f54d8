#include "adorb/exact.hpp"

#include <sstream>

namespace adorb {

UnivariatePolynomial UnivariatePolynomial::x_power(int k) {
  std::vector<GaussianRational> c(k + 1);
  c[k] = GaussianRational(1);
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::linear_root(const GaussianRational& r) {
  return UnivariatePolynomial({-r, GaussianRational(1)});
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  GaussianRational inv = leading().inverse();
  std::vector<GaussianRational> c(c_);
  for (auto& x : c) x *= inv;
  return UnivariatePolynomial(std::move(c));
}

GaussianRational UnivariatePolynomial::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

SquareMatrix UnivariatePolynomial::evaluate_matrix(const SquareMatrix& a) const {
  SquareMatrix acc(a.dim());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * a;
    for (int i = 0; i < a.dim(); ++i) acc.at(i, i) += *it;
  }
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (c_.size() <= 1) return UnivariatePolynomial();
  std::vector<GaussianRational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < c.size(); ++k) {
    if (k < a.c_.size()) c[k] += a.c_[k];
    if (k < b.c_.size()) c[k] += b.c_[k];
  }
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < c.size(); ++k) {
    if (k < a.c_.size()) c[k] += a.c_[k];
    if (k < b.c_.size()) c[k] -= b.c_[k];
  }
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return UnivariatePolynomial();
  std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::remainder_by(const UnivariatePolynomial& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  UnivariatePolynomial r = *this;
  GaussianRational lead_inv = divisor.leading().inverse();
  while (!r.is_zero() && r.degree() >= divisor.degree()) {
    GaussianRational q = r.leading() * lead_inv;
    int shift = r.degree() - divisor.degree();
    std::vector<GaussianRational> c(r.c_);
    for (size_t k = 0; k < divisor.c_.size(); ++k) c[k + shift] -= q * divisor.c_[k];
    r = UnivariatePolynomial(std::move(c));
  }
  return r;
}

bool UnivariatePolynomial::divides(const UnivariatePolynomial& other) const {
  return other.remainder_by(*this).is_zero();
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = c_[k];
    if (c.is_zero()) continue;
    bool neg = c.is_real() && sgn(c.re()) < 0;
    GaussianRational mag = neg ? -c : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string cs = adorb::to_string(mag);
    bool needs_coeff = !(mag.is_one() && k > 0);
    if (needs_coeff) {
      if (!mag.is_real()) out << "(" << cs << ")";
      else out << cs;
      if (k > 0) out << "*";
    }
    if (k > 0) {
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

GaussianRational det_bareiss(const SquareMatrix& a) {
  int d = a.dim();
  SquareMatrix m = a;
  GaussianRational prev(1);
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int p = -1;
      for (int r = k + 1; r < d; ++r)
        if (!m.at(r, k).is_zero()) {
          p = r;
          break;
        }
      if (p < 0) return GaussianRational();
      for (int c = 0; c < d; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j)
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  GaussianRational det = m.at(d - 1, d - 1);
  return sign < 0 ? -det : det;
}

std::pair<SquareMatrix, GaussianRational> adjugate(const SquareMatrix& a) {
  int d = a.dim();
  if (d == 1) {
    SquareMatrix adj(1);
    adj.at(0, 0) = GaussianRational(1);
    return {adj, a.at(0, 0)};
  }
  SquareMatrix adj(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SquareMatrix minor(d - 1);
      int rr = 0;
      for (int r = 0; r < d; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < d; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = a.at(r, c);
        }
        ++rr;
      }
      GaussianRational cof = det_bareiss(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj.at(j, i) = cof;
    }
  // Cheaper to read det off the expansion than to run Bareiss again.
  GaussianRational det;
  for (int i = 0; i < d; ++i) det += a.at(i, 0) * adj.at(0, i);
  return {adj, det};
}

namespace {

// Row echelon with plain field elimination; returns pivot column list.
std::vector<int> echelon(std::vector<std::vector<GaussianRational>>& rows, int ncols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    GaussianRational inv = rows[r][c].inverse();
    for (int j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      GaussianRational f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const SquareMatrix& a) {
  // Fraction-free Bareiss elimination with column pivot search.
  int d = a.dim();
  SquareMatrix m = a;
  GaussianRational prev(1);
  int rk = 0;
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int p = -1;
    for (int r = row; r < d; ++r)
      if (!m.at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < d; ++c) std::swap(m.at(row, c), m.at(p, c));
    for (int i = row + 1; i < d; ++i)
      for (int j = col + 1; j < d; ++j)
        m.at(i, j) = (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) / prev;
    for (int i = row + 1; i < d; ++i) m.at(i, col) = GaussianRational();
    prev = m.at(row, col);
    ++rk;
    ++row;
  }
  return rk;
}

std::vector<std::vector<GaussianRational>> kernel_basis(const SquareMatrix& a) {
  int d = a.dim();
  std::vector<std::vector<GaussianRational>> rows(d, std::vector<GaussianRational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rows[i][j] = a.at(i, j);
  std::vector<int> pivots = echelon(rows, d);
  std::vector<bool> is_pivot(d, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (int free_col = 0; free_col < d; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<GaussianRational> v(d);
    v[free_col] = GaussianRational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

UnivariatePolynomial minimal_polynomial(const SquareMatrix& a) {
  int d = a.dim();
  int nn = d * d;
  // Echelon basis of the span of vec(A^k), with tracked coordinates in
  // terms of the original powers.
  std::vector<std::vector<GaussianRational>> basis;   // echelonized vec rows
  std::vector<std::vector<GaussianRational>> coords;  // combination rows
  std::vector<int> pivot_of;                          // pivot column per basis row
  SquareMatrix power = SquareMatrix::identity(d);
  for (int k = 0;; ++k) {
    std::vector<GaussianRational> v(nn);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) v[i * d + j] = power.at(i, j);
    std::vector<GaussianRational> comb(k + 1);
    comb[k] = GaussianRational(1);
    // Reduce v against the current echelon basis.
    for (size_t r = 0; r < basis.size(); ++r) {
      const GaussianRational& f = v[pivot_of[r]];
      if (f.is_zero()) continue;
      GaussianRational factor = f;
      for (int c = 0; c < nn; ++c) v[c] -= factor * basis[r][c];
      for (size_t c = 0; c < coords[r].size() && c < comb.size(); ++c)
        comb[c] -= factor * coords[r][c];
    }
    int piv = -1;
    for (int c = 0; c < nn; ++c)
      if (!v[c].is_zero()) {
        piv = c;
        break;
      }
    if (piv < 0) {
      // A^k = sum of lower powers: comb holds the dependency, monic at x^k.
      return UnivariatePolynomial(std::move(comb));
    }
    GaussianRational inv = v[piv].inverse();
    for (int c = 0; c < nn; ++c) v[c] *= inv;
    for (auto& c : comb) c *= inv;
    basis.push_back(std::move(v));
    coords.push_back(std::move(comb));
    pivot_of.push_back(piv);
    power = power * a;
  }
}

UnivariatePolynomial characteristic_polynomial(const SquareMatrix& a) {
  int d = a.dim();
  // Faddeev-LeVerrier: c_d = 1, M_1 = A, c_{d-k} = -tr(A M_k)/k.
  std::vector<GaussianRational> c(d + 1);
  c[d] = GaussianRational(1);
  SquareMatrix m = SquareMatrix::identity(d);
  for (int k = 1; k <= d; ++k) {
    m = a * m;
    GaussianRational ck = m.trace() / GaussianRational(static_cast<long>(k));
    c[d - k] = -ck;
    for (int i = 0; i < d; ++i) m.at(i, i) -= ck;
  }
  return UnivariatePolynomial(std::move(c));
}

SquareMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix literal must be a nonempty array of rows");
  int d = static_cast<int>(j.size());
  SquareMatrix m(d);
  for (int i = 0; i < d; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw ParseError("matrix literal rows must all have the same length as the row count");
    for (int c = 0; c < d; ++c) {
      const auto& cell = row.at(c);
      if (cell.is_string())
        m.at(i, c) = parse_gaussian(cell.get<std::string>());
      else if (cell.is_number_integer())
        m.at(i, c) = GaussianRational(static_cast<long>(cell.get<long long>()));
      else
        throw ParseError("matrix entries must be exact strings or integers");
    }
  }
  return m;
}

nlohmann::json matrix_to_json(const SquareMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(to_string(a.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace adorb
