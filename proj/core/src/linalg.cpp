#include "apolar/linalg.hpp"

#include <algorithm>

namespace apolar {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return {};
  ScalarMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(Errc::kDimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Scalar> ScalarMatrix::row(std::size_t i) const {
  return std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Scalar> ScalarMatrix::column(std::size_t j) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::kDimensionMismatch, "matrix product shape mismatch");
  ScalarMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
      }
    }
  }
  return r;
}

std::vector<Scalar> ScalarMatrix::operator*(const std::vector<Scalar>& v) const {
  if (cols_ != v.size()) throw Error(Errc::kDimensionMismatch, "matrix-vector shape mismatch");
  std::vector<Scalar> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    }
  }
  return r;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::kDimensionMismatch, "matrix sum shape mismatch");
  ScalarMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::kDimensionMismatch, "matrix difference shape mismatch");
  ScalarMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

bool ScalarMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != Scalar(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Scalar ScalarMatrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Rref rref(ScalarMatrix m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const ScalarMatrix& m) { return rref(m).pivots.size(); }

ScalarMatrix kernel(const ScalarMatrix& m) {
  Rref red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.matrix(k, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return ScalarMatrix(0, m.cols());
  return rref(ScalarMatrix::from_rows(basis)).matrix;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::kDimensionMismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  ScalarMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  Rref red = rref(aug);
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) throw Error(Errc::kSingularMatrix, "matrix is singular");
  ScalarMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.matrix(i, n + j);
  }
  return inv;
}

Scalar determinant(ScalarMatrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::kDimensionMismatch, "determinant of a non-square matrix");
  std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

LinearSolution solve(const ScalarMatrix& a, const std::vector<Scalar>& b) {
  if (a.rows() != b.size()) throw Error(Errc::kDimensionMismatch, "right-hand side length mismatch");
  ScalarMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) {
    throw Error(Errc::kInconsistentSystem, "linear system is inconsistent");
  }
  LinearSolution sol;
  sol.x.assign(a.cols(), Scalar(0));
  for (std::size_t k = 0; k < red.pivots.size(); ++k) sol.x[red.pivots[k]] = red.matrix(k, a.cols());
  sol.unique = red.pivots.size() == a.cols();
  return sol;
}

Polynomial linear_substitute(const Polynomial& f, const ScalarMatrix& a) {
  const VarAlphabet& alpha = f.alphabet();
  std::size_t nv = alpha.size();
  if (a.rows() != nv || a.cols() != nv) throw Error(Errc::kDimensionMismatch, "substitution matrix must be square of alphabet size");
  if (determinant(a).is_zero()) throw Error(Errc::kSingularMatrix, "substitution matrix is singular");
  std::vector<Polynomial> forms;
  forms.reserve(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    Polynomial l(alpha, f.side());
    for (std::size_t j = 0; j < nv; ++j) {
      if (!a(v, j).is_zero()) l += Polynomial::variable(alpha, f.side(), j) * a(v, j);
    }
    forms.push_back(std::move(l));
  }
  std::vector<std::vector<Polynomial>> powers(nv);
  auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(alpha, f.side(), Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * forms[v]);
    return cache[e];
  };
  Polynomial out(alpha, f.side());
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(alpha, f.side(), t.coef);
    for (std::size_t v = 0; v < nv; ++v) {
      if (t.mono[v] != 0) prod = prod * power_of(v, t.mono[v]);
    }
    out += prod;
  }
  return out.with_side(f.side());
}

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  Scalar inv = c_.back().inverse();
  std::vector<Scalar> d = c_;
  for (auto& x : d) x *= inv;
  return UniPoly(std::move(d));
}

Scalar UniPoly::evaluate(const Scalar& x) const {
  Scalar acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) terms.push_back({Monomial{static_cast<unsigned>(k)}, c_[k]});
  }
  std::string s = Polynomial(VarAlphabet{1, 0, 0}, Side::kForm, std::move(terms)).to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 2, "x1") == 0) {
      out += var;
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

UniPoly poly_rem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::kInvalidArgument, "polynomial division by zero");
  std::vector<Scalar> r = a.coeffs();
  int db = b.degree();
  Scalar inv = b.leading().inverse();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[static_cast<std::size_t>(k)].is_zero()) continue;
    Scalar q = r[static_cast<std::size_t>(k)] * inv;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  if (db >= 0 && r.size() > static_cast<std::size_t>(db)) r.resize(static_cast<std::size_t>(db));
  return UniPoly(std::move(r));
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

UniPoly charpoly(const ScalarMatrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::kDimensionMismatch, "charpoly of a non-square matrix");
  std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  ScalarMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    ScalarMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -(a * mk).trace() / Scalar(static_cast<long>(k));
  }
  return UniPoly(std::move(c));
}

Polynomial IncrementalEchelon::reduce(Polynomial v) const {
  std::size_t idx = 0;
  while (idx < v.num_terms()) {
    const Term& t = v.terms()[idx];
    auto it = rows_.find(t.mono);
    if (it == rows_.end()) {
      ++idx;
      continue;
    }
    Scalar c = t.coef;
    v -= it->second * c;
  }
  return v;
}

bool IncrementalEchelon::insert(const Polynomial& v) {
  Polynomial r = reduce(v);
  if (r.is_zero()) return false;
  r = r.monic();
  rows_.emplace(r.lex_leading().mono, std::move(r));
  return true;
}

}  // namespace apolar
