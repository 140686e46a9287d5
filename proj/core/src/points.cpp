#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "apolar/geometry.hpp"

namespace apolar {

ProjPoint ProjPoint::exact(std::vector<Scalar> coords) {
  auto it = std::find_if(coords.begin(), coords.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == coords.end()) throw Error(Errc::kInvalidArgument, "the zero vector is not a projective point");
  Scalar inv = it->inverse();
  for (auto& c : coords) c *= inv;
  ProjPoint p;
  p.mode_ = PointMode::kExact;
  p.numeric_.reserve(coords.size());
  for (const auto& c : coords) p.numeric_.push_back(c.to_complex());
  p.exact_ = std::move(coords);
  return p;
}

ProjPoint ProjPoint::approx(ComplexVec coords, double zero_tol) {
  double mx = 0;
  for (const auto& c : coords) mx = std::max(mx, std::abs(c));
  if (mx == 0 || !std::isfinite(mx)) throw Error(Errc::kInvalidArgument, "the zero vector is not a projective point");
  for (auto& c : coords) {
    if (std::abs(c) < zero_tol * mx) c = 0;
  }
  auto it = std::find_if(coords.begin(), coords.end(), [](const std::complex<double>& c) { return c != 0.0; });
  std::complex<double> inv = 1.0 / *it;
  for (auto& c : coords) c *= inv;
  ProjPoint p;
  p.mode_ = PointMode::kApprox;
  p.numeric_ = std::move(coords);
  return p;
}

const std::vector<Scalar>& ProjPoint::coords() const {
  if (mode_ != PointMode::kExact) throw Error(Errc::kInvalidArgument, "point has no exact coordinates");
  return exact_;
}

bool ProjPoint::equals(const ProjPoint& o, double tol) const {
  if (size() != o.size()) return false;
  if (is_exact() && o.is_exact()) return exact_ == o.exact_;
  for (std::size_t k = 0; k < size(); ++k) {
    if (std::abs(numeric_[k] - o.numeric_[k]) >= tol) return false;
  }
  return true;
}

namespace {

std::string format_complex(std::complex<double> c) {
  char buf[80];
  double re = std::abs(c.real()) < 1e-15 ? 0.0 : c.real();
  double im = std::abs(c.imag()) < 1e-15 ? 0.0 : c.imag();
  if (im == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", re);
    return buf;
  }
  std::string imag;
  if (std::abs(std::abs(im) - 1.0) < 1e-15) {
    imag = "i";
  } else {
    std::snprintf(buf, sizeof buf, "%.12g*i", std::abs(im));
    imag = buf;
  }
  if (re == 0.0) return (im < 0 ? "-" : "") + imag;
  std::snprintf(buf, sizeof buf, "%.12g", re);
  return buf + std::string(im < 0 ? "-" : "+") + imag;
}

}  // namespace

std::string ProjPoint::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < size(); ++k) {
    if (k) out += ':';
    out += is_exact() ? exact_[k].to_string() : format_complex(numeric_[k]);
  }
  return out + "]";
}

bool PointSet::is_exact() const {
  return std::all_of(points_.begin(), points_.end(), [](const ProjPoint& p) { return p.is_exact(); });
}

bool PointSet::contains(const ProjPoint& p) const {
  return std::any_of(points_.begin(), points_.end(), [&](const ProjPoint& q) { return q.equals(p, tol_); });
}

bool PointSet::add(ProjPoint p) {
  if (p.size() != alphabet_.size()) throw Error(Errc::kDimensionMismatch, "point length does not match alphabet");
  if (contains(p)) return false;
  points_.push_back(std::move(p));
  return true;
}

PointSet PointSet::to_approx() const {
  PointSet out(alphabet_, tol_);
  for (const auto& p : points_) out.points_.push_back(ProjPoint::approx(p.numeric()));
  return out;
}

long numeric_rank(const std::vector<ComplexVec>& rows, double rel_tol) {
  if (rows.empty() || rows.front().empty()) return 0;
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double mx = 0;
    for (const auto& c : rows[i]) mx = std::max(mx, std::abs(c));
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = mx > 0 ? rows[i][j] / mx : rows[i][j];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  long r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > rel_tol * s(0)) ++r;
  }
  return r;
}

namespace {

Scalar eval_monomial(const Monomial& mono, const std::vector<Scalar>& p) {
  Scalar v(1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (mono[i] != 0) v *= p[i].pow(mono[i]);
  }
  return v;
}

std::complex<double> eval_monomial(const Monomial& mono, const ComplexVec& p) {
  std::complex<double> v = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (unsigned e = 0; e < mono[i]; ++e) v *= p[i];
  }
  return v;
}

ScalarMatrix evaluation_matrix(const PointSet& points, const std::vector<Monomial>& mons) {
  ScalarMatrix e(points.size(), mons.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points.points()[i].coords();
    for (std::size_t j = 0; j < mons.size(); ++j) e(i, j) = eval_monomial(mons[j], p);
  }
  return e;
}

}  // namespace

Ideal ideal_of_points(const PointSet& points, const GroebnerOptions& opts) {
  if (points.empty()) throw Error(Errc::kInvalidArgument, "ideal of the empty point set");
  if (!points.is_exact()) throw Error(Errc::kInvalidArgument, "ideal_of_points needs exact coordinates");
  const VarAlphabet& alphabet = points.alphabet();
  std::size_t nv = alphabet.size();
  std::size_t r = points.size();
  MonomialOrder order = MonomialOrder::grevlex(nv);
  std::vector<Polynomial> accepted;
  std::optional<int> reg;
  for (int d = 1; !reg || d <= *reg + 1; ++d) {
    if (d > static_cast<int>(opts.max_degree)) throw Error(Errc::kDegreeCap, "interpolation degree exceeded the cap");
    std::vector<Monomial> mons = monomials_of_degree(nv, static_cast<unsigned>(d));
    Rref red = rref(evaluation_matrix(points, mons));
    std::size_t rk = red.pivots.size();
    if (rk == r && !reg) reg = d;
    std::size_t dim_i = mons.size() - rk;
    if (dim_i == 0) continue;
    std::optional<GroebnerBasis> gb;
    std::size_t dim_l = 0;
    if (!accepted.empty()) {
      gb = buchberger(Ideal(alphabet, accepted), order, opts);
      dim_l = mons.size() - static_cast<std::size_t>(hilbert_function(*gb, d).values.back());
    }
    if (dim_l == dim_i) continue;
    std::size_t missing = dim_i - dim_l;
    std::vector<bool> is_pivot(mons.size(), false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    IncrementalEchelon ech;
    for (std::size_t f = 0; f < mons.size() && ech.size() < missing; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Term> terms{{mons[f], Scalar(1)}};
      for (std::size_t k = 0; k < red.pivots.size(); ++k) {
        if (!red.matrix(k, f).is_zero()) terms.push_back({mons[red.pivots[k]], -red.matrix(k, f)});
      }
      Polynomial g(alphabet, Side::kOperator, std::move(terms));
      Polynomial nf = gb ? normal_form(g, *gb) : g;
      if (ech.insert(nf)) accepted.push_back(g.monic());
    }
  }
  return Ideal(alphabet, std::move(accepted)).canonical();
}

std::vector<long> hf_of_points(const PointSet& points, int max_deg) {
  std::vector<long> hf;
  std::size_t nv = points.alphabet().size();
  for (int d = 0; d <= max_deg; ++d) {
    std::vector<Monomial> mons = monomials_of_degree(nv, static_cast<unsigned>(d));
    if (points.is_exact()) {
      hf.push_back(static_cast<long>(rank(evaluation_matrix(points, mons))));
    } else {
      std::vector<ComplexVec> rows;
      for (const auto& p : points.points()) {
        ComplexVec row;
        row.reserve(mons.size());
        for (const auto& m : mons) row.push_back(eval_monomial(m, p.numeric()));
        rows.push_back(std::move(row));
      }
      hf.push_back(numeric_rank(rows));
    }
  }
  return hf;
}

PointSet project_coordinates(const PointSet& points, const std::vector<std::size_t>& drop) {
  const VarAlphabet& a = points.alphabet();
  std::vector<bool> dropped(a.size(), false);
  for (std::size_t v : drop) {
    if (v >= a.size()) throw Error(Errc::kInvalidArgument, "dropped coordinate out of range");
    dropped[v] = true;
  }
  VarAlphabet out_alpha{0, 0, 0};
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (dropped[v]) continue;
    keep.push_back(v);
    if (a.is_x(v)) ++out_alpha.m;
    else if (a.is_y(v)) ++out_alpha.n;
    else ++out_alpha.aux;
  }
  if (keep.empty()) throw Error(Errc::kInvalidArgument, "projection drops every coordinate");
  PointSet out(out_alpha, points.tol());
  for (const auto& p : points.points()) {
    if (p.is_exact()) {
      std::vector<Scalar> c;
      for (std::size_t v : keep) c.push_back(p.coords()[v]);
      if (std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); })) {
        throw Error(Errc::kForbiddenPoint, "point " + p.to_string() + " is the projection center");
      }
      out.add(ProjPoint::exact(std::move(c)));
    } else {
      ComplexVec c;
      double mx = 0, all = 0;
      for (std::size_t v = 0; v < p.size(); ++v) all = std::max(all, std::abs(p.numeric()[v]));
      for (std::size_t v : keep) {
        c.push_back(p.numeric()[v]);
        mx = std::max(mx, std::abs(p.numeric()[v]));
      }
      if (mx < points.tol() * all) {
        throw Error(Errc::kForbiddenPoint, "point " + p.to_string() + " is the projection center");
      }
      out.add(ProjPoint::approx(std::move(c)));
    }
  }
  return out;
}

PointSet project_points(const PointSet& points, Block drop) {
  const VarAlphabet& a = points.alphabet();
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if ((drop == Block::kX && a.is_x(v)) || (drop == Block::kY && a.is_y(v))) vars.push_back(v);
  }
  return project_coordinates(points, vars);
}

PointSet transform_points(const PointSet& points, const ScalarMatrix& m) {
  std::size_t nv = points.alphabet().size();
  if (m.rows() != nv || m.cols() != nv) throw Error(Errc::kDimensionMismatch, "transform must be square of alphabet size");
  PointSet out(points.alphabet(), points.tol());
  for (const auto& p : points.points()) {
    if (p.is_exact()) {
      out.add(ProjPoint::exact(m * p.coords()));
    } else {
      ComplexVec c(nv);
      for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = 0; j < nv; ++j) c[i] += m(i, j).to_complex() * p.numeric()[j];
      }
      out.add(ProjPoint::approx(std::move(c)));
    }
  }
  return out;
}

PointSet transform_points(const PointSet& points, const std::vector<ComplexVec>& m) {
  std::size_t nv = points.alphabet().size();
  if (m.size() != nv) throw Error(Errc::kDimensionMismatch, "transform must be square of alphabet size");
  PointSet out(points.alphabet(), points.tol());
  for (const auto& p : points.points()) {
    ComplexVec c(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      if (m[i].size() != nv) throw Error(Errc::kDimensionMismatch, "transform must be square of alphabet size");
      for (std::size_t j = 0; j < nv; ++j) c[i] += m[i][j] * p.numeric()[j];
    }
    out.add(ProjPoint::approx(std::move(c)));
  }
  return out;
}

Ideal transform_ideal(const Ideal& ideal, const ScalarMatrix& m) {
  ScalarMatrix inv = inverse(m);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(linear_substitute(g, inv));
  return Ideal(ideal.alphabet, std::move(gens));
}

ScalarMatrix block_diag(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

}  // namespace apolar
