#include <algorithm>

#include "apolar/apolarity.hpp"
#include "apolar/waring.hpp"

namespace apolar {

namespace {

using Cplx = std::complex<double>;

double point_scale(const ProjPoint& p) {
  double mx = 0;
  for (const auto& z : p.numeric()) mx = std::max(mx, std::abs(z));
  return std::max(1.0, mx * mx);
}

// Value of a quadratic expression in the coordinates, exact when possible.
struct Quad {
  bool exact;
  Scalar value;
  Cplx approx;
  bool is_zero(double scale) const { return exact ? value.is_zero() : std::abs(approx) < 1e-9 * scale; }
};

Quad y_square_sum(const ProjPoint& p, const VarAlphabet& a) {
  Quad q{p.is_exact(), Scalar(), Cplx(0, 0)};
  for (int j = 0; j < a.n; ++j) {
    if (q.exact) q.value += p.coords()[a.y(j)] * p.coords()[a.y(j)];
    q.approx += p.numeric()[a.y(j)] * p.numeric()[a.y(j)];
  }
  return q;
}

Quad x_quadric(const ProjPoint& p, const VarAlphabet& a, bool squares) {
  Quad q{p.is_exact(), Scalar(), Cplx(0, 0)};
  std::size_t x1 = a.x(0), x2 = a.x(1);
  if (squares) {
    if (q.exact) q.value = p.coords()[x1] * p.coords()[x1] + p.coords()[x2] * p.coords()[x2];
    q.approx = p.numeric()[x1] * p.numeric()[x1] + p.numeric()[x2] * p.numeric()[x2];
  } else {
    if (q.exact) q.value = p.coords()[x1] * p.coords()[x2];
    q.approx = p.numeric()[x1] * p.numeric()[x2];
  }
  return q;
}

void check_point(const ProjPoint& p, const FamilySpec& spec) {
  if (p.size() != spec.alphabet().size()) {
    throw Error(Errc::kDimensionMismatch, "point has " + std::to_string(p.size()) + " coordinates, the family needs " +
                                              std::to_string(spec.alphabet().size()));
  }
}

// diag(head..., scale * N) as complex rows.
std::vector<ComplexVec> numeric_witness_matrix(const std::vector<Cplx>& head, Cplx scale, const std::vector<ComplexVec>& n) {
  std::size_t k = head.size(), dim = k + n.size();
  std::vector<ComplexVec> m(dim, ComplexVec(dim, Cplx(0, 0)));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = head[i];
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n.size(); ++j) m[k + i][k + j] = scale * n[i][j];
  }
  return m;
}

void finish_witness(Witness& w, const ProjPoint& p, const Polynomial& f, const FamilySpec& spec, double tol) {
  w.contains_point = w.points.contains(p);
  if (static_cast<long>(w.points.size()) != claimed_points(spec)) {
    throw Error(Errc::kCertificate, "witness set has " + std::to_string(w.points.size()) + " points, expected " +
                                        std::to_string(claimed_points(spec)));
  }
  try {
    WaringDecomposition d = solve_coefficients(w.points, f);
    ResidualReport r = verify_decomposition(d, f, tol);
    w.residual = r.residual;
    w.apolar = r.passed;
  } catch (const Error& e) {
    if (e.code() != Errc::kInconsistentSystem) throw;
    w.apolar = false;
    w.residual = 1;
  }
  if (w.exact && w.apolar) w.apolar = is_apolar(ideal_of_points(w.points), f);
}

}  // namespace

bool forbidden_member(const ProjPoint& p, const FamilySpec& spec, bool sum_of_squares) {
  check_point(p, spec);
  VarAlphabet a = spec.alphabet();
  double scale = point_scale(p);
  switch (spec.kind) {
    case FamilyKind::kM1:
      return y_square_sum(p, a).is_zero(scale);
    case FamilyKind::kM2:
      return x_quadric(p, a, sum_of_squares).is_zero(scale) || y_square_sum(p, a).is_zero(scale);
    default:
      throw Error(Errc::kUnsupported, "forbidden locus is known for m1 and m2 only");
  }
}

std::vector<ComplexVec> orthogonal_completion(const ComplexVec& v) {
  std::size_t n = v.size();
  if (n == 0) throw Error(Errc::kInvalidArgument, "empty vector");
  Cplx s = 0;
  for (const auto& z : v) s += z * z;
  if (std::abs(s - 1.0) > 1e-9) throw Error(Errc::kInvalidArgument, "orthogonal completion needs v^T v = 1");
  std::vector<ComplexVec> id(n, ComplexVec(n, Cplx(0, 0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  ComplexVec w(n);
  double dist = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = (i == 0 ? 1.0 : 0.0) - v[i];
    dist = std::max(dist, std::abs(w[i]));
  }
  if (dist < 1e-14) return id;
  double sign = 1;
  Cplx ww = 0;
  for (const auto& z : w) ww += z * z;
  if (std::abs(ww) < 1e-9) {
    for (std::size_t i = 0; i < n; ++i) w[i] = (i == 0 ? 1.0 : 0.0) + v[i];
    ww = 0;
    for (const auto& z : w) ww += z * z;
    sign = -1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) id[i][j] = sign * (id[i][j] - 2.0 * w[i] * w[j] / ww);
  }
  return id;
}

std::optional<ScalarMatrix> orthogonal_completion(const std::vector<Scalar>& v) {
  std::size_t n = v.size();
  if (n == 0) throw Error(Errc::kInvalidArgument, "empty vector");
  Scalar s;
  for (const auto& z : v) s += z * z;
  if (!s.is_one()) return std::nullopt;
  ScalarMatrix id = ScalarMatrix::identity(n);
  std::vector<Scalar> w(n);
  bool is_e1 = true;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = (i == 0 ? Scalar(1) : Scalar(0)) - v[i];
    if (!w[i].is_zero()) is_e1 = false;
  }
  if (is_e1) return id;
  Scalar sign(1);
  Scalar ww;
  for (const auto& z : w) ww += z * z;
  if (ww.is_zero()) {
    // v1 = 1 but v != e1: reflect along e1 + v and flip the sign.
    for (std::size_t i = 0; i < n; ++i) w[i] = (i == 0 ? Scalar(1) : Scalar(0)) + v[i];
    ww = Scalar();
    for (const auto& z : w) ww += z * z;
    sign = Scalar(-1);
    if (ww.is_zero()) return std::nullopt;
  }
  ScalarMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = sign * (id(i, j) - Scalar(2) * w[i] * w[j] / ww);
  }
  if (!is_orthogonal(h)) return std::nullopt;
  return h;
}

Witness waring_witness(const ProjPoint& p, const FamilySpec& spec, double tol) {
  spec.validate();
  check_point(p, spec);
  if (spec.kind != FamilyKind::kM1 && spec.kind != FamilyKind::kM2) {
    throw Error(Errc::kUnsupported, "witness sets are constructed for m1 and m2 only");
  }
  if (forbidden_member(p, spec)) throw Error(Errc::kForbiddenPoint, "point " + p.to_string() + " lies in the forbidden locus");
  VarAlphabet a = spec.alphabet();
  Polynomial f = family_form(spec);
  int n = a.n;
  Witness w;

  // Y-part c and its square sum.
  std::vector<Scalar> c_exact;
  ComplexVec c_num;
  Cplx s_num = 0;
  for (int j = 0; j < n; ++j) {
    c_num.push_back(p.numeric()[a.y(j)]);
    s_num += c_num.back() * c_num.back();
    if (p.is_exact()) c_exact.push_back(p.coords()[a.y(j)]);
  }
  Cplx root_num = std::sqrt(s_num);
  std::optional<Scalar> root;
  std::optional<ScalarMatrix> n_exact;
  if (p.is_exact()) {
    Scalar s;
    for (const auto& z : c_exact) s += z * z;
    root = exact_sqrt(s);
    if (root) {
      std::vector<Scalar> v;
      for (const auto& z : c_exact) v.push_back(z / *root);
      n_exact = orthogonal_completion(v);
    }
  }
  ComplexVec v_num;
  for (const auto& z : c_num) v_num.push_back(z / root_num);
  std::vector<ComplexVec> n_num = orthogonal_completion(v_num);

  Extraction base;
  std::vector<Scalar> head_exact;
  std::vector<Cplx> head_num;
  std::optional<Scalar> scale_exact;
  Cplx scale_num;
  if (spec.kind == FamilyKind::kM1) {
    Cplx x0 = p.numeric()[a.x(0)];
    bool on_hyperplane = p.is_exact() ? p.coords()[a.x(0)].is_zero() : std::abs(x0) < 1e-12;
    head_exact = {Scalar(1)};
    head_num = {1.0};
    if (on_hyperplane) {
      base = family_points(FamilySpec::m1(n), PointMode::kExact);
      w.base = "m1 construction through [0:1:0:...:0]";
      scale_exact = Scalar(1);
      scale_num = 1.0;
    } else {
      base = family_points(FamilySpec::m1(n, true), PointMode::kExact);
      w.base = "m1 variant construction through [1:1:0:...:0]";
      if (root) scale_exact = *root / p.coords()[a.x(0)];
      scale_num = root_num / x0;
    }
  } else {
    std::vector<Scalar> alpha(static_cast<std::size_t>(n - 1), Scalar(1));
    alpha.back() = Scalar(-(n - 1));
    base = family_points(FamilySpec::m2(n, alpha, alpha), PointMode::kExact);
    w.base = "m2 construction through [1:1:1:0:...:0]";
    if (p.is_exact()) head_exact = {p.coords()[a.x(0)], p.coords()[a.x(1)]};
    head_num = {p.numeric()[a.x(0)], p.numeric()[a.x(1)]};
    scale_exact = root;
    scale_num = root_num;
  }

  bool exact = base.exact && p.is_exact() && scale_exact && n_exact;
  if (exact) {
    ScalarMatrix scaled(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < scaled.rows(); ++i) {
      for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) = *scale_exact * (*n_exact)(i, j);
    }
    ScalarMatrix head(head_exact.size(), head_exact.size());
    for (std::size_t i = 0; i < head_exact.size(); ++i) head(i, i) = head_exact[i];
    w.points = transform_points(base.points, block_diag(head, scaled));
    w.exact = true;
  } else {
    w.points = transform_points(base.points, numeric_witness_matrix(head_num, scale_num, n_num));
    w.exact = false;
  }
  finish_witness(w, p, f, spec, tol);
  return w;
}

Census second_projection_census(const FamilySpec& spec, const GroebnerOptions& opts) {
  spec.validate();
  if (spec.kind != FamilyKind::kM2) throw Error(Errc::kUnsupported, "the projection census is defined for m2");
  Census c;
  Scalar sa, sb;
  for (std::size_t i = 0; i < spec.alpha.size(); ++i) {
    c.ratios.push_back(spec.alpha[i] / spec.beta[i]);
    sa += spec.alpha[i];
    sb += spec.beta[i];
  }
  c.ratios.push_back(sa / sb);
  std::vector<Scalar> distinct;
  for (const auto& r : c.ratios) {
    if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
  }
  c.predicted = 2 * static_cast<long>(distinct.size());
  Extraction ex = family_points(spec, PointMode::kApprox, opts);
  c.projected = static_cast<long>(project_points(ex.points, Block::kY).size());
  c.even = c.projected % 2 == 0;
  c.within_bound = c.projected <= 2L * spec.n;
  return c;
}

}  // namespace apolar
