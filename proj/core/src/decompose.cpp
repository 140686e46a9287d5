#include <Eigen/Dense>

#include "apolar/waring.hpp"

namespace apolar {

namespace {

using Cplx = std::complex<double>;

Scalar factorial(unsigned k) {
  Scalar out(1);
  for (unsigned i = 2; i <= k; ++i) out *= Scalar(static_cast<long>(i));
  return out;
}

// Coefficient of z^alpha in (p . z)^d, without the p-power: d! / alpha!.
Scalar multinomial(const Monomial& alpha, unsigned d) {
  Scalar den(1);
  for (std::size_t v = 0; v < alpha.size(); ++v) den *= factorial(alpha[v]);
  return factorial(d) / den;
}

}  // namespace

WaringDecomposition solve_coefficients(const PointSet& points, const Polynomial& f) {
  if (!f.is_homogeneous()) throw Error(Errc::kNotHomogeneous, "the form must be homogeneous");
  if (points.alphabet() != f.alphabet()) throw Error(Errc::kAlphabetMismatch, "points and form use different alphabets");
  if (points.empty()) throw Error(Errc::kInvalidArgument, "empty point set");
  unsigned d = static_cast<unsigned>(*f.homogeneous_degree());
  std::size_t nv = f.alphabet().size();
  std::vector<Monomial> monos = monomials_of_degree(nv, d);
  std::size_t rows = monos.size(), cols = points.size();

  WaringDecomposition out;
  out.alphabet = f.alphabet();
  out.degree = static_cast<int>(d);
  out.exact = points.is_exact();

  if (out.exact) {
    ScalarMatrix a(rows, cols);
    std::vector<Scalar> b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      Scalar mc = multinomial(monos[r], d);
      for (std::size_t c = 0; c < cols; ++c) {
        Scalar v = mc;
        const auto& p = points.points()[c].coords();
        for (std::size_t k = 0; k < nv; ++k) {
          if (monos[r][k]) v *= p[k].pow(monos[r][k]);
        }
        a(r, c) = v;
      }
      b[r] = f.coefficient(monos[r]);
    }
    LinearSolution sol = solve(a, b);
    out.unique = sol.unique;
    for (std::size_t c = 0; c < cols; ++c) {
      if (sol.x[c].is_zero()) continue;
      out.terms.push_back({sol.x[c], sol.x[c].to_complex(), points.points()[c]});
    }
    out.residual = 0;
    return out;
  }

  Eigen::MatrixXcd a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  Eigen::VectorXcd b(static_cast<Eigen::Index>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    double mc = multinomial(monos[r], d).to_complex().real();
    for (std::size_t c = 0; c < cols; ++c) {
      Cplx v = mc;
      const auto& p = points.points()[c].numeric();
      for (std::size_t k = 0; k < nv; ++k) {
        for (unsigned e = 0; e < monos[r][k]; ++e) v *= p[k];
      }
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
    b(static_cast<Eigen::Index>(r)) = f.coefficient(monos[r]).to_complex();
  }
  auto cod = a.completeOrthogonalDecomposition();
  Eigen::VectorXcd x = cod.solve(b);
  out.unique = cod.rank() == static_cast<Eigen::Index>(cols);
  out.residual = (a * x - b).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  if (out.residual > 1e-6 * scale) {
    throw Error(Errc::kInconsistentSystem, "the form is not a combination of the given powers (residual " +
                                               std::to_string(out.residual) + ")");
  }
  for (std::size_t c = 0; c < cols; ++c) {
    Cplx v = x(static_cast<Eigen::Index>(c));
    if (std::abs(v) < 1e-12) continue;
    out.terms.push_back({Scalar(), v, points.points()[c]});
  }
  return out;
}

Polynomial expand_decomposition(const WaringDecomposition& d) {
  if (!d.exact) throw Error(Errc::kInvalidArgument, "exact expansion needs an exact decomposition");
  Polynomial sum(d.alphabet, Side::kForm);
  for (const auto& t : d.terms) {
    Polynomial l(d.alphabet, Side::kForm);
    const auto& p = t.point.coords();
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!p[k].is_zero()) l += Polynomial::variable(d.alphabet, Side::kForm, k) * p[k];
    }
    sum += l.pow(static_cast<unsigned>(d.degree)) * t.coef;
  }
  return sum;
}

ResidualReport verify_decomposition(const WaringDecomposition& d, const Polynomial& f, double tol) {
  if (f.alphabet() != d.alphabet) throw Error(Errc::kAlphabetMismatch, "decomposition and form use different alphabets");
  if (!f.is_homogeneous() || *f.homogeneous_degree() != d.degree) {
    throw Error(Errc::kDimensionMismatch, "decomposition degree does not match the form");
  }
  ResidualReport rep;
  rep.exact = d.exact;
  if (d.exact) {
    Polynomial diff = expand_decomposition(d) - f;
    double r = 0;
    for (const auto& t : diff.terms()) r = std::max(r, t.coef.abs());
    rep.residual = r;
    rep.passed = diff.is_zero();
    return rep;
  }
  unsigned deg = static_cast<unsigned>(d.degree);
  std::size_t nv = d.alphabet.size();
  double r = 0;
  for (const auto& mono : monomials_of_degree(nv, deg)) {
    double mc = multinomial(mono, deg).to_complex().real();
    Cplx acc = 0;
    for (const auto& t : d.terms) {
      Cplx v = t.coef_approx * mc;
      const auto& p = t.point.numeric();
      for (std::size_t k = 0; k < nv; ++k) {
        for (unsigned e = 0; e < mono[k]; ++e) v *= p[k];
      }
      acc += v;
    }
    r = std::max(r, std::abs(acc - f.coefficient(mono).to_complex()));
  }
  rep.residual = r;
  rep.passed = r < tol;
  return rep;
}

}  // namespace apolar
