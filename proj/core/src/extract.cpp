#include <algorithm>
#include <random>
#include <unordered_map>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "apolar/waring.hpp"

namespace apolar {

namespace {

using Cplx = std::complex<double>;

// The generators restricted to the carrier Y_i = 1, Y_j = 0 (j != i), as
// affine polynomials in X1..Xm.
Ideal carrier_ideal(const Ideal& ideal, int carrier) {
  const VarAlphabet& a = ideal.alphabet;
  VarAlphabet xa{a.m, 0, 0};
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      bool vanishes = false;
      for (int j = 0; j < a.n; ++j) {
        if (j != carrier && t.mono[a.y(j)] > 0) vanishes = true;
      }
      if (vanishes) continue;
      Monomial mono(static_cast<std::size_t>(a.m));
      for (int k = 0; k < a.m; ++k) mono.set(static_cast<std::size_t>(k), t.mono[a.x(k)]);
      terms.push_back({mono, t.coef});
    }
    Polynomial p(xa, Side::kOperator, std::move(terms));
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return Ideal(xa, std::move(gens));
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& g) {
  std::size_t nv = g.alphabet().size();
  auto is_standard = [&](const Monomial& m) {
    return std::none_of(g.leading_monomials().begin(), g.leading_monomials().end(),
                        [&](const Monomial& lm) { return lm.divides(m); });
  };
  std::vector<Monomial> out;
  std::vector<Monomial> layer;
  Monomial one(nv);
  if (is_standard(one)) layer.push_back(one);
  int guard = 0;
  while (!layer.empty()) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      for (std::size_t v = 0; v < nv; ++v) {
        Monomial c = m * Monomial::variable(nv, v);
        if (is_standard(c) && std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
      }
    }
    layer = std::move(next);
    if (++guard > 4096) throw Error(Errc::kPositiveDimensional, "carrier ideal has infinitely many standard monomials");
  }
  return out;
}

// Partial derivative of an affine polynomial.
Polynomial partial(const Polynomial& p, std::size_t v) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[v];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(v, e - 1);
    terms.push_back({m, t.coef * Scalar(static_cast<long>(e))});
  }
  return Polynomial(p.alphabet(), p.side(), std::move(terms));
}

// A few Gauss-Newton steps on the (overdetermined) carrier system.
ComplexVec refine(const Ideal& affine, ComplexVec x) {
  std::size_t nv = x.size();
  if (nv == 0) return x;
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : affine.generators) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < nv; ++v) row.push_back(partial(g, v));
    jac.push_back(std::move(row));
  }
  for (int it = 0; it < 4; ++it) {
    Eigen::MatrixXcd j(static_cast<Eigen::Index>(affine.generators.size()), static_cast<Eigen::Index>(nv));
    Eigen::VectorXcd r(static_cast<Eigen::Index>(affine.generators.size()));
    for (std::size_t k = 0; k < affine.generators.size(); ++k) {
      r(static_cast<Eigen::Index>(k)) = affine.generators[k].evaluate(std::span<const Cplx>(x));
      for (std::size_t v = 0; v < nv; ++v) {
        j(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(v)) = jac[k][v].evaluate(std::span<const Cplx>(x));
      }
    }
    if (r.norm() < 1e-15) break;
    Eigen::VectorXcd dx = j.completeOrthogonalDecomposition().solve(r);
    for (std::size_t v = 0; v < nv; ++v) x[v] -= dx(static_cast<Eigen::Index>(v));
  }
  return x;
}

Eigen::MatrixXcd to_eigen(const ScalarMatrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
  }
  return out;
}

std::optional<std::vector<Scalar>> snap(const ComplexVec& v) {
  std::vector<Scalar> out;
  for (const auto& z : v) {
    auto s = rationalize(z, 1000, 1e-8);
    if (!s) return std::nullopt;
    out.push_back(*s);
  }
  return out;
}

bool lex_less(const ComplexVec& a, const ComplexVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    double ar = std::round(a[k].real() * 1e6), br = std::round(b[k].real() * 1e6);
    if (ar != br) return ar < br;
    double ai = std::round(a[k].imag() * 1e6), bi = std::round(b[k].imag() * 1e6);
    if (ai != bi) return ai < bi;
  }
  return false;
}

struct CarrierPoints {
  CarrierCertificate cert;
  std::vector<ComplexVec> affine;  // X-coordinates of each point
  Ideal system;
};

CarrierPoints solve_carrier(const Ideal& ideal, int carrier, const GroebnerOptions& opts) {
  CarrierPoints out;
  out.cert.carrier = carrier + 1;
  out.system = carrier_ideal(ideal, carrier);
  const VarAlphabet& xa = out.system.alphabet;
  std::size_t nv = xa.size();
  GroebnerBasis g = buchberger(out.system, MonomialOrder::grevlex(nv), opts);
  if (g.is_unit()) {
    out.cert.univariate = "1";
    out.cert.squarefree = true;
    return out;
  }
  if (krull_dimension(g) != 0) {
    throw Error(Errc::kPositiveDimensional, "carrier " + std::to_string(carrier + 1) + " meets the ideal in a positive-dimensional set");
  }
  std::vector<Monomial> basis = standard_monomials(g);
  std::size_t dim = basis.size();
  out.cert.points = static_cast<long>(dim);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < dim; ++k) index.emplace(basis[k], k);

  std::vector<ScalarMatrix> mult;
  for (std::size_t v = 0; v < nv; ++v) {
    ScalarMatrix mv(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      Polynomial prod = Polynomial::monomial(xa, Side::kOperator, basis[c] * Monomial::variable(nv, v));
      Polynomial nf = normal_form(prod, g);
      for (const auto& t : nf.terms()) mv(index.at(t.mono), c) = t.coef;
    }
    mult.push_back(std::move(mv));
  }

  std::mt19937_64 rng(0x5eedull + static_cast<std::uint64_t>(carrier));
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<long> weights(nv);
  for (std::size_t v = 0; v < nv; ++v) weights[v] = static_cast<long>(v + 1);
  ScalarMatrix mu;
  bool found = false;
  for (int attempt = 0; attempt < 16 && !found; ++attempt) {
    if (attempt > 0) {
      for (auto& w : weights) w = coef(rng);
    }
    mu = ScalarMatrix(dim, dim);
    Polynomial form(xa, Side::kOperator);
    for (std::size_t v = 0; v < nv; ++v) {
      if (weights[v] == 0) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) mu(i, j) += mult[v](i, j) * Scalar(weights[v]);
      }
      form += Polynomial::variable(xa, Side::kOperator, v) * Scalar(weights[v]);
    }
    UniPoly chi = charpoly(mu);
    if (is_squarefree(chi)) {
      found = true;
      out.cert.univariate = chi.to_string("z");
      out.cert.separating_form = form.to_string(true);
      out.cert.squarefree = true;
    }
  }
  if (!found) {
    throw Error(Errc::kCertificate, "no separating linear form with squarefree characteristic polynomial on carrier " +
                                        std::to_string(carrier + 1));
  }

  // Left eigenvectors of M_u are common eigenvectors of every M_v.
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(mu).transpose());
  std::vector<Eigen::MatrixXcd> mult_c;
  for (const auto& m : mult) mult_c.push_back(to_eigen(m));
  for (Eigen::Index e = 0; e < static_cast<Eigen::Index>(dim); ++e) {
    Eigen::RowVectorXcd w = es.eigenvectors().col(e).transpose();
    Eigen::Index j0 = 0;
    w.cwiseAbs().maxCoeff(&j0);
    ComplexVec x(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      Eigen::RowVectorXcd wv = w * mult_c[v];
      x[v] = wv(j0) / w(j0);
    }
    out.affine.push_back(refine(out.system, std::move(x)));
  }
  std::sort(out.affine.begin(), out.affine.end(), lex_less);
  return out;
}

}  // namespace

Extraction extract_points(const Ideal& ideal, const FamilySpec& spec, PointMode mode, const GroebnerOptions& opts) {
  const VarAlphabet& a = ideal.alphabet;
  if (a != spec.alphabet()) throw Error(Errc::kAlphabetMismatch, "ideal does not use the family alphabet");
  if (!ideal.is_homogeneous()) throw Error(Errc::kNotHomogeneous, "point extraction needs a homogeneous ideal");
  Extraction ex;
  DistinctnessCertificate& cert = ex.certificate;

  GroebnerBasis g = buchberger(ideal, MonomialOrder::grevlex(a.size()), opts);
  cert.on_carriers = true;
  for (int i = 0; i < a.n; ++i) {
    for (int j = i + 1; j < a.n; ++j) {
      Polynomial yy = Polynomial::variable(a, Side::kOperator, a.y(i)) * Polynomial::variable(a, Side::kOperator, a.y(j));
      if (!ideal_member(yy, g)) cert.on_carriers = false;
    }
  }
  if (!cert.on_carriers) throw Error(Errc::kCertificate, "the ideal does not contain every Y_i Y_j, points are not on the carriers");

  std::vector<Polynomial> ys;
  for (int j = 0; j < a.n; ++j) ys.push_back(Polynomial::variable(a, Side::kOperator, a.y(j)));
  GroebnerBasis at_inf = buchberger(ideal_sum(ideal, Ideal(a, ys)), MonomialOrder::grevlex(a.size()), opts);
  cert.no_points_at_infinity = krull_dimension(at_inf) <= 0;
  cert.degree = degree_of_points(ideal, opts);

  PointSet points(a);
  bool all_exact = mode == PointMode::kExact;
  std::vector<ProjPoint> collected;
  long total = 0;
  bool squarefree = true;
  for (int i = 0; i < a.n; ++i) {
    CarrierPoints cp = solve_carrier(ideal, i, opts);
    total += cp.cert.points;
    squarefree = squarefree && cp.cert.squarefree;
    for (const auto& x : cp.affine) {
      ComplexVec full(a.size(), Cplx(0, 0));
      for (int k = 0; k < a.m; ++k) full[a.x(k)] = x[static_cast<std::size_t>(k)];
      full[a.y(i)] = 1.0;
      if (all_exact) {
        auto ex_coords = snap(full);
        bool ok = ex_coords.has_value();
        if (ok) {
          for (const auto& gen : ideal.generators) {
            if (!gen.evaluate(std::span<const Scalar>(*ex_coords)).is_zero()) {
              ok = false;
              break;
            }
          }
        }
        if (ok) {
          collected.push_back(ProjPoint::exact(std::move(*ex_coords)));
          continue;
        }
        all_exact = false;
      }
      collected.push_back(ProjPoint::approx(std::move(full)));
    }
    cert.carriers.push_back(std::move(cp.cert));
  }
  for (auto& p : collected) {
    points.add(all_exact ? std::move(p) : ProjPoint::approx(p.numeric()));
  }
  ex.exact = all_exact && !points.empty();
  ex.points = std::move(points);
  cert.passed = cert.on_carriers && cert.no_points_at_infinity && squarefree && total == cert.degree &&
                static_cast<long>(ex.points.size()) == cert.degree;
  if (!cert.passed) {
    throw Error(Errc::kCertificate, "distinctness certificate failed: " + std::to_string(ex.points.size()) +
                                        " distinct points against degree " + std::to_string(cert.degree));
  }
  return ex;
}

Extraction family_points(const FamilySpec& spec, PointMode mode, const GroebnerOptions& opts) {
  return extract_points(construct_minimal_apolar(spec, opts), spec, mode, opts);
}

}  // namespace apolar
