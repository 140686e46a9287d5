#include "apolar/apolarity.hpp"

#include <unordered_map>

namespace apolar {

namespace {

Polynomial vector_to_poly(const VarAlphabet& alphabet, const std::vector<Monomial>& basis, const std::vector<Scalar>& v) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!v[k].is_zero()) terms.push_back({basis[k], v[k]});
  }
  return Polynomial(alphabet, Side::kOperator, std::move(terms));
}

void require_form(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::kInvalidArgument, "annihilator of the zero form");
  if (!f.is_homogeneous()) throw Error(Errc::kNotHomogeneous, "form is not homogeneous");
  if (*f.homogeneous_degree() < 1) throw Error(Errc::kInvalidArgument, "form must have degree at least 1");
}

}  // namespace

CatalecticantSlice catalecticant(const Polynomial& f, int dprime) {
  require_form(f);
  int d = *f.homogeneous_degree();
  std::size_t nv = f.alphabet().size();
  CatalecticantSlice s;
  s.degree = dprime;
  s.col_basis = monomials_of_degree(nv, static_cast<unsigned>(dprime));
  if (dprime > d) {
    s.matrix = ScalarMatrix(0, s.col_basis.size());
    for (const auto& m : s.col_basis) s.kernel_basis.push_back(Polynomial::monomial(f.alphabet(), Side::kOperator, m));
    return s;
  }
  s.row_basis = monomials_of_degree(nv, static_cast<unsigned>(d - dprime));
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_index;
  for (std::size_t r = 0; r < s.row_basis.size(); ++r) row_index.emplace(s.row_basis[r], r);
  s.matrix = ScalarMatrix(s.row_basis.size(), s.col_basis.size());
  for (std::size_t c = 0; c < s.col_basis.size(); ++c) {
    Polynomial g = Polynomial::monomial(f.alphabet(), Side::kOperator, s.col_basis[c]);
    Polynomial image = apply_diff(g, f);
    for (const auto& t : image.terms()) s.matrix(row_index.at(t.mono), c) = t.coef;
  }
  ScalarMatrix ker = kernel(s.matrix);
  s.rank = s.col_basis.size() - ker.rows();
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    s.kernel_basis.push_back(vector_to_poly(f.alphabet(), s.col_basis, ker.row(k)));
  }
  return s;
}

Ideal annihilator(const Polynomial& f, const GroebnerOptions& opts) {
  require_form(f);
  int d = *f.homogeneous_degree();
  const VarAlphabet& alphabet = f.alphabet();
  std::size_t nv = alphabet.size();
  MonomialOrder order = MonomialOrder::grevlex(nv);
  std::vector<Polynomial> accepted;
  for (int dp = 1; dp <= d + 1; ++dp) {
    std::optional<GroebnerBasis> gb;
    if (!accepted.empty()) gb = buchberger(Ideal(alphabet, accepted), order, opts);
    if (dp == d + 1) {
      // Everything of degree d+1 is apolar; add what the lower part misses.
      for (const auto& m : monomials_of_degree(nv, static_cast<unsigned>(dp))) {
        bool covered = false;
        if (gb) {
          for (const auto& lm : gb->leading_monomials()) {
            if (lm.divides(m)) {
              covered = true;
              break;
            }
          }
        }
        if (!covered) accepted.push_back(Polynomial::monomial(alphabet, Side::kOperator, m));
      }
      break;
    }
    CatalecticantSlice s = catalecticant(f, dp);
    if (s.kernel_basis.empty()) continue;
    std::size_t missing = s.kernel_basis.size();
    if (gb) {
      // dim of the lower ideal in degree dp.
      HilbertFunction hf = hilbert_function(*gb, dp);
      std::size_t lower = s.col_basis.size() - static_cast<std::size_t>(hf.values[static_cast<std::size_t>(dp)]);
      missing -= lower;
    }
    IncrementalEchelon ech;
    for (const auto& g : s.kernel_basis) {
      if (ech.size() == missing) break;
      Polynomial nf = gb ? normal_form(g, *gb) : g;
      if (ech.insert(nf)) accepted.push_back(g.monic());
    }
  }
  return Ideal(alphabet, std::move(accepted)).canonical();
}

Ideal annihilator_closed_form(int m, int n) {
  if (m < 1) throw Error(Errc::kInvalidArgument, "closed form needs m >= 1");
  if (n < 2) throw Error(Errc::kInvalidArgument, "closed form needs n >= 2");
  VarAlphabet alphabet{m, n, 0};
  alphabet.validate();
  auto var = [&](std::size_t v) { return Polynomial::variable(alphabet, Side::kOperator, v); };
  std::vector<Polynomial> gens;
  if (m == 1) {
    gens.push_back(var(alphabet.x(0)).pow(3));
  } else {
    for (int i = 1; i < m; ++i) gens.push_back(var(alphabet.x(0)).pow(2) - var(alphabet.x(i)).pow(2));
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) gens.push_back(var(alphabet.x(i)) * var(alphabet.x(j)));
    }
  }
  for (int i = 1; i < n; ++i) gens.push_back(var(alphabet.y(0)).pow(2) - var(alphabet.y(i)).pow(2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) gens.push_back(var(alphabet.y(i)) * var(alphabet.y(j)));
  }
  return Ideal(alphabet, std::move(gens));
}

bool is_apolar(const Ideal& ideal, const Polynomial& f) {
  if (ideal.alphabet != f.alphabet()) throw Error(Errc::kAlphabetMismatch, "ideal and form use different alphabets");
  for (const auto& g : ideal.generators) {
    if (!apply_diff(g, f).is_zero()) return false;
  }
  return true;
}

Ideal perp_colon_linear(const Polynomial& f, const Polynomial& t, const GroebnerOptions& opts) {
  require_form(f);
  if (t.alphabet() != f.alphabet()) throw Error(Errc::kAlphabetMismatch, "operator and form use different alphabets");
  if (t.homogeneous_degree() != 1) throw Error(Errc::kInvalidArgument, "t must be a nonzero linear form");
  Polynomial tf = apply_diff(t, f);
  if (tf.is_zero()) throw Error(Errc::kInvalidArgument, "t annihilates F");
  Ideal direct = annihilator(tf, opts);
  Ideal via_colon = colon(annihilator(f, opts), Ideal(f.alphabet(), {t.with_side(Side::kOperator)}), opts);
  if (!ideal_equal(direct, via_colon, opts)) {
    throw Error(Errc::kRouteMismatch, "(t o F)^perp differs from F^perp : (t)");
  }
  return direct;
}

}  // namespace apolar
