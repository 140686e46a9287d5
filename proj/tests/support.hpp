#pragma once

#include <map>
#include <random>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/waring.hpp"

namespace testing {

using namespace apolar;

inline Scalar rand_scalar(std::mt19937_64& rng, bool gaussian = true) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  Scalar s = Scalar::rational(num(rng), den(rng));
  if (gaussian) s += Scalar::rational(num(rng), den(rng)) * Scalar::imaginary_unit();
  return s;
}

inline Polynomial rand_homogeneous(std::mt19937_64& rng, const VarAlphabet& a, unsigned d, Side side, int terms = 5) {
  std::vector<Monomial> monos = monomials_of_degree(a.size(), d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  Polynomial p(a, side);
  for (int k = 0; k < terms; ++k) p += Polynomial::monomial(a, side, monos[pick(rng)], rand_scalar(rng));
  return p;
}

inline long falling(unsigned a, unsigned b) {
  long r = 1;
  for (unsigned k = 0; k < b; ++k) r *= static_cast<long>(a - k);
  return r;
}

// Term-by-term differentiation: X^b o x^a = prod a!/(a-b)! x^(a-b).
inline Polynomial diff_oracle(const Polynomial& g, const Polynomial& f) {
  Polynomial out(f.alphabet(), Side::kForm);
  for (const auto& gt : g.terms()) {
    for (const auto& ft : f.terms()) {
      if (!gt.mono.divides(ft.mono)) continue;
      Scalar c = gt.coef * ft.coef;
      for (std::size_t v = 0; v < ft.mono.size(); ++v) c *= Scalar(falling(ft.mono[v], gt.mono[v]));
      out += Polynomial::monomial(f.alphabet(), Side::kForm, ft.mono / gt.mono, c);
    }
  }
  return out;
}

// Rank of coefficient vectors by plain fraction elimination.
inline long span_dimension(const std::vector<Polynomial>& polys) {
  std::map<std::vector<unsigned>, std::size_t> cols;
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) cols.emplace(t.mono.exponents(), cols.size());
  }
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : polys) {
    std::vector<Scalar> r(cols.size());
    for (const auto& t : p.terms()) r[cols[t.mono.exponents()]] = t.coef;
    rows.push_back(std::move(r));
  }
  long rank = 0;
  std::size_t nc = cols.size();
  for (std::size_t c = 0; c < nc && rank < static_cast<long>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Scalar f = rows[r][c] / pr[c];
      for (std::size_t k = c; k < nc; ++k) rows[r][k] -= f * pr[k];
    }
    ++rank;
  }
  return rank;
}

// HF(T/F^perp, d) as the dimension of the space of order-d derivatives.
inline long derivative_space(const Polynomial& f, unsigned d) {
  std::vector<Polynomial> ders;
  for (const auto& mono : monomials_of_degree(f.alphabet().size(), d)) {
    ders.push_back(diff_oracle(Polynomial::monomial(f.alphabet(), Side::kOperator, mono), f));
  }
  return span_dimension(ders);
}

// Number of degree-d monomials outside a monomial ideal.
inline long standard_count(const std::vector<Monomial>& gens, std::size_t nvars, unsigned d) {
  long count = 0;
  for (const auto& mono : monomials_of_degree(nvars, d)) {
    bool in = false;
    for (const auto& g : gens) in = in || g.divides(mono);
    if (!in) ++count;
  }
  return count;
}

inline Polynomial op(const std::string& s, const VarAlphabet& a) { return parse_poly(s, a, Side::kOperator); }
inline Polynomial form(const std::string& s, const VarAlphabet& a) { return parse_poly(s, a, Side::kForm); }

inline Ideal ideal(const VarAlphabet& a, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(op(g, a));
  return Ideal(a, std::move(out));
}

inline std::vector<std::string> strings(const Ideal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.canonical().generators) out.push_back(g.to_string(true));
  return out;
}

inline ProjPoint pt(std::initializer_list<Scalar> c) { return ProjPoint::exact(std::vector<Scalar>(c)); }

}  // namespace testing
