#include <algorithm>
#include <map>

#include "apolar/groebner.hpp"
#include "apolar/linalg.hpp"

namespace apolar {

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.alphabet != b.alphabet) throw Error(Errc::kAlphabetMismatch, "ideal sum over different alphabets");
  std::vector<Polynomial> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return Ideal(a.alphabet, std::move(gens));
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::size_t>& keep, const GroebnerOptions& opts) {
  std::size_t nv = ideal.alphabet.size();
  std::vector<bool> kept(nv, false);
  for (std::size_t v : keep) {
    if (v >= nv) throw Error(Errc::kInvalidArgument, "kept variable out of range");
    kept[v] = true;
  }
  std::vector<std::size_t> eliminate;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!kept[v]) eliminate.push_back(v);
  }
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(nv, eliminate), opts);
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis()) {
    bool clean = std::none_of(eliminate.begin(), eliminate.end(), [&](std::size_t v) { return g.involves(v); });
    if (clean) gens.push_back(g);
  }
  return Ideal(ideal.alphabet, std::move(gens)).canonical();
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
  if (a.alphabet != b.alphabet) throw Error(Errc::kAlphabetMismatch, "intersection over different alphabets");
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  VarAlphabet wide = a.alphabet.with_aux(a.alphabet.aux + 1);
  std::size_t t = wide.size() - 1;
  Side side = a.side();
  Polynomial tv = Polynomial::variable(wide, side, t);
  Polynomial one_minus_t = Polynomial::constant(wide, side, Scalar(1)) - tv;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators) gens.push_back(tv * f.embed(wide));
  for (const auto& g : b.generators) gens.push_back(one_minus_t * g.embed(wide));
  GroebnerOptions o = opts;
  if (!o.weights.empty()) o.weights.push_back(0);
  GroebnerBasis gb = buchberger(Ideal(wide, std::move(gens)), MonomialOrder::block(wide.size(), {t}), o);
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis()) {
    if (!g.involves(t)) out.push_back(g.restrict_to(a.alphabet).with_side(side));
  }
  return Ideal(a.alphabet, std::move(out)).canonical();
}

Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
  if (g.is_zero()) throw Error(Errc::kInvalidArgument, "division by the zero polynomial");
  Polynomial rest = h;
  Polynomial quotient(h.alphabet(), h.side());
  const Term& lg = g.lex_leading();
  Scalar inv = lg.coef.inverse();
  while (!rest.is_zero()) {
    const Term& lt = rest.lex_leading();
    if (!lg.mono.divides(lt.mono)) throw Error(Errc::kInvalidArgument, "polynomial division is not exact");
    Monomial q = lt.mono / lg.mono;
    Scalar c = lt.coef * inv;
    quotient += Polynomial::monomial(h.alphabet(), h.side(), q, c);
    rest -= g.mul_monomial(q, c);
  }
  return quotient.with_side(h.side());
}

Ideal colon(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
  if (a.alphabet != b.alphabet) throw Error(Errc::kAlphabetMismatch, "colon over different alphabets");
  if (b.is_zero()) throw Error(Errc::kInvalidArgument, "colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : b.generators) {
    Ideal part;
    if (g.is_constant()) {
      part = a;
    } else {
      Ideal k = ideal_intersect(a, Ideal(a.alphabet, {g}), opts);
      std::vector<Polynomial> gens;
      for (const auto& h : k.generators) gens.push_back(exact_divide(h, g));
      part = Ideal(a.alphabet, std::move(gens));
    }
    acc = acc ? ideal_intersect(*acc, part, opts) : part;
  }
  return acc->canonical();
}

bool ideal_contains(const Ideal& b, const Ideal& a, const GroebnerOptions& opts) {
  if (a.alphabet != b.alphabet) throw Error(Errc::kAlphabetMismatch, "containment over different alphabets");
  GroebnerBasis gb = buchberger(b, MonomialOrder::grevlex(b.alphabet.size()), opts);
  return std::all_of(a.generators.begin(), a.generators.end(), [&](const Polynomial& f) { return ideal_member(f, gb); });
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
  if (a.alphabet != b.alphabet) return false;
  MonomialOrder order = MonomialOrder::grevlex(a.alphabet.size());
  GroebnerBasis ga = buchberger(a, order, opts);
  GroebnerBasis gb = buchberger(b, order, opts);
  return ga.basis() == gb.basis();
}

Ideal minimal_generators(const Ideal& ideal, const GroebnerOptions& opts) {
  if (!ideal.is_homogeneous()) throw Error(Errc::kNotHomogeneous, "minimal generators need a homogeneous ideal");
  std::map<int, std::vector<Polynomial>> by_degree;
  for (const auto& g : ideal.generators) by_degree[*g.homogeneous_degree()].push_back(g);
  std::vector<Polynomial> accepted;
  MonomialOrder order = MonomialOrder::grevlex(ideal.alphabet.size());
  for (auto& [d, cands] : by_degree) {
    std::optional<GroebnerBasis> gb;
    if (!accepted.empty()) gb = buchberger(Ideal(ideal.alphabet, accepted), order, opts);
    IncrementalEchelon ech;
    for (const auto& c : cands) {
      Polynomial nf = gb ? normal_form(c, *gb) : c;
      if (ech.insert(nf)) accepted.push_back(c);
    }
  }
  return Ideal(ideal.alphabet, std::move(accepted)).canonical();
}

}  // namespace apolar
