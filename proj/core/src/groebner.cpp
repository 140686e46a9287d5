#include "apolar/groebner.hpp"

#include <algorithm>
#include <atomic>

namespace apolar {

namespace {

std::atomic<unsigned> g_degree_cap{20};

using TermVec = std::vector<Term>;

struct Engine {
  const MonomialOrder& order;
  std::vector<unsigned> weights;

  unsigned wdeg(const Monomial& m) const {
    unsigned d = 0;
    for (std::size_t v = 0; v < m.size(); ++v) d += weights[v] * m[v];
    return d;
  }

  TermVec sorted(const Polynomial& p) const {
    TermVec t = p.terms();
    std::sort(t.begin(), t.end(), [this](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return t;
  }

  void make_monic(TermVec& p) const {
    if (p.empty() || p.front().coef.is_one()) return;
    Scalar inv = p.front().coef.inverse();
    for (auto& t : p) t.coef *= inv;
  }

  // a[from..] - c * q * b[1..], keeping the order.
  TermVec sub_mul(const TermVec& a, std::size_t from, const Scalar& c, const Monomial& q, const TermVec& b) const {
    TermVec out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 1;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Monomial bm = b[j].mono * q;
      if (i == a.size()) {
        out.push_back({bm, -(c * b[j].coef)});
        ++j;
        continue;
      }
      int cmp = order.compare(a[i].mono, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({bm, -(c * b[j].coef)});
        ++j;
      } else {
        Scalar s = a[i].coef - c * b[j].coef;
        if (!s.is_zero()) out.push_back({bm, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }
};

struct Reducer {
  const Engine& eng;
  const std::vector<TermVec>& polys;
  std::vector<std::size_t> active;
  std::vector<std::uint32_t> masks;

  Reducer(const Engine& e, const std::vector<TermVec>& p) : eng(e), polys(p) {}

  void add(std::size_t idx) {
    active.push_back(idx);
    masks.push_back(polys[idx].front().mono.support_mask());
  }

  void remove_if(const std::vector<bool>& dead) {
    std::vector<std::size_t> a;
    std::vector<std::uint32_t> m;
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (!dead[active[k]]) {
        a.push_back(active[k]);
        m.push_back(masks[k]);
      }
    }
    active = std::move(a);
    masks = std::move(m);
  }

  const TermVec* divisor(const Monomial& mono, std::size_t skip = SIZE_MAX) const {
    std::uint32_t mm = mono.support_mask();
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (active[k] == skip || (masks[k] & ~mm) != 0) continue;
      const TermVec& g = polys[active[k]];
      if (g.front().mono.divides(mono)) return &g;
    }
    return nullptr;
  }

  // Full reduction; generators are monic.
  TermVec reduce(TermVec p, std::size_t skip = SIZE_MAX) const {
    TermVec result;
    std::size_t start = 0;
    while (start < p.size()) {
      const TermVec* g = divisor(p[start].mono, skip);
      if (g == nullptr) {
        result.push_back(std::move(p[start]));
        ++start;
        continue;
      }
      Monomial q = p[start].mono / g->front().mono;
      Scalar c = p[start].coef;
      p = eng.sub_mul(p, start + 1, c, q, *g);
      start = 0;
    }
    return result;
  }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

}  // namespace

unsigned default_degree_cap() { return g_degree_cap.load(); }
void set_default_degree_cap(unsigned cap) { g_degree_cap.store(cap); }

Ideal::Ideal(VarAlphabet a, std::vector<Polynomial> gens) : alphabet(a) {
  for (auto& g : gens) {
    if (g.alphabet() != a) throw Error(Errc::kAlphabetMismatch, "generator alphabet differs from ideal alphabet");
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::canonical() const {
  Ideal out = *this;
  for (auto& g : out.generators) g = g.monic();
  std::sort(out.generators.begin(), out.generators.end(), [](const Polynomial& a, const Polynomial& b) {
    int c = lex_compare(a.lex_leading().mono, b.lex_leading().mono);
    if (c != 0) return c > 0;
    return a.to_string(true) < b.to_string(true);
  });
  return out;
}

GroebnerBasis::GroebnerBasis(VarAlphabet alphabet, MonomialOrder order, std::vector<std::vector<Term>> sorted, Side side)
    : alphabet_(alphabet), order_(std::move(order)), sorted_(std::move(sorted)) {
  std::sort(sorted_.begin(), sorted_.end(), [this](const TermVec& a, const TermVec& b) {
    return order_.greater(a.front().mono, b.front().mono);
  });
  for (const auto& t : sorted_) {
    leading_.push_back(t.front().mono);
    basis_.emplace_back(alphabet_, side, t);
  }
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
}

int GroebnerBasis::max_degree() const {
  int d = 0;
  for (const auto& p : basis_) d = std::max(d, p.degree());
  return d;
}

namespace {

std::vector<unsigned> resolve_weights(const VarAlphabet& alphabet, const GroebnerOptions& opts) {
  if (!opts.weights.empty()) {
    if (opts.weights.size() != alphabet.size()) throw Error(Errc::kDimensionMismatch, "weight vector length mismatch");
    return opts.weights;
  }
  std::vector<unsigned> w(alphabet.size(), 1);
  for (std::size_t v = 0; v < alphabet.size(); ++v) {
    if (alphabet.is_aux(v)) w[v] = 0;
  }
  return w;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& opts) {
  const VarAlphabet& alphabet = ideal.alphabet;
  if (order.num_vars() != alphabet.size()) throw Error(Errc::kDimensionMismatch, "order does not match alphabet size");
  Engine eng{order, resolve_weights(alphabet, opts)};
  Side side = ideal.side();

  std::vector<TermVec> polys;
  std::vector<unsigned> sugar;
  std::vector<bool> dead;
  Reducer red(eng, polys);
  std::vector<Pair> pairs;

  auto check_cap = [&](unsigned d) {
    if (d > opts.max_degree) {
      throw Error(Errc::kDegreeCap, "Groebner computation exceeded degree cap " + std::to_string(opts.max_degree));
    }
  };

  // Gebauer-Moeller update with a new basis element h.
  auto update = [&](TermVec h, unsigned s) {
    std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    sugar.push_back(s);
    dead.push_back(false);
    const Monomial& lh = polys[hi].front().mono;

    std::vector<Pair> cand;
    for (std::size_t g : red.active) {
      const Monomial& lg = polys[g].front().mono;
      Monomial l = lh.lcm(lg);
      unsigned sg = std::max(sugar[g] + eng.wdeg(l) - eng.wdeg(lg), s + eng.wdeg(l) - eng.wdeg(lh));
      cand.push_back({g, hi, l, sg});
    }
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const Monomial& la = polys[cand[a].i].front().mono;
      if (la.coprime(lh)) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) && (cand[b].lcm != cand[a].lcm || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      const Monomial& la = polys[cand[a].i].front().mono;
      if (la.coprime(lh)) continue;
      fresh.push_back(cand[a]);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && polys[p.i].front().mono.lcm(lh) != p.lcm &&
                  polys[p.j].front().mono.lcm(lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (auto& p : fresh) pairs.push_back(std::move(p));

    for (std::size_t g : red.active) {
      if (lh.divides(polys[g].front().mono)) dead[g] = true;
    }
    red.remove_if(dead);
    red.add(hi);
  };

  std::vector<std::pair<TermVec, unsigned>> inputs;
  for (const auto& g : ideal.generators) {
    if (g.alphabet() != alphabet) throw Error(Errc::kAlphabetMismatch, "generator alphabet mismatch");
    TermVec t = eng.sorted(g);
    unsigned s = 0;
    for (const auto& term : t) s = std::max(s, eng.wdeg(term.mono));
    inputs.emplace_back(std::move(t), s);
  }
  std::stable_sort(inputs.begin(), inputs.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return order.compare(a.first.front().mono, b.first.front().mono) < 0;
  });
  for (auto& [t, s] : inputs) {
    check_cap(s);
    TermVec h = red.reduce(std::move(t));
    if (h.empty()) continue;
    eng.make_monic(h);
    update(std::move(h), s);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i))) best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    check_cap(p.sugar);
    const TermVec& f = polys[p.i];
    const TermVec& g = polys[p.j];
    // S-polynomial: (l/lf) f - (l/lg) g with monic f, g.
    Monomial qf = p.lcm / f.front().mono;
    Monomial qg = p.lcm / g.front().mono;
    TermVec left;
    left.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) left.push_back({f[k].mono * qf, f[k].coef});
    TermVec s = eng.sub_mul(left, 0, Scalar(1), qg, g);
    TermVec h = red.reduce(std::move(s));
    if (h.empty()) continue;
    eng.make_monic(h);
    update(std::move(h), p.sugar);
  }

  // Interreduce the minimal basis.
  std::vector<TermVec> final_polys;
  for (std::size_t g : red.active) {
    TermVec t = red.reduce(polys[g], g);
    eng.make_monic(t);
    final_polys.push_back(std::move(t));
  }
  return GroebnerBasis(alphabet, order, std::move(final_polys), side);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  if (f.alphabet() != g.alphabet()) throw Error(Errc::kAlphabetMismatch, "polynomial and basis alphabets differ");
  Engine eng{g.order(), std::vector<unsigned>(g.alphabet().size(), 1)};
  const auto& polys = g.sorted_terms();
  Reducer red(eng, polys);
  for (std::size_t k = 0; k < polys.size(); ++k) red.add(k);
  TermVec r = red.reduce(eng.sorted(f));
  return Polynomial(f.alphabet(), f.side(), std::move(r));
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& g) { return normal_form(f, g).is_zero(); }

Ideal initial_ideal(const GroebnerBasis& g) {
  std::vector<Polynomial> gens;
  Side side = g.basis().empty() ? Side::kOperator : g.basis().front().side();
  for (const auto& m : g.leading_monomials()) gens.push_back(Polynomial::monomial(g.alphabet(), side, m));
  return Ideal(g.alphabet(), std::move(gens)).canonical();
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(Errc::kInvalidArgument, "zero polynomial has no leading monomial");
  const Monomial* best = &f.terms().front().mono;
  for (const auto& t : f.terms()) {
    if (order.greater(t.mono, *best)) best = &t.mono;
  }
  return *best;
}

}  // namespace apolar
