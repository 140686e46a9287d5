#include <random>

#include "apolar/apolarity.hpp"
#include "apolar/waring.hpp"

namespace apolar {

namespace {

long hf_sum(const Ideal& quotient, const GroebnerOptions& opts, HilbertFunction* out) {
  HilbertFunction hf = hilbert_function_auto(quotient, opts);
  if (hf.stable_value && *hf.stable_value != 0) {
    throw Error(Errc::kPositiveDimensional, "(F^perp : I) + (t) is not artinian");
  }
  if (out) *out = hf;
  return hf.sum();
}

std::string join(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Polynomial random_combination(const Ideal& i, int e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(1, 17);
  Polynomial t(i.alphabet, Side::kOperator);
  for (const auto& g : i.generators) {
    if (g.homogeneous_degree() == e) t += g * Scalar(coef(rng));
  }
  return t;
}

}  // namespace

EcompTrace ecomp_lower_bound(const Polynomial& f, const Ideal& i, const Polynomial& t, const EcompOptions& opts) {
  const VarAlphabet& a = f.alphabet();
  if (i.alphabet != a || t.alphabet() != a) throw Error(Errc::kAlphabetMismatch, "F, I and t must share an alphabet");
  if (!f.is_homogeneous()) throw Error(Errc::kNotHomogeneous, "F must be homogeneous");
  if (!i.is_homogeneous() || i.is_zero()) throw Error(Errc::kNotHomogeneous, "I must be a nonzero homogeneous ideal");
  if (!t.is_homogeneous() || *t.homogeneous_degree() < 1) throw Error(Errc::kNotHomogeneous, "t must be homogeneous of positive degree");
  GroebnerBasis gi = buchberger(i, MonomialOrder::grevlex(a.size()), opts.groebner);
  if (!ideal_member(t, gi)) throw Error(Errc::kInvalidArgument, "t is not an element of I");

  EcompTrace tr;
  tr.t = t;
  tr.e = *t.homogeneous_degree();
  Ideal fperp = annihilator(f, opts.groebner);
  tr.colon_ideal = colon(fperp, i, opts.groebner);
  Ideal tideal(a, {t});

  if (opts.points_ideal) {
    if (opts.points_ideal->alphabet != a) throw Error(Errc::kAlphabetMismatch, "points ideal uses another alphabet");
    Ideal j = colon(*opts.points_ideal, i, opts.groebner);
    if (!ideal_equal(colon(j, tideal, opts.groebner), j, opts.groebner)) {
      throw Error(Errc::kZeroDivisor, "t is a zerodivisor modulo I(X) : I");
    }
    tr.nonzerodivisor_checked = true;
  } else {
    tr.notes.push_back("no points ideal supplied: nonzerodivisor condition not checked");
  }

  tr.quotient_ideal = ideal_sum(tr.colon_ideal, tideal).canonical();
  tr.sum = hf_sum(tr.quotient_ideal, opts.groebner, &tr.hf);
  tr.bound = (tr.sum + tr.e - 1) / tr.e;

  if (opts.check_genericity) {
    Polynomial t2 = random_combination(i, tr.e, opts.seed ^ 0x9e3779b97f4a7c15ull);
    if (t2.is_zero()) {
      tr.notes.push_back("no generator of degree e available for a second t");
    } else {
      HilbertFunction hf2;
      long s2 = hf_sum(ideal_sum(tr.colon_ideal, Ideal(a, {t2})), opts.groebner, &hf2);
      tr.genericity_checked = hf2.values == tr.hf.values;
      if (!tr.genericity_checked) {
        tr.notes.push_back("second t = " + t2.to_string(true) + " gives Hilbert function " + join(hf2.values) + " with sum " +
                           std::to_string(s2));
      }
    }
  }
  return tr;
}

EcompTrace ecomp_lower_bound(const FamilySpec& spec, const EcompOptions& opts) {
  spec.validate();
  VarAlphabet a = spec.alphabet();
  Polynomial f = family_form(spec);
  std::vector<Polynomial> ys;
  Polynomial t(a, Side::kOperator);
  for (int j = 0; j < a.n; ++j) {
    Polynomial y = Polynomial::variable(a, Side::kOperator, a.y(j));
    ys.push_back(y);
    t += y * Scalar(j + 1);
  }
  Ideal i(a, ys);
  EcompOptions o = opts;
  if (!o.points_ideal) o.points_ideal = construct_minimal_apolar(spec, opts.groebner);
  std::mt19937_64 rng(opts.seed);
  for (int attempt = 0;; ++attempt) {
    try {
      return ecomp_lower_bound(f, i, t, o);
    } catch (const Error& e) {
      if (e.code() != Errc::kZeroDivisor || attempt >= 8) throw;
      t = random_combination(i, 1, rng());
    }
  }
}

long bounded_compositions(int m, int s, const std::vector<int>& a) {
  if (m < 0 || static_cast<std::size_t>(m) > a.size()) throw Error(Errc::kInvalidArgument, "need m <= |a|");
  if (s < 0) return 0;
  std::vector<long> ways(static_cast<std::size_t>(s) + 1, 0);
  ways[0] = 1;
  for (int k = 0; k < m; ++k) {
    std::vector<long> next(ways.size(), 0);
    for (int total = 0; total <= s; ++total) {
      for (int l = 0; l <= a[static_cast<std::size_t>(k)] && l <= total; ++l) {
        next[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - l)];
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(s)];
}

std::vector<RecurrenceRow> compositions_recurrence(const FamilySpec& spec, const EcompTrace& trace) {
  if (spec.kind != FamilyKind::kMonomialPowerSum) {
    throw Error(Errc::kUnsupported, "the compositions recurrence applies to monomial_powersum");
  }
  int total = 0;
  for (int e : spec.a) total += e;
  std::vector<RecurrenceRow> rows;
  for (int l = 0; l <= total; ++l) {
    RecurrenceRow r;
    r.degree = l + 1;
    r.engine = trace.hf.at(l + 1);
    r.formula = bounded_compositions(spec.m, l, spec.a) * (spec.n - 1) + bounded_compositions(spec.m, l + 1, spec.a);
    rows.push_back(r);
  }
  return rows;
}

RankReport rank_bounds(const FamilySpec& spec, const GroebnerOptions& opts) {
  spec.validate();
  RankReport rep;
  rep.spec = spec;
  Ideal construction = construct_minimal_apolar(spec, opts);
  long upper = degree_of_points(construction, opts);
  if (upper != claimed_points(spec)) {
    throw Error(Errc::kCertificate, "construction has " + std::to_string(upper) + " points, expected " +
                                        std::to_string(claimed_points(spec)));
  }
  if (!is_apolar(construction, family_form(spec))) throw Error(Errc::kCertificate, "construction is not apolar to F");
  rep.upper = upper;
  rep.upper_provenance = "explicit apolar set of " + std::to_string(upper) + " points";
  rep.certificates["upper"] = "degree of the construction ideal " + std::to_string(upper) + ", apolar to F";

  EcompOptions eo;
  eo.points_ideal = construction;
  eo.groebner = opts;
  EcompTrace tr = ecomp_lower_bound(spec, eo);
  rep.certificates["lower"] = "Hilbert function " + join(tr.hf.values) + " of (F^perp : (Y)) + (" + tr.t.to_string(true) +
                              "), sum " + std::to_string(tr.sum);
  rep.lower = tr.bound;
  rep.lower_provenance = "e-computability with I = (Y1,...,Yn), e = 1";

  bool strict_family = spec.kind == FamilyKind::kGeneral || spec.kind == FamilyKind::kM3;
  if (strict_family && spec.n >= spec.m && spec.m >= 3 && tr.sum == static_cast<long>(spec.n) * (spec.m + 2)) {
    rep.lower_strict_over = tr.bound;
    rep.lower = tr.bound + 1;
    rep.lower_provenance = "strict inequality over the e-computability value n(m+2) for n >= m >= 3";
    rep.certificates["strict"] = "rank exceeds n(m+2) = " + std::to_string(tr.bound);
  }
  if (rep.lower == rep.upper) rep.exact = rep.lower;
  if (rep.lower > rep.upper) throw Error(Errc::kCertificate, "lower bound exceeds the upper bound");
  return rep;
}

}  // namespace apolar
