#include "apolar/io.hpp"

#include <algorithm>
#include <cstdio>

namespace apolar::io {

namespace {

std::string decimal(double v) {
  if (std::abs(v) < 1e-15) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_decimal(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return std::stod(j.get<std::string>());
  throw Error(Errc::kParse, "expected a number or decimal string");
}

json complex_pair(std::complex<double> c) { return json::array({decimal(c.real()), decimal(c.imag())}); }

}  // namespace

json to_json(const VarAlphabet& a) { return {{"m", a.m}, {"n", a.n}}; }

VarAlphabet alphabet_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n")) throw Error(Errc::kParse, "alphabet needs \"m\" and \"n\"");
  VarAlphabet a{j.at("m").get<int>(), j.at("n").get<int>(), 0};
  a.validate();
  return a;
}

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"exp", t.mono.exponents()}, {"re", t.coef.re().get_str()}, {"im", t.coef.im().get_str()}});
  }
  return {{"alphabet", to_json(p.alphabet())}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j, Side side) {
  if (j.is_string()) throw Error(Errc::kParse, "polynomial strings need an alphabet; use the object form");
  VarAlphabet a = alphabet_from_json(j.at("alphabet"));
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    std::vector<unsigned> exps = t.at("exp").get<std::vector<unsigned>>();
    if (exps.size() != a.size()) throw Error(Errc::kDimensionMismatch, "exponent vector length does not match the alphabet");
    Scalar c(mpq_class(t.value("re", std::string("0"))), mpq_class(t.value("im", std::string("0"))));
    terms.push_back({Monomial::from_exponents(exps), c});
  }
  return Polynomial(a, side, std::move(terms));
}

json to_json(const MonomialOrder& order, const VarAlphabet& a) {
  json vars = json::array();
  for (std::size_t v : order.priority()) vars.push_back(a.name(v, Side::kOperator));
  json out = {{"order", order.name()}, {"vars", vars}};
  if (order.kind() == OrderKind::kBlock) {
    json elim = json::array();
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (order.eliminated_mask() & (1u << v)) elim.push_back(a.name(v, Side::kOperator));
    }
    out["eliminate"] = elim;
  }
  return out;
}

json to_json(const Ideal& ideal, const MonomialOrder& order) {
  json out = to_json(ideal);
  out["order"] = to_json(order, ideal.alphabet);
  return out;
}

json to_json(const Ideal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string(true));
  return {{"alphabet", to_json(ideal.alphabet)}, {"generators", gens}};
}

Ideal ideal_from_json(const json& j, const VarAlphabet* alphabet) {
  VarAlphabet a;
  const json* gens = &j;
  if (j.is_object()) {
    if (j.contains("alphabet")) {
      a = alphabet_from_json(j.at("alphabet"));
    } else if (alphabet) {
      a = *alphabet;
    } else {
      throw Error(Errc::kParse, "ideal JSON needs an alphabet");
    }
    gens = &j.at("generators");
  } else if (alphabet) {
    a = *alphabet;
  } else {
    throw Error(Errc::kParse, "a bare generator list needs an alphabet");
  }
  if (!gens->is_array()) throw Error(Errc::kParse, "generators must be a list");
  std::vector<Polynomial> out;
  for (const auto& g : *gens) {
    Polynomial p = g.is_string() ? parse_poly(g.get<std::string>(), a, Side::kOperator) : polynomial_from_json(g, Side::kOperator);
    if (p.alphabet() != a) throw Error(Errc::kAlphabetMismatch, "generator alphabet differs from the ideal's");
    if (!p.is_zero()) out.push_back(p.with_side(Side::kOperator));
  }
  return Ideal(a, std::move(out));
}

json to_json(const HilbertFunction& hf) {
  json out = {{"values", hf.values}};
  if (hf.stable_value) out["stable"] = *hf.stable_value;
  if (hf.stabilized_at) out["from"] = *hf.stabilized_at;
  return out;
}

json to_json(const ProjPoint& p) {
  json coords = json::array();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.is_exact()) {
      coords.push_back(p.coords()[k].to_string());
    } else {
      coords.push_back(complex_pair(p.numeric()[k]));
    }
  }
  return coords;
}

ProjPoint point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::kParse, "a point is a nonempty coordinate list");
  bool exact = std::all_of(j.begin(), j.end(), [](const json& c) { return c.is_string() || c.is_number_integer(); });
  if (exact) {
    std::vector<Scalar> c;
    for (const auto& e : j) c.push_back(e.is_string() ? parse_scalar(e.get<std::string>()) : Scalar(e.get<long>()));
    return ProjPoint::exact(std::move(c));
  }
  ComplexVec c;
  for (const auto& e : j) {
    if (e.is_array() && e.size() == 2) {
      c.emplace_back(parse_decimal(e[0]), parse_decimal(e[1]));
    } else {
      c.emplace_back(parse_decimal(e), 0.0);
    }
  }
  return ProjPoint::approx(std::move(c));
}

json to_json(const PointSet& points) {
  json pts = json::array();
  for (const auto& p : points.points()) pts.push_back(to_json(p));
  return {{"mode", points.is_exact() ? "exact" : "approx"}, {"points", pts}};
}

PointSet pointset_from_json(const json& j, const VarAlphabet& alphabet) {
  const json& pts = j.is_object() ? j.at("points") : j;
  PointSet out(alphabet);
  for (const auto& p : pts) {
    ProjPoint q = point_from_json(p);
    if (q.size() != alphabet.size()) throw Error(Errc::kDimensionMismatch, "point length does not match the alphabet");
    out.add(std::move(q));
  }
  return out;
}

json to_json(const DistinctnessCertificate& c) {
  json carriers = json::array();
  for (const auto& k : c.carriers) {
    carriers.push_back({{"carrier", k.carrier},
                        {"points", k.points},
                        {"separating_form", k.separating_form},
                        {"charpoly", k.univariate},
                        {"squarefree", k.squarefree}});
  }
  return {{"passed", c.passed},
          {"degree", c.degree},
          {"on_carriers", c.on_carriers},
          {"no_points_at_infinity", c.no_points_at_infinity},
          {"carriers", carriers}};
}

json to_json(const Extraction& e) {
  json out = to_json(e.points);
  out["count"] = e.points.size();
  out["certificate"] = to_json(e.certificate);
  return out;
}

json to_json(const WaringDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    json coef = d.exact ? json(t.coef.to_string()) : complex_pair(t.coef_approx);
    terms.push_back({{"coefficient", coef}, {"linear_form", to_json(t.point)}});
  }
  return {{"alphabet", to_json(d.alphabet)}, {"degree", d.degree}, {"exact", d.exact},
          {"unique", d.unique}, {"residual", d.residual}, {"terms", terms}};
}

json to_json(const ResidualReport& r) { return {{"exact", r.exact}, {"residual", r.residual}, {"passed", r.passed}}; }

json to_json(const EcompTrace& t) {
  return {{"bound", t.bound},
          {"sum", t.sum},
          {"e", t.e},
          {"t", t.t.to_string(true)},
          {"hf", to_json(t.hf)},
          {"colon_ideal", to_json(t.colon_ideal)},
          {"nonzerodivisor_checked", t.nonzerodivisor_checked},
          {"genericity_checked", t.genericity_checked},
          {"notes", t.notes}};
}

json to_json(const FamilySpec& s) {
  json out = {{"family", s.kind_name()}, {"m", s.m}, {"n", s.n}};
  if (s.kind == FamilyKind::kM1 && s.variant) out["variant"] = true;
  if (s.kind == FamilyKind::kM2) {
    json a = json::array(), b = json::array();
    for (const auto& x : s.alpha) a.push_back(x.to_string());
    for (const auto& x : s.beta) b.push_back(x.to_string());
    out["alpha"] = a;
    out["beta"] = b;
  }
  if (s.kind == FamilyKind::kMonomialPowerSum) {
    out["a"] = s.a;
    out["b"] = s.b;
  }
  return out;
}

json to_json(const RankReport& r) {
  json out = to_json(r.spec);
  out["lower"] = r.lower;
  if (r.lower_strict_over) out["lower_strict_over"] = *r.lower_strict_over;
  out["upper"] = r.upper;
  if (r.exact) out["exact"] = *r.exact;
  out["lower_provenance"] = r.lower_provenance;
  out["upper_provenance"] = r.upper_provenance;
  json certs = json::object();
  for (const auto& [k, v] : r.certificates) certs[k] = v;
  out["certificates"] = certs;
  return out;
}

json to_json(const IncidenceReport& r) {
  json carriers = json::array();
  for (const auto& c : r.carriers) {
    json item = {{"name", c.name}, {"forms", c.forms}, {"count", c.count}};
    if (!c.line_counts.empty()) item["line_counts"] = c.line_counts;
    carriers.push_back(item);
  }
  return {{"family", r.family}, {"passed", r.passed}, {"carriers", carriers}, {"residual", r.residual}, {"violations", r.violations}};
}

json to_json(const Witness& w) {
  json out = to_json(w.points);
  out["count"] = w.points.size();
  out["base"] = w.base;
  out["exact"] = w.exact;
  out["contains_point"] = w.contains_point;
  out["apolar"] = w.apolar;
  out["residual"] = w.residual;
  return out;
}

json to_json(const Census& c) {
  json ratios = json::array();
  for (const auto& r : c.ratios) ratios.push_back(r.to_string());
  return {{"projected", c.projected}, {"predicted", c.predicted}, {"ratios", ratios}, {"even", c.even}, {"within_bound", c.within_bound}};
}

}  // namespace apolar::io
