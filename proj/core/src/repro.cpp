#include "apolar/repro.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "apolar/apolarity.hpp"

namespace apolar::repro {

using io::json;

namespace {

struct Ctx {
  ReproOptions opts;
  json values = json::object();
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string nkey(int n) { return "n=" + std::to_string(n); }
std::string mnkey(int m, int n) { return "m=" + std::to_string(m) + ",n=" + std::to_string(n); }

std::vector<std::size_t> block_vars(const VarAlphabet& a, Block b) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (b == Block::kX ? a.is_x(v) : a.is_y(v)) out.push_back(v);
  }
  return out;
}

Ideal vars_ideal(const VarAlphabet& a, Block b) {
  std::vector<Polynomial> gens;
  for (std::size_t v : block_vars(a, b)) gens.push_back(Polynomial::variable(a, Side::kOperator, v));
  return Ideal(a, std::move(gens));
}

Polynomial product_of_sums(int m, int n) {
  VarAlphabet a{m, n, 0};
  if (m == 1) return Polynomial::variable(a, Side::kForm, 0).pow(2) * sum_of_squares(a, true, Side::kForm);
  return sum_of_squares(a, false, Side::kForm) * sum_of_squares(a, true, Side::kForm);
}

std::vector<long> head(const HilbertFunction& hf, int count) {
  std::vector<long> out;
  for (int d = 0; d < count; ++d) out.push_back(hf.at(d));
  return out;
}

std::string show(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Scalar random_rational(std::mt19937_64& rng, bool allow_zero = false) {
  std::uniform_int_distribution<long> num(allow_zero ? 0 : 1, 5), den(1, 4), sign(0, 1);
  long p = num(rng);
  return Scalar::rational(sign(rng) ? -p : p, den(rng));
}

// (x-factor, y-factor) of a family form.
std::pair<Polynomial, Polynomial> factor_forms(const FamilySpec& s) {
  VarAlphabet a = s.alphabet();
  auto x = [&](int i) { return Polynomial::variable(a, Side::kForm, a.x(i)); };
  Polynomial fy = sum_of_squares(a, true, Side::kForm);
  switch (s.kind) {
    case FamilyKind::kM1: return {x(0).pow(2), fy};
    case FamilyKind::kM2: return {x(0) * x(1), fy};
    case FamilyKind::kM3:
    case FamilyKind::kGeneral: return {sum_of_squares(a, false, Side::kForm), fy};
    case FamilyKind::kMonomialPowerSum: {
      Polynomial fx = Polynomial::constant(a, Side::kForm, Scalar(1));
      for (int i = 0; i < s.m; ++i) fx = fx * x(i).pow(static_cast<unsigned>(s.a[static_cast<std::size_t>(i)]));
      Polynomial ys(a, Side::kForm);
      for (int j = 0; j < s.n; ++j) ys += Polynomial::variable(a, Side::kForm, a.y(j)).pow(static_cast<unsigned>(s.b));
      return {fx, ys};
    }
  }
  throw Error(Errc::kInvalidSpec, "unknown family");
}

// Projected Y-block points placed back into the full alphabet with X = 0.
PointSet embed_y(const PointSet& w, const VarAlphabet& a) {
  PointSet out(a, w.tol());
  for (const auto& q : w.points()) {
    std::vector<Scalar> c(a.size());
    for (int j = 0; j < a.n; ++j) c[a.y(j)] = q.coords()[static_cast<std::size_t>(j)];
    out.add(ProjPoint::exact(std::move(c)));
  }
  return out;
}

std::optional<PointSet> snap_exact(const PointSet& p) {
  if (p.is_exact()) return p;
  PointSet out(p.alphabet(), p.tol());
  for (const auto& q : p.points()) {
    std::vector<Scalar> c;
    for (const auto& z : q.numeric()) {
      auto s = rationalize(z, 1000, 1e-10);
      if (!s) return std::nullopt;
      c.push_back(*s);
    }
    out.add(ProjPoint::exact(std::move(c)));
  }
  return out;
}

// ---------------------------------------------------------------- checks

void check_annihilators(Ctx& c) {
  json hf = json::object(), eq = json::object();
  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n <= 5; ++n) {
      Polynomial f = product_of_sums(m, n);
      Ideal perp = annihilator(f);
      bool same = ideal_equal(perp, annihilator_closed_form(m, n));
      std::vector<long> row = head(hilbert_function_auto(perp), 5);
      std::vector<long> expected{1, n + m, n * m + 2, n + m, 1};
      c.expect(same, "annihilator differs from the closed form at " + mnkey(m, n));
      c.expect(row == expected, "HF(T/F^perp) " + show(row) + " at " + mnkey(m, n));
      hf[mnkey(m, n)] = row;
      eq[mnkey(m, n)] = same;
    }
  }
  c.values = {{"hf", hf}, {"closed_form_equal", eq}};
}

void check_rank_m1(Ctx& c) {
  json pts = json::object(), low = json::object();
  for (int n = 2; n <= 5; ++n) {
    FamilySpec s = FamilySpec::m1(n);
    Ideal ideal = construct_minimal_apolar(s);
    Extraction ex = extract_points(ideal, s, PointMode::kExact);
    EcompTrace tr = ecomp_lower_bound(s);
    c.expect(ex.certificate.passed && static_cast<long>(ex.points.size()) == 3L * n, "m1 point count at " + nkey(n));
    c.expect(is_apolar(ideal, family_form(s)), "m1 construction not apolar at " + nkey(n));
    c.expect(tr.bound == 3L * n, "m1 e-computability bound " + std::to_string(tr.bound) + " at " + nkey(n));
    pts[nkey(n)] = ex.points.size();
    low[nkey(n)] = tr.bound;
  }
  c.values = {{"points", pts}, {"ecomp", low}};
}

void check_rank_m2(Ctx& c) {
  json pts = json::object(), low = json::object(), spts = json::object(), slow = json::object();
  for (int n = 2; n <= 5; ++n) {
    FamilySpec s = FamilySpec::monomial_powersum({1, 1}, 2, n);
    VarAlphabet a = s.alphabet();
    Ideal ideal = construct_minimal_apolar(s);
    Polynomial fprod = family_form(s);
    Extraction ex = extract_points(ideal, s, PointMode::kApprox);
    c.expect(ex.certificate.passed && static_cast<long>(ex.points.size()) == 4L * n, "x1x2 point count at " + nkey(n));
    c.expect(is_apolar(ideal, fprod), "x1x2 construction not apolar at " + nkey(n));
    EcompTrace tr = ecomp_lower_bound(s);
    c.expect(tr.bound == 4L * n, "x1x2 e-computability bound at " + nkey(n));

    // Coordinate change to (x1^2+x2^2)(y1^2+...+yn^2).
    ScalarMatrix b = product_to_squares(a, 0, 1);
    Polynomial fsum = linear_substitute(fprod, b);
    c.expect(fsum == product_of_sums(2, n), "coordinate change does not produce the sum of squares form at " + nkey(n));
    Ideal moved = transform_ideal(ideal, b.transpose());
    long moved_points = degree_of_points(moved);
    c.expect(is_apolar(moved, fsum) && moved_points == 4L * n, "transported construction fails at " + nkey(n));
    std::vector<Polynomial> ys;
    Polynomial t(a, Side::kOperator);
    for (int j = 0; j < n; ++j) {
      ys.push_back(Polynomial::variable(a, Side::kOperator, a.y(j)));
      t += ys.back() * Scalar(j + 1);
    }
    EcompOptions eo;
    eo.points_ideal = moved;
    EcompTrace trs = ecomp_lower_bound(fsum, Ideal(a, ys), t, eo);
    c.expect(trs.bound == 4L * n, "sum of squares e-computability bound at " + nkey(n));
    pts[nkey(n)] = ex.points.size();
    low[nkey(n)] = tr.bound;
    spts[nkey(n)] = moved_points;
    slow[nkey(n)] = trs.bound;
  }
  c.values = {{"points", pts}, {"ecomp", low}, {"sum_of_squares_points", spts}, {"sum_of_squares_ecomp", slow}};
}

void check_hilbert(Ctx& c) {
  json m1 = json::object(), m2 = json::object();
  bool hf1_is_n = true;
  for (int n = 2; n <= 5; ++n) {
    std::vector<long> r1 = head(hilbert_function_auto(construct_minimal_apolar(FamilySpec::m1(n))), 5);
    std::vector<long> r2 = head(hilbert_function_auto(construct_minimal_apolar(FamilySpec::m2(n))), 5);
    c.expect(r1 == std::vector<long>{1, n + 1, 2 * n + 1, 3 * n, 3 * n}, "m1 HF " + show(r1) + " at " + nkey(n));
    c.expect(r2 == std::vector<long>{1, n + 2, 3 * n + 1, 4 * n, 4 * n}, "m2 HF " + show(r2) + " at " + nkey(n));
    if (r1[1] != n) hf1_is_n = false;
    m1[nkey(n)] = r1;
    m2[nkey(n)] = r2;
  }
  // HF(X,1) is n + 1, not n.
  c.expect(!hf1_is_n, "HF(X,1) = n unexpectedly holds");
  c.notes.push_back("HF(X,1) = n + 1 for every n, not n");
  c.values = {{"m1", m1}, {"m2", m2}, {"hf1_equals_n", hf1_is_n}};
}

void check_initial_ideal(Ctx& c) {
  json init = json::object();
  for (int n = 2; n <= 5; ++n) {
    FamilySpec s = FamilySpec::m2(n);
    Ideal ideal = construct_minimal_apolar(s);
    GroebnerBasis g = buchberger(ideal, MonomialOrder::lex(ideal.alphabet.size()));
    Ideal in = initial_ideal(g).canonical();
    std::vector<std::string> gens;
    for (const auto& p : in.generators) gens.push_back(p.to_string(true));
    VarAlphabet a = s.alphabet();
    std::vector<Polynomial> expected;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        expected.push_back(Polynomial::variable(a, Side::kOperator, a.y(i)) * Polynomial::variable(a, Side::kOperator, a.y(j)));
      }
    }
    expected.push_back(Polynomial::variable(a, Side::kOperator, a.x(0)).pow(2));
    expected.push_back(Polynomial::variable(a, Side::kOperator, a.x(1)).pow(2));
    Ideal want = Ideal(a, expected).canonical();
    c.expect(in.generators == want.generators, "lex initial ideal differs at " + nkey(n));
    // The displayed generators are already the reduced basis.
    c.expect(g.basis() == ideal.canonical().generators, "generators are not the reduced lex basis at " + nkey(n));
    init[nkey(n)] = gens;
  }
  c.values = {{"initial", init}};
}

void check_structure(Ctx& c) {
  json out = json::object();
  for (int m = 1; m <= 2; ++m) {
    json fam = json::object();
    for (int n = 2; n <= 5; ++n) {
      FamilySpec s = m == 1 ? FamilySpec::m1(n) : FamilySpec::m2(n);
      Extraction ex = family_points(s, PointMode::kExact);
      IncidenceReport rep = incidence_structure(ex.points, s);
      std::string what = s.kind_name() + " incidence at " + nkey(n);
      for (const auto& v : rep.violations) what += "; " + v;
      c.expect(rep.passed, what);
      std::vector<long> counts;
      for (const auto& car : rep.carriers) counts.push_back(static_cast<long>(car.count));
      fam[nkey(n)] = counts;
    }
    out[m == 1 ? "m1" : "m2"] = fam;
  }
  c.values = out;
}

FamilySpec census_sample(std::mt19937_64& rng, bool proportional) {
  for (;;) {
    std::vector<Scalar> alpha, beta;
    for (int i = 0; i < 2; ++i) alpha.push_back(random_rational(rng));
    Scalar lambda = random_rational(rng);
    for (int i = 0; i < 2; ++i) beta.push_back(proportional ? alpha[static_cast<std::size_t>(i)] * lambda : random_rational(rng));
    FamilySpec s = FamilySpec::m2(3, alpha, beta);
    try {
      s.validate();
      return s;
    } catch (const Error&) {
      continue;
    }
  }
}

void check_projections(Ctx& c) {
  json ydrop = json::object();
  for (int m = 1; m <= 2; ++m) {
    for (int n = 2; n <= 5; ++n) {
      FamilySpec s = m == 1 ? FamilySpec::m1(n) : FamilySpec::m2(n);
      Extraction ex = family_points(s, PointMode::kExact);
      PointSet w = project_points(ex.points, Block::kX);
      std::vector<long> hf = hf_of_points(w, 2);
      c.expect(static_cast<int>(w.size()) == n && hf == std::vector<long>{1, n, n},
               s.kind_name() + " projection to the Y-block at " + nkey(n) + " gives " + std::to_string(w.size()) + " points");
      ydrop[s.kind_name() + " " + nkey(n)] = hf;
    }
  }
  std::mt19937_64 rng(c.opts.seed ^ 0xc3a5c85c97cb3127ull);
  std::set<long> outcomes;
  for (int k = 0; k < 50; ++k) {
    FamilySpec s = census_sample(rng, k % 2 == 0);
    Census cs = second_projection_census(s);
    outcomes.insert(cs.projected);
    c.expect(cs.projected == cs.predicted && cs.even && cs.within_bound,
             "census sample " + std::to_string(k) + " (" + s.describe() + ") projects to " + std::to_string(cs.projected));
  }
  c.expect(!outcomes.count(4), "an n = 3 census sample projected to 4 points");
  FamilySpec tuned = FamilySpec::m2(4, {Scalar(1), Scalar(-1), Scalar(1)}, {Scalar(2), Scalar(-2), Scalar(3)});
  Census ct = second_projection_census(tuned);
  c.expect(ct.projected == 4, "tuned n = 4 parameters project to " + std::to_string(ct.projected) + " points");
  c.values = {{"y_block", ydrop}, {"census_n3", std::vector<long>(outcomes.begin(), outcomes.end())}, {"census_n4", ct.projected}};
}

void check_sandwich(Ctx& c) {
  json out = json::object();
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}}) {
    FamilySpec s = FamilySpec::general(m, n);
    RankReport r = rank_bounds(s);
    Ideal ideal = construct_minimal_apolar(s);
    Extraction ex = extract_points(ideal, s, PointMode::kApprox);
    EcompTrace tr = ecomp_lower_bound(s);
    long nm2 = static_cast<long>(n) * (m + 2);
    c.expect(tr.bound >= nm2, "e-computability bound below n(m+2) at " + mnkey(m, n));
    c.expect(r.lower == nm2 + 1 && r.lower_strict_over == nm2, "strict lower bound at " + mnkey(m, n));
    c.expect(r.upper == 2L * m * n && ex.certificate.passed && static_cast<long>(ex.points.size()) == 2L * m * n,
             "upper construction at " + mnkey(m, n));
    c.expect(is_apolar(ideal, family_form(s)), "upper construction not apolar at " + mnkey(m, n));
    std::vector<long> row = tr.hf.values;
    std::vector<long> table{1, m + n - 1, m * (n - 1), n - 1};
    long table_sum = 0;
    for (long v : table) table_sum += v;
    c.notes.push_back(mnkey(m, n) + ": engine row " + show(row) + " sums to " + std::to_string(tr.sum) + "; reference table " +
                      show(table) + " sums to " + std::to_string(table_sum) + "; expected sum " + std::to_string(nm2));
    out[mnkey(m, n)] = {{"lower", r.lower}, {"lower_strict_over", r.lower_strict_over.value_or(-1)}, {"upper", r.upper},
                        {"points", ex.points.size()}};
  }
  c.values = out;
}

std::string spec_key(const FamilySpec& s) {
  std::string k = "a=(";
  for (std::size_t i = 0; i < s.a.size(); ++i) k += (i ? "," : "") + std::to_string(s.a[i]);
  return k + "),b=" + std::to_string(s.b) + ",n=" + std::to_string(s.n);
}

void check_powersum(Ctx& c) {
  json out = json::object();
  std::vector<FamilySpec> specs{FamilySpec::monomial_powersum({1, 1}, 2, 2), FamilySpec::monomial_powersum({1, 2}, 2, 2),
                                FamilySpec::monomial_powersum({2, 2}, 2, 3), FamilySpec::monomial_powersum({2}, 3, 2)};
  for (const auto& s : specs) {
    long formula = s.n;
    for (int e : s.a) formula *= e + 1;
    Ideal ideal = construct_minimal_apolar(s);
    long pts = degree_of_points(ideal);
    Extraction ex = extract_points(ideal, s, PointMode::kApprox);
    EcompTrace tr = ecomp_lower_bound(s);
    c.expect(pts == formula && tr.bound == formula && ex.certificate.passed, "rank mismatch at " + spec_key(s));
    c.expect(is_apolar(ideal, family_form(s)), "construction not apolar at " + spec_key(s));
    bool rows_ok = true;
    for (const auto& row : compositions_recurrence(s, tr)) rows_ok = rows_ok && row.engine == row.formula;
    c.expect(rows_ok, "compositions recurrence differs from the engine at " + spec_key(s));
    out[spec_key(s)] = {{"points", pts}, {"ecomp", tr.bound}, {"formula", formula}, {"recurrence", rows_ok}};
  }
  c.values = out;
}

void check_roundtrip(Ctx& c) {
  json exact = json::object(), approx = json::object();
  for (const auto& s : {FamilySpec::m1(2), FamilySpec::monomial_powersum({1, 1}, 2, 2)}) {
    Polynomial f = family_form(s);
    Extraction ex = family_points(s, PointMode::kExact);
    WaringDecomposition d = solve_coefficients(ex.points, f);
    ResidualReport r = verify_decomposition(d, f, 1e-9);
    bool ok = ex.exact && r.exact && r.passed && r.residual == 0.0;
    c.expect(ok, s.describe() + ": exact round trip unavailable (exact points: " + (ex.exact ? "yes" : "no") +
                     ", residual " + std::to_string(r.residual) + ")");
    exact[s.describe()] = ok;
  }
  std::vector<FamilySpec> approx_specs{FamilySpec::m1(3), FamilySpec::m1(4), FamilySpec::m1(5), FamilySpec::m3(2),
                                       FamilySpec::m3(3)};
  for (const auto& s : approx_specs) {
    Polynomial f = family_form(s);
    Extraction ex = family_points(s, PointMode::kApprox);
    WaringDecomposition d = solve_coefficients(ex.points, f);
    ResidualReport r = verify_decomposition(d, f, 1e-9);
    c.expect(r.passed, s.describe() + ": residual " + std::to_string(r.residual));
    approx[s.describe()] = r.passed;
  }
  c.values = {{"exact", exact}, {"approx", approx}};
}

// Random exact point on the forbidden locus.
ProjPoint forbidden_sample(std::mt19937_64& rng, const FamilySpec& s) {
  VarAlphabet a = s.alphabet();
  std::vector<Scalar> p(a.size());
  for (int i = 0; i < a.m; ++i) p[a.x(i)] = random_rational(rng, true);
  std::uniform_int_distribution<int> branch(0, 2);
  int b = s.kind == FamilyKind::kM2 ? branch(rng) : 2;
  if (b < 2) {
    p[a.x(b)] = Scalar(0);
    for (int j = 0; j < a.n; ++j) p[a.y(j)] = random_rational(rng, true);
    p[a.y(0)] = random_rational(rng);
  } else {
    Scalar rest;
    for (int j = 2; j < a.n; ++j) {
      p[a.y(j)] = random_rational(rng, true);
      rest += p[a.y(j)] * p[a.y(j)];
    }
    // (c1 + i c2)(c1 - i c2) = -rest with c1 + i c2 = u.
    Scalar u = random_rational(rng);
    Scalar v = -rest / u;
    p[a.y(0)] = (u + v) / Scalar(2);
    p[a.y(1)] = (u - v) / (Scalar(2) * Scalar::imaginary_unit());
  }
  return ProjPoint::exact(std::move(p));
}

ProjPoint allowed_sample(std::mt19937_64& rng, const FamilySpec& s) {
  VarAlphabet a = s.alphabet();
  std::uniform_int_distribution<int> quarter(0, 3);
  for (;;) {
    std::vector<Scalar> p(a.size());
    for (int i = 0; i < a.m; ++i) p[a.x(i)] = random_rational(rng);
    if (s.kind == FamilyKind::kM1 && quarter(rng) == 0) p[a.x(0)] = Scalar(0);
    for (int j = 0; j < a.n; ++j) p[a.y(j)] = random_rational(rng, true);
    bool zero = std::all_of(p.begin(), p.end(), [](const Scalar& z) { return z.is_zero(); });
    if (zero) continue;
    ProjPoint q = ProjPoint::exact(std::move(p));
    if (!forbidden_member(q, s)) return q;
  }
}

void check_loci(Ctx& c) {
  json out = json::object();
  std::mt19937_64 rng(c.opts.seed ^ 0x2545f4914f6cdd1dull);
  for (int m = 1; m <= 2; ++m) {
    auto spec_for = [&](int n) { return m == 1 ? FamilySpec::m1(n) : FamilySpec::m2(n); };
    bool extracted_clear = true;
    for (int n = 2; n <= 5; ++n) {
      FamilySpec s = spec_for(n);
      Extraction ex = family_points(s, PointMode::kExact);
      for (const auto& p : ex.points.points()) {
        if (forbidden_member(p, s)) {
          extracted_clear = false;
          c.expect(false, s.describe() + ": extracted point " + p.to_string() + " is forbidden");
        }
      }
    }
    long hits = 0;
    for (int k = 0; k < 100; ++k) {
      FamilySpec s = spec_for(2 + k % 4);
      ProjPoint p = forbidden_sample(rng, s);
      if (forbidden_member(p, s)) {
        ++hits;
      } else {
        c.expect(false, s.describe() + ": locus point " + p.to_string() + " not detected");
      }
    }
    long witnesses = 0;
    for (int k = 0; k < 20; ++k) {
      FamilySpec s = spec_for(2 + k % 4);
      ProjPoint p = allowed_sample(rng, s);
      Witness w = waring_witness(p, s, 1e-9);
      bool ok = w.contains_point && w.apolar && static_cast<long>(w.points.size()) == claimed_points(s);
      if (ok) {
        ++witnesses;
      } else {
        c.expect(false, s.describe() + ": witness for " + p.to_string() + " failed (residual " + std::to_string(w.residual) + ")");
      }
    }
    out[m == 1 ? "m1" : "m2"] = {{"extracted_not_forbidden", extracted_clear}, {"locus_detected", hits}, {"witnesses", witnesses}};
  }
  c.values = out;
}

void check_properties(Ctx& c) {
  json out = json::object();
  std::mt19937_64 rng(c.opts.seed ^ 0x9fb21c651e98df25ull);

  // Gorenstein symmetry.
  bool sym = true;
  std::vector<FamilySpec> forms;
  for (int n = 2; n <= 5; ++n) forms.push_back(FamilySpec::m1(n));
  for (int n = 2; n <= 4; ++n) forms.push_back(FamilySpec::m2(n));
  forms.push_back(FamilySpec::m3(2));
  forms.push_back(FamilySpec::general(3, 3));
  forms.push_back(FamilySpec::monomial_powersum({1, 2}, 2, 2));
  forms.push_back(FamilySpec::monomial_powersum({2}, 3, 2));
  for (const auto& s : forms) {
    Polynomial f = family_form(s);
    int d = *f.homogeneous_degree();
    HilbertFunction hf = hilbert_function_auto(annihilator(f));
    for (int i = 0; i <= d; ++i) {
      if (hf.at(i) != hf.at(d - i)) {
        sym = false;
        c.expect(false, s.describe() + ": HF(T/F^perp) not symmetric");
        break;
      }
    }
  }
  out["gorenstein_symmetry"] = sym;

  // HF(X, d-2) <= |X| - (n-1) after a generic rotation with g = Y1.
  bool hf_bounded = true;
  for (int m = 1; m <= 2; ++m) {
    for (int n = 2; n <= 5; ++n) {
      FamilySpec s = m == 1 ? FamilySpec::m1(n) : FamilySpec::m2(n);
      Polynomial f = family_form(s);
      Extraction ex = family_points(s, PointMode::kExact);
      RotationResult rot = rotate_generic(ex.points, f, rng());
      int d = *f.homogeneous_degree();
      long hf = hf_of_points(rot.points, d - 2).back();
      long bound = static_cast<long>(rot.points.size()) - (n - 1);
      WaringDecomposition dec = solve_coefficients(rot.points, f);
      bool ok = hf <= bound && verify_decomposition(dec, f, 1e-9).passed;
      hf_bounded = hf_bounded && ok;
      c.expect(ok, s.describe() + ": HF(X,d-2) = " + std::to_string(hf) + " exceeds " + std::to_string(bound));
    }
  }
  out["hf_upper_bound"] = hf_bounded;

  // Projection against elimination.
  bool route = true;
  std::vector<FamilySpec> sets;
  for (int n = 2; n <= 4; ++n) {
    sets.push_back(FamilySpec::m1(n));
    sets.push_back(FamilySpec::m2(n));
    sets.push_back(FamilySpec::m3(n));
  }
  for (const auto& s : sets) {
    VarAlphabet a = s.alphabet();
    Ideal ideal = construct_minimal_apolar(s);
    Extraction ex = extract_points(ideal, s, PointMode::kApprox);
    auto w = snap_exact(project_points(ex.points, Block::kX));
    bool ok = w.has_value() && ideal_equal(ideal_of_points(embed_y(*w, a)), ideal_sum(vars_ideal(a, Block::kX), elimination_ideal(ideal, block_vars(a, Block::kY))));
    if (ok && s.kind == FamilyKind::kM2) {
      // Keep the X-block: numeric vanishing plus Hilbert function agreement.
      Ideal ex_ideal = elimination_ideal(ideal, block_vars(a, Block::kX));
      PointSet wx = project_points(ex.points, Block::kY);
      for (const auto& g : ex_ideal.generators) {
        for (const auto& p : wx.points()) {
          ComplexVec full(a.size(), 0.0);
          for (int i = 0; i < a.m; ++i) full[a.x(i)] = p.numeric()[static_cast<std::size_t>(i)];
          if (std::abs(g.evaluate(std::span<const std::complex<double>>(full))) > 1e-8) ok = false;
        }
      }
      HilbertFunction hfe = hilbert_function_auto(ideal_sum(vars_ideal(a, Block::kY), ex_ideal));
      std::vector<long> hfp = hf_of_points(wx, 4);
      for (int d = 0; d <= 4; ++d) ok = ok && hfe.at(d) == hfp[static_cast<std::size_t>(d)];
    }
    route = route && ok;
    c.expect(ok, s.describe() + ": projection and elimination disagree");
  }
  out["projection_elimination"] = route;

  // Factor apolarity of the projections (elimination ideals).
  bool factors = true;
  std::vector<FamilySpec> fsets = sets;
  fsets.push_back(FamilySpec::monomial_powersum({1, 2}, 2, 2));
  fsets.push_back(FamilySpec::general(3, 3));
  for (const auto& s : fsets) {
    VarAlphabet a = s.alphabet();
    Ideal ideal = construct_minimal_apolar(s);
    auto [fx, fy] = factor_forms(s);
    bool ok = is_apolar(elimination_ideal(ideal, block_vars(a, Block::kX)), fx) &&
              is_apolar(elimination_ideal(ideal, block_vars(a, Block::kY)), fy);
    factors = factors && ok;
    c.expect(ok, s.describe() + ": a projection is not apolar to its factor");
  }
  out["factor_apolarity"] = factors;

  // Two routes for F^perp : (t).
  bool colon_ok = true;
  for (const auto& s : {FamilySpec::m1(3), FamilySpec::m2(3), FamilySpec::m3(2), FamilySpec::monomial_powersum({1, 1}, 2, 2)}) {
    Polynomial f = family_form(s);
    VarAlphabet a = s.alphabet();
    for (int k = 0; k < 20; ++k) {
      Polynomial t(a, Side::kOperator);
      for (std::size_t v = 0; v < a.size(); ++v) t += Polynomial::variable(a, Side::kOperator, v) * random_rational(rng, true);
      if (t.is_zero() || apply_diff(t, f).is_zero()) continue;
      try {
        perp_colon_linear(f, t);
      } catch (const Error& e) {
        colon_ok = false;
        c.expect(false, s.describe() + ": colon routes disagree for t = " + t.to_string(true) + " (" + e.what() + ")");
      }
    }
  }
  out["colon_routes"] = colon_ok;

  // Cayley orthogonality and the induced apolar sets of y1^2+...+yn^2.
  bool cayley = true;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 5; ++k) {
      ScalarMatrix o = cayley_orthogonal(random_cayley_params(n, rng()), n);
      PointSet cols = orthogonal_to_apolar_set(o);
      Polynomial q = sum_of_squares(VarAlphabet{0, n, 0}, true, Side::kForm);
      bool ok = is_orthogonal(o) && is_apolar(ideal_of_points(cols), q);
      cayley = cayley && ok;
      c.expect(ok, "Cayley transform failed for n = " + std::to_string(n));
    }
  }
  out["cayley"] = cayley;
  c.values = out;
}

void check_example(Ctx& c) {
  VarAlphabet a{1, 2, 0};
  Polynomial f = parse_poly("x1*(y1^3+y2^3)", a);
  Ideal i1(a, {parse_poly("Y1*Y2", a, Side::kOperator), parse_poly("X1^3+Y1^3-Y2^3", a, Side::kOperator)});
  Ideal i2(a, {parse_poly("X1^2+Y1*Y2", a, Side::kOperator), parse_poly("X1^3+Y1^3-Y2^3", a, Side::kOperator)});
  bool ap1 = is_apolar(i1, f), ap2 = is_apolar(i2, f);
  long d1 = degree_of_points(i1), d2 = degree_of_points(i2);
  MonomialOrder lex = MonomialOrder::lex(a.size());
  bool differ = buchberger(i1, lex).basis() != buchberger(i2, lex).basis();
  c.expect(ap1 && ap2, "an ideal is not apolar to x(y1^3+y2^3)");
  c.expect(d1 == 6 && d2 == 6, "degrees " + std::to_string(d1) + ", " + std::to_string(d2));
  c.expect(differ, "the two reduced lex bases coincide");
  c.values = {{"apolar", {ap1, ap2}}, {"degree", {d1, d2}}, {"bases_differ", differ}};
}

using CheckFn = void (*)(Ctx&);

struct CheckDef {
  const char* name;
  CheckFn fn;
};

const CheckDef kChecks[kNumChecks] = {
    {"annihilator tables", check_annihilators},
    {"rank of x^2(y1^2+...+yn^2)", check_rank_m1},
    {"rank of x1x2(y1^2+...+yn^2)", check_rank_m2},
    {"Hilbert functions of minimal sets", check_hilbert},
    {"lex initial ideal", check_initial_ideal},
    {"incidence structure", check_structure},
    {"projections and census", check_projections},
    {"rank sandwich for m, n >= 3", check_sandwich},
    {"monomial times power sum ranks", check_powersum},
    {"decomposition round trip", check_roundtrip},
    {"forbidden and Waring loci", check_loci},
    {"property suites", check_properties},
    {"two minimal apolar structures", check_example},
};

void diff_into(const json& got, const json& want, const std::string& path, std::vector<std::string>& out) {
  if (got.is_object() && want.is_object()) {
    for (const auto& [k, v] : want.items()) {
      if (!got.contains(k)) {
        out.push_back(path + "/" + k + ": missing (expected " + v.dump() + ")");
      } else {
        diff_into(got.at(k), v, path + "/" + k, out);
      }
    }
    for (const auto& [k, v] : got.items()) {
      if (!want.contains(k)) out.push_back(path + "/" + k + ": unexpected value " + v.dump());
    }
    return;
  }
  if (got.is_array() && want.is_array() && got.size() == want.size()) {
    for (std::size_t i = 0; i < got.size(); ++i) diff_into(got[i], want[i], path + "/" + std::to_string(i), out);
    return;
  }
  if (got != want) out.push_back(path + ": expected " + want.dump() + ", got " + got.dump());
}

}  // namespace

std::string check_name(int id) {
  if (id < 1 || id > kNumChecks) throw Error(Errc::kInvalidArgument, "no check " + std::to_string(id));
  return kChecks[id - 1].name;
}

CheckResult run_check(int id, const ReproOptions& opts) {
  CheckResult r;
  r.id = id;
  r.name = check_name(id);
  Ctx ctx;
  ctx.opts = opts;
  auto t0 = std::chrono::steady_clock::now();
  try {
    kChecks[id - 1].fn(ctx);
  } catch (const Error& e) {
    ctx.failures.push_back(std::string("error: ") + e.what());
  } catch (const std::exception& e) {
    ctx.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = ctx.failures.empty();
  std::string detail;
  for (const auto& f : ctx.failures) detail += (detail.empty() ? "" : "; ") + f;
  for (const auto& n : ctx.notes) detail += (detail.empty() ? "" : "; ") + n;
  r.detail = detail;
  r.values = std::move(ctx.values);
  return r;
}

std::vector<CheckResult> run_checks(const ReproOptions& opts) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kNumChecks; ++id) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) continue;
    out.push_back(run_check(id, opts));
  }
  return out;
}

std::vector<std::string> golden_diff(const json& produced, const json& golden) {
  std::vector<std::string> out;
  if (!golden.is_object()) {
    out.push_back("golden file is not a JSON object");
    return out;
  }
  for (const auto& [k, v] : produced.items()) {
    if (!golden.contains(k)) {
      out.push_back("check " + k + ": no golden entry");
      continue;
    }
    std::vector<std::string> lines;
    diff_into(v, golden.at(k), "", lines);
    for (const auto& l : lines) out.push_back("check " + k + " " + l);
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const std::exception& e) {
    throw Error(Errc::kParse, path + ": " + e.what());
  }
}

json collect_values(const std::vector<CheckResult>& results) {
  json out = json::object();
  for (const auto& r : results) out[std::to_string(r.id)] = r.values;
  return out;
}

}  // namespace apolar::repro
