#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "apolar/apolarity.hpp"
#include "apolar/io.hpp"
#include "apolar/repro.hpp"

namespace apolar::cli {

using io::json;

namespace {

struct Args {
  std::string command;
  int m = -1;
  int n = -1;
  std::vector<int> a;
  int b = 2;
  std::string alpha, beta;
  bool variant = false;
  std::string family;
  std::string form;
  std::string ideal;
  std::string file;
  std::string mode = "exact";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  unsigned max_deg = 20;
  std::string format = "json";
  std::string point;
  std::string drop = "X";
  std::string order = "grevlex";
  std::string t;
  std::string golden;
  std::vector<int> only;
};

struct Output {
  Output(json p = json::object(), bool ok = true) : payload(std::move(p)), check_passed(ok) {}

  json payload;
  bool check_passed;
  std::vector<std::string> diagnostics;
  std::string text;  // overrides the generic text rendering when set
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<Scalar> scalars(const std::string& s) {
  std::vector<Scalar> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_scalar(p));
  return out;
}

bool have_family(const Args& o) { return !o.family.empty(); }

FamilySpec family(const Args& o) {
  if (o.family.empty()) throw Error(Errc::kInvalidArgument, "--family is required");
  int n = o.n < 0 ? 2 : o.n;
  return parse_family(o.family, o.m, n, o.a, o.b, scalars(o.alpha), scalars(o.beta), o.variant);
}

VarAlphabet alphabet(const Args& o) {
  if (have_family(o)) return family(o).alphabet();
  if (o.m < 0 || o.n < 0) throw Error(Errc::kInvalidArgument, "--m and --n (or --family) are required");
  VarAlphabet a{o.m, o.n, 0};
  a.validate();
  return a;
}

std::optional<json> file_json(const Args& o) {
  if (o.file.empty()) return std::nullopt;
  return repro::load_json_file(o.file);
}

Polynomial form(const Args& o) {
  if (!o.form.empty()) return parse_poly(o.form, alphabet(o), Side::kForm);
  if (auto j = file_json(o); j && j->contains("terms")) return io::polynomial_from_json(*j, Side::kForm);
  return family_form(family(o));
}

std::optional<Ideal> given_ideal(const Args& o) {
  if (!o.ideal.empty()) {
    VarAlphabet a = alphabet(o);
    std::vector<Polynomial> gens;
    for (const auto& g : split(o.ideal, ',')) gens.push_back(parse_poly(g, a, Side::kOperator));
    return Ideal(a, std::move(gens));
  }
  if (auto j = file_json(o); j && (j->is_array() || j->contains("generators"))) {
    if (j->is_array() || !j->contains("alphabet")) {
      VarAlphabet a = alphabet(o);
      return io::ideal_from_json(*j, &a);
    }
    return io::ideal_from_json(*j);
  }
  return std::nullopt;
}

Ideal ideal_or_construction(const Args& o) {
  if (auto i = given_ideal(o)) return *i;
  return construct_minimal_apolar(family(o));
}

PointMode mode(const Args& o) {
  if (o.mode == "exact") return PointMode::kExact;
  if (o.mode == "approx") return PointMode::kApprox;
  throw Error(Errc::kInvalidArgument, "--mode must be exact or approx");
}

PointSet points(const Args& o) {
  if (auto j = file_json(o); j && (j->is_array() || j->contains("points"))) return io::pointset_from_json(*j, alphabet(o));
  return family_points(family(o), mode(o)).points;
}

ProjPoint point(const Args& o) {
  if (o.point.empty()) throw Error(Errc::kInvalidArgument, "--point is required");
  std::vector<Scalar> c = scalars(o.point);
  if (c.size() != alphabet(o).size()) throw Error(Errc::kDimensionMismatch, "point length does not match the alphabet");
  return ProjPoint::exact(std::move(c));
}

MonomialOrder order(const Args& o, std::size_t nvars) {
  if (o.order == "grevlex") return MonomialOrder::grevlex(nvars);
  if (o.order == "lex") return MonomialOrder::lex(nvars);
  throw Error(Errc::kInvalidArgument, "--order must be lex or grevlex");
}

// ---------------------------------------------------------------- commands

Output cmd_annihilator(const Args& o) {
  Polynomial f = form(o);
  return {io::to_json(annihilator(f))};
}

Output cmd_hilbert(const Args& o) {
  Ideal i = given_ideal(o) ? *given_ideal(o) : (!o.form.empty() ? annihilator(form(o)) : construct_minimal_apolar(family(o)));
  return {io::to_json(hilbert_function_auto(i))};
}

Output cmd_apolar_check(const Args& o) {
  Ideal i = ideal_or_construction(o);
  bool ok = is_apolar(i, form(o));
  return {json{{"apolar", ok}}, ok};
}

Output cmd_construct(const Args& o) {
  FamilySpec s = family(o);
  Ideal i = construct_minimal_apolar(s);
  json out = io::to_json(i, order(o, i.alphabet.size()));
  if (o.order != "grevlex") {
    out["generators"] = json::array();
    GroebnerBasis g = buchberger(i, order(o, i.alphabet.size()));
    for (const auto& p : g.basis()) out["generators"].push_back(p.to_string(true));
  }
  out["family"] = io::to_json(s);
  out["degree"] = degree_of_points(i);
  out["claimed"] = claimed_points(s);
  return {out};
}

Output cmd_extract(const Args& o) {
  FamilySpec s = family(o);
  Extraction e = extract_points(ideal_or_construction(o), s, mode(o));
  return {io::to_json(e), e.certificate.passed};
}

Output cmd_decompose(const Args& o) {
  Polynomial f = form(o);
  WaringDecomposition d = solve_coefficients(points(o), f);
  ResidualReport r = verify_decomposition(d, f, o.tol);
  json out = io::to_json(d);
  out["verification"] = io::to_json(r);
  return {out, r.passed};
}

Output cmd_rank_bounds(const Args& o) {
  Output out{io::to_json(rank_bounds(family(o)))};
  return out;
}

Output cmd_ecomp_bound(const Args& o) {
  if (o.t.empty()) return {io::to_json(ecomp_lower_bound(family(o)))};
  FamilySpec s = family(o);
  VarAlphabet a = s.alphabet();
  std::vector<Polynomial> ys;
  for (int j = 0; j < a.n; ++j) ys.push_back(Polynomial::variable(a, Side::kOperator, a.y(j)));
  EcompOptions eo;
  eo.points_ideal = construct_minimal_apolar(s);
  EcompTrace tr = ecomp_lower_bound(family_form(s), Ideal(a, ys), parse_poly(o.t, a, Side::kOperator), eo);
  return {io::to_json(tr)};
}

Output cmd_forbidden(const Args& o) {
  FamilySpec s = family(o);
  return {json{{"point", io::to_json(point(o))}, {"forbidden", forbidden_member(point(o), s)}}};
}

Output cmd_witness(const Args& o) {
  Witness w = waring_witness(point(o), family(o), o.tol);
  return {io::to_json(w), w.contains_point && w.apolar};
}

Output cmd_project(const Args& o) {
  Block drop;
  if (o.drop == "X" || o.drop == "x") {
    drop = Block::kX;
  } else if (o.drop == "Y" || o.drop == "y") {
    drop = Block::kY;
  } else {
    throw Error(Errc::kInvalidArgument, "--drop must be X or Y");
  }
  PointSet w = project_points(points(o), drop);
  json out = io::to_json(w);
  out["count"] = w.size();
  out["hilbert"] = hf_of_points(w, 3);
  return {out};
}

Output cmd_verify_structure(const Args& o) {
  IncidenceReport r = incidence_structure(points(o), family(o));
  return {io::to_json(r), r.passed};
}

Output cmd_census(const Args& o) {
  Census c = second_projection_census(family(o));
  return {io::to_json(c), c.projected == c.predicted};
}

Output cmd_repro(const Args& o) {
  repro::ReproOptions ro;
  ro.seed = o.seed;
  ro.only = o.only;
  std::vector<repro::CheckResult> results = repro::run_checks(ro);
  Output out;
  json checks = json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    out.diagnostics.push_back("check " + std::to_string(r.id) + " took " + buf + " s");
    text << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name;
    if (!r.detail.empty()) text << " -- " << r.detail;
    text << '\n';
  }
  json diff = json::array();
  if (!o.golden.empty()) {
    for (const auto& line : repro::golden_diff(repro::collect_values(results), repro::load_json_file(o.golden))) {
      diff.push_back(line);
      text << "DIFF " << line << '\n';
    }
  }
  out.payload = {{"seed", o.seed}, {"passed", all && diff.empty()}, {"checks", checks}, {"golden_diff", diff}};
  out.check_passed = all && diff.empty();
  out.text = text.str();
  return out;
}

using Handler = Output (*)(const Args&);

struct Command {
  const char* name;
  const char* help;
  Handler fn;
};

const Command kCommands[] = {
    {"annihilator", "Annihilator ideal F^perp of --form or --family", cmd_annihilator},
    {"hilbert", "Hilbert function of an ideal (--ideal, --file), of F^perp (--form) or of a construction", cmd_hilbert},
    {"apolar-check", "Tests I subset F^perp", cmd_apolar_check},
    {"construct", "Minimal apolar ideal of a family", cmd_construct},
    {"extract", "Certified points of a construction", cmd_extract},
    {"decompose", "Waring coefficients over a point set", cmd_decompose},
    {"rank-bounds", "Lower and upper Waring rank bounds", cmd_rank_bounds},
    {"ecomp-bound", "e-computability lower bound with its trace", cmd_ecomp_bound},
    {"forbidden", "Forbidden locus membership of --point", cmd_forbidden},
    {"witness", "Minimal apolar set through --point", cmd_witness},
    {"project", "Projection of a point set dropping --drop", cmd_project},
    {"verify-structure", "Incidence structure of the extracted points", cmd_verify_structure},
    {"census", "Projection size against the ratio prediction", cmd_census},
    {"repro", "Runs every table check", cmd_repro},
};

void render_text(const json& j, const std::string& indent, std::ostringstream& out) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      render_text(v, indent + "  ", out);
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
      out << indent << k << ":";
      for (const auto& e : v) out << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
      out << '\n';
    } else if (v.is_array()) {
      out << indent << k << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          render_text(e, indent + "  ", out);
          out << indent << "  --\n";
        } else {
          out << indent << "  " << e.dump() << '\n';
        }
      }
    } else {
      out << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

int exit_for(Errc c) {
  switch (c) {
    case Errc::kDegreeCap:
      return kResourceCap;
    case Errc::kParse:
    case Errc::kInvalidArgument:
    case Errc::kInvalidSpec:
    case Errc::kAlphabetMismatch:
    case Errc::kDimensionMismatch:
    case Errc::kNotHomogeneous:
    case Errc::kUnsupported:
      return kUsage;
    default:
      return kCheckFailed;
  }
}

std::uint64_t env_seed() {
  const char* s = std::getenv("APOLAR_SEED");
  if (!s || !*s) return 0;
  return std::strtoull(s, nullptr, 10);
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Apolarity and Waring rank computations", "apolar"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Args o;
  o.seed = env_seed();
  app.add_option("--m", o.m, "X-block size");
  app.add_option("--n", o.n, "Y-block size");
  app.add_option("--a", o.a, "Exponents a1,...,am")->delimiter(',');
  app.add_option("--b", o.b, "Power sum exponent");
  app.add_option("--alpha", o.alpha, "Comma separated alpha_2..alpha_n");
  app.add_option("--beta", o.beta, "Comma separated beta_2..beta_n");
  app.add_flag("--variant", o.variant, "Second m1 construction");
  app.add_option("--family", o.family, "m1, m2, m3, general, monomial_powersum (mps)");
  app.add_option("--form", o.form, "Form in x1..xm, y1..yn");
  app.add_option("--ideal", o.ideal, "Comma separated generators in X1.., Y1..");
  app.add_option("--file", o.file, "JSON polynomial, ideal or point set");
  app.add_option("--mode", o.mode, "exact or approx");
  app.add_option("--tol", o.tol, "Numeric tolerance");
  app.add_option("--seed", o.seed, "Seed for generic choices");
  app.add_option("--max-deg", o.max_deg, "Groebner degree cap");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--point", o.point, "Comma separated coordinates");
  app.add_option("--drop", o.drop, "Block to drop: X or Y");
  app.add_option("--order", o.order, "lex or grevlex");
  app.add_option("--t", o.t, "Linear form in the Y-block");
  app.add_option("--golden", o.golden, "Golden table file for repro");
  app.add_option("--only", o.only, "Check ids for repro")->delimiter(',');
  for (const auto& c : kCommands) {
    app.add_subcommand(c.name, c.help)->callback([&o, name = c.name] { o.command = name; });
  }

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kUsage;
    return result;
  }

  unsigned saved_cap = default_degree_cap();
  set_default_degree_cap(o.max_deg);
  try {
    Output out;
    for (const auto& c : kCommands) {
      if (o.command == c.name) out = c.fn(o);
    }
    if (o.format == "text") {
      if (!out.text.empty()) {
        result.out = out.text;
      } else {
        std::ostringstream text;
        render_text(out.payload, "", text);
        result.out = text.str();
      }
    } else {
      result.out = out.payload.dump(2) + "\n";
    }
    for (const auto& d : out.diagnostics) result.err += d + "\n";
    result.exit_code = out.check_passed ? kOk : kCheckFailed;
  } catch (const Error& e) {
    json err = {{"status", "error"}, {"code", to_string(e.code())}, {"message", e.what()}};
    result.err += err.dump() + "\n";
    result.exit_code = exit_for(e.code());
  } catch (const std::exception& e) {
    result.err += json({{"status", "error"}, {"message", e.what()}}).dump() + "\n";
    result.exit_code = kCheckFailed;
  }
  set_default_degree_cap(saved_cap);
  return result;
}

}  // namespace apolar::cli
