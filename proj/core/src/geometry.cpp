#include <algorithm>
#include <cstdio>
#include <random>

#include "apolar/geometry.hpp"

namespace apolar {

ScalarMatrix cayley_orthogonal(const std::vector<Scalar>& params, int n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "Cayley transform needs n >= 1");
  std::size_t un = static_cast<std::size_t>(n);
  if (params.size() != un * (un - 1) / 2) {
    throw Error(Errc::kInvalidArgument, "Cayley transform needs n(n-1)/2 parameters");
  }
  ScalarMatrix k(un, un);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = i + 1; j < un; ++j) {
      k(i, j) = params[idx];
      k(j, i) = -params[idx];
      ++idx;
    }
  }
  ScalarMatrix id = ScalarMatrix::identity(un);
  ScalarMatrix o = (id + k) * inverse(id - k);
  if (!is_orthogonal(o)) throw Error(Errc::kCertificate, "Cayley transform is not orthogonal");
  return o;
}

bool is_orthogonal(const ScalarMatrix& o) { return (o * o.transpose()).is_identity(); }

std::vector<Scalar> random_cayley_params(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 4);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Scalar> out;
  for (int k = 0; k < n * (n - 1) / 2; ++k) {
    long p = num(rng);
    long q = den(rng);
    out.push_back(Scalar::rational(sign(rng) ? p : -p, q));
  }
  return out;
}

PointSet orthogonal_to_apolar_set(const ScalarMatrix& o) {
  if (o.rows() != o.cols() || !is_orthogonal(o)) throw Error(Errc::kInvalidArgument, "matrix is not orthogonal");
  PointSet out(VarAlphabet{0, static_cast<int>(o.rows()), 0});
  for (std::size_t j = 0; j < o.cols(); ++j) out.add(ProjPoint::exact(o.column(j)));
  return out;
}

RotationResult rotate_generic(const PointSet& points, const Polynomial& f, std::uint64_t seed, int max_attempts) {
  if (points.empty()) throw Error(Errc::kInvalidArgument, "cannot rotate an empty point set");
  const VarAlphabet& a = points.alphabet();
  if (f.alphabet() != a) throw Error(Errc::kAlphabetMismatch, "form and points use different alphabets");
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    ScalarMatrix o = cayley_orthogonal(random_cayley_params(a.n, rng()), a.n);
    ScalarMatrix full = block_diag(ScalarMatrix::identity(static_cast<std::size_t>(a.m)), o);
    if (attempt == 1 && linear_substitute(f, full) != f) {
      throw Error(Errc::kInvalidArgument, "form is not fixed by the orthogonal action on the Y-block");
    }
    PointSet rotated = transform_points(points, full.transpose());
    bool generic = std::all_of(rotated.points().begin(), rotated.points().end(), [&](const ProjPoint& p) {
      for (int j = 0; j < a.n; ++j) {
        std::size_t v = a.y(j);
        if (p.is_exact() ? p.coords()[v].is_zero() : std::abs(p.numeric()[v]) < points.tol()) return false;
      }
      return true;
    });
    if (generic && rotated.size() == points.size()) return {std::move(rotated), std::move(o), attempt};
  }
  throw Error(Errc::kRetryExhausted, "no rotation made every Y-coordinate nonzero");
}

namespace {

struct Group {
  ProjPoint rep;
  std::vector<std::size_t> members;
};

std::optional<ProjPoint> block_part(const ProjPoint& p, const VarAlphabet& a, bool y_block, double tol) {
  std::size_t begin = y_block ? a.y(0) : 0;
  std::size_t end = y_block ? a.y(a.n) : static_cast<std::size_t>(a.m);
  if (p.is_exact()) {
    std::vector<Scalar> c(p.coords().begin() + static_cast<std::ptrdiff_t>(begin),
                          p.coords().begin() + static_cast<std::ptrdiff_t>(end));
    if (std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); })) return std::nullopt;
    return ProjPoint::exact(std::move(c));
  }
  ComplexVec c(p.numeric().begin() + static_cast<std::ptrdiff_t>(begin), p.numeric().begin() + static_cast<std::ptrdiff_t>(end));
  double mx = 0;
  for (const auto& z : c) mx = std::max(mx, std::abs(z));
  if (mx < tol) return std::nullopt;
  return ProjPoint::approx(std::move(c), tol);
}

std::vector<std::string> carrier_forms(const ProjPoint& q, const VarAlphabet& a) {
  std::vector<std::string> forms;
  std::size_t k = 0;
  while (k < q.size() && std::abs(q.numeric()[k]) == 0.0) ++k;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (j == k) continue;
    std::string yj = a.name(a.y(static_cast<int>(j)), Side::kOperator);
    std::string yk = a.name(a.y(static_cast<int>(k)), Side::kOperator);
    if (q.is_exact()) {
      Polynomial f = Polynomial::variable(a, Side::kOperator, a.y(static_cast<int>(j))) -
                     Polynomial::variable(a, Side::kOperator, a.y(static_cast<int>(k))) * q.coords()[j];
      forms.push_back(f.to_string(true));
    } else if (std::abs(q.numeric()[j]) == 0.0) {
      forms.push_back(yj);
    } else {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s-(%.12g%+.12g*i)*%s", yj.c_str(), q.numeric()[j].real(), q.numeric()[j].imag(),
                    yk.c_str());
      forms.push_back(buf);
    }
  }
  return forms;
}

std::string carrier_name(const std::string& kind, const ProjPoint& q, std::size_t order_index) {
  // Coordinate carriers are named after their axis.
  std::size_t nonzero = 0, axis = 0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (std::abs(q.numeric()[j]) != 0.0) {
      ++nonzero;
      axis = j;
    }
  }
  std::size_t label = nonzero == 1 ? axis + 1 : order_index + 1;
  return kind + " " + std::to_string(label);
}

}  // namespace

IncidenceReport incidence_structure(const PointSet& points, const FamilySpec& spec) {
  const VarAlphabet& a = points.alphabet();
  if (a != spec.alphabet()) throw Error(Errc::kAlphabetMismatch, "point set does not match the family alphabet");
  if (spec.m != 1 && spec.m != 2) throw Error(Errc::kUnsupported, "incidence structure is defined for m = 1 and m = 2");
  IncidenceReport rep;
  rep.family = spec.describe();
  std::size_t per_carrier = static_cast<std::size_t>(claimed_points(spec) / spec.n);
  std::string kind = spec.m == 1 ? "line" : "plane";

  std::vector<Group> groups;
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    auto q = block_part(points.points()[idx], a, true, points.tol());
    if (!q) {
      rep.residual.push_back(idx);
      rep.violations.push_back("point " + points.points()[idx].to_string() +
                               (spec.m == 1 ? " is the hub [1:0:...:0]" : " lies on V(Y1,...,Yn)"));
      continue;
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.rep.equals(*q, points.tol()); });
    if (it == groups.end()) {
      groups.push_back({*q, {idx}});
    } else {
      it->members.push_back(idx);
    }
  }
  if (groups.size() != static_cast<std::size_t>(spec.n)) {
    rep.violations.push_back("found " + std::to_string(groups.size()) + " " + kind + "s, expected " + std::to_string(spec.n));
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    Carrier c;
    c.name = carrier_name(kind, groups[g].rep, g);
    c.forms = carrier_forms(groups[g].rep, a);
    c.count = groups[g].members.size();
    if (c.count != per_carrier) {
      rep.violations.push_back(c.name + " carries " + std::to_string(c.count) + " points, expected " +
                               std::to_string(per_carrier));
    }
    if (spec.m == 2) {
      std::vector<Group> lines;
      for (std::size_t idx : groups[g].members) {
        auto x = block_part(points.points()[idx], a, false, points.tol());
        if (!x) {
          rep.violations.push_back(c.name + " contains its own vertex Q");
          continue;
        }
        auto it = std::find_if(lines.begin(), lines.end(), [&](const Group& l) { return l.rep.equals(*x, points.tol()); });
        if (it == lines.end()) {
          lines.push_back({*x, {idx}});
        } else {
          it->members.push_back(idx);
        }
      }
      for (const auto& l : lines) c.line_counts.push_back(l.members.size());
      bool two_by_two = lines.size() == 2 && lines[0].members.size() == 2 && lines[1].members.size() == 2;
      if (!two_by_two) rep.violations.push_back(c.name + " points do not split 2+2 over two lines through Q");
    }
    rep.carriers.push_back(std::move(c));
  }
  rep.passed = rep.violations.empty();
  return rep;
}

}  // namespace apolar
