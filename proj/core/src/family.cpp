#include "apolar/family.hpp"

#include <algorithm>
#include <numeric>

#include "apolar/geometry.hpp"
#include "apolar/waring.hpp"

namespace apolar {

FamilySpec FamilySpec::m1(int n, bool variant) {
  FamilySpec s;
  s.kind = FamilyKind::kM1;
  s.m = 1;
  s.n = n;
  s.variant = variant;
  return s;
}

FamilySpec FamilySpec::m2(int n) {
  std::vector<Scalar> alpha, beta;
  for (int i = 2; i <= n; ++i) {
    alpha.emplace_back(1);
    beta.push_back(Scalar(1) + Scalar::rational(1, i));
  }
  return m2(n, std::move(alpha), std::move(beta));
}

FamilySpec FamilySpec::m2(int n, std::vector<Scalar> alpha, std::vector<Scalar> beta) {
  FamilySpec s;
  s.kind = FamilyKind::kM2;
  s.m = 2;
  s.n = n;
  s.alpha = std::move(alpha);
  s.beta = std::move(beta);
  return s;
}

FamilySpec FamilySpec::m3(int n) {
  FamilySpec s;
  s.kind = FamilyKind::kM3;
  s.m = 3;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::general(int m, int n) {
  FamilySpec s;
  s.kind = FamilyKind::kGeneral;
  s.m = m;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::monomial_powersum(std::vector<int> a, int b, int n) {
  FamilySpec s;
  s.kind = FamilyKind::kMonomialPowerSum;
  s.m = static_cast<int>(a.size());
  s.n = n;
  s.a = std::move(a);
  s.b = b;
  return s;
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::kInvalidSpec, what); }

}  // namespace

void FamilySpec::validate() const {
  auto need_n2 = [&] {
    if (n < 2) invalid(kind_name() + " needs n >= 2");
  };
  switch (kind) {
    case FamilyKind::kM1:
      need_n2();
      if (m != 1) invalid("m1 has m = 1");
      break;
    case FamilyKind::kM2: {
      need_n2();
      if (m != 2) invalid("m2 has m = 2");
      std::size_t k = static_cast<std::size_t>(n - 1);
      if (alpha.size() != k || beta.size() != k) invalid("m2 needs n-1 alpha and n-1 beta parameters (i = 2..n)");
      Scalar sa, sb;
      for (std::size_t i = 0; i < k; ++i) {
        if (alpha[i].is_zero()) invalid("m2 needs alpha_" + std::to_string(i + 2) + " != 0");
        if (beta[i].is_zero()) invalid("m2 needs beta_" + std::to_string(i + 2) + " != 0");
        sa += alpha[i];
        sb += beta[i];
      }
      if (sa.is_zero()) invalid("m2 needs alpha_2 + ... + alpha_n != 0");
      if (sb.is_zero()) invalid("m2 needs beta_2 + ... + beta_n != 0");
      break;
    }
    case FamilyKind::kM3:
      need_n2();
      if (m != 3) invalid("m3 has m = 3");
      break;
    case FamilyKind::kGeneral:
      if (m < 3 || n < m) invalid("general needs n >= m >= 3");
      break;
    case FamilyKind::kMonomialPowerSum:
      need_n2();
      if (a.empty()) invalid("monomial_powersum needs at least one exponent");
      if (static_cast<int>(a.size()) != m) invalid("monomial_powersum m must equal the number of exponents");
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1) invalid("monomial_powersum exponents must be positive");
        if (i > 0 && a[i] < a[i - 1]) invalid("monomial_powersum needs a_1 <= a_2 <= ... <= a_m");
      }
      if (b < 2) invalid("monomial_powersum needs b >= 2");
      if (a.front() + 1 < b) invalid("monomial_powersum needs a_1 + 1 >= b");
      break;
  }
  VarAlphabet alpha_check = alphabet();
  try {
    alpha_check.validate();
  } catch (const Error& e) {
    invalid(e.what());
  }
}

std::string FamilySpec::kind_name() const {
  switch (kind) {
    case FamilyKind::kM1: return "m1";
    case FamilyKind::kM2: return "m2";
    case FamilyKind::kM3: return "m3";
    case FamilyKind::kGeneral: return "general";
    case FamilyKind::kMonomialPowerSum: return "monomial_powersum";
  }
  return "unknown";
}

std::string FamilySpec::describe() const {
  std::string out = kind_name();
  switch (kind) {
    case FamilyKind::kM1:
      out += "(n=" + std::to_string(n) + (variant ? ", variant" : "") + ")";
      break;
    case FamilyKind::kM2: {
      out += "(n=" + std::to_string(n) + ", alpha=[";
      for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + alpha[i].to_string();
      out += "], beta=[";
      for (std::size_t i = 0; i < beta.size(); ++i) out += (i ? "," : "") + beta[i].to_string();
      out += "])";
      break;
    }
    case FamilyKind::kM3:
      out += "(n=" + std::to_string(n) + ")";
      break;
    case FamilyKind::kGeneral:
      out += "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
      break;
    case FamilyKind::kMonomialPowerSum: {
      out += "(a=[";
      for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
      out += "], b=" + std::to_string(b) + ", n=" + std::to_string(n) + ")";
      break;
    }
  }
  return out;
}

FamilySpec parse_family(const std::string& kind, int m, int n, const std::vector<int>& a, int b,
                        const std::vector<Scalar>& alpha, const std::vector<Scalar>& beta, bool variant) {
  FamilySpec s;
  if (kind == "m1") {
    s = FamilySpec::m1(n, variant);
  } else if (kind == "m2") {
    if (alpha.empty() && beta.empty()) {
      s = FamilySpec::m2(n);
    } else {
      s = FamilySpec::m2(n, alpha, beta);
    }
  } else if (kind == "m3") {
    s = FamilySpec::m3(n);
  } else if (kind == "general") {
    s = FamilySpec::general(m, n);
  } else if (kind == "monomial_powersum" || kind == "mps") {
    s = FamilySpec::monomial_powersum(a, b, n);
  } else {
    throw Error(Errc::kInvalidSpec, "unknown family '" + kind + "'");
  }
  s.validate();
  return s;
}

Polynomial sum_of_squares(const VarAlphabet& alphabet, bool y_block, Side side) {
  Polynomial s(alphabet, side);
  int count = y_block ? alphabet.n : alphabet.m;
  for (int k = 0; k < count; ++k) {
    std::size_t v = y_block ? alphabet.y(k) : alphabet.x(k);
    s += Polynomial::variable(alphabet, side, v).pow(2);
  }
  return s;
}

Polynomial family_form(const FamilySpec& spec) {
  spec.validate();
  VarAlphabet a = spec.alphabet();
  auto x = [&](int i) { return Polynomial::variable(a, Side::kForm, a.x(i)); };
  Polynomial ysq = sum_of_squares(a, true, Side::kForm);
  switch (spec.kind) {
    case FamilyKind::kM1:
      return x(0).pow(2) * ysq;
    case FamilyKind::kM2:
      return x(0) * x(1) * ysq;
    case FamilyKind::kM3:
    case FamilyKind::kGeneral:
      return sum_of_squares(a, false, Side::kForm) * ysq;
    case FamilyKind::kMonomialPowerSum: {
      Polynomial mono = Polynomial::constant(a, Side::kForm, Scalar(1));
      for (int i = 0; i < spec.m; ++i) mono = mono * x(i).pow(static_cast<unsigned>(spec.a[static_cast<std::size_t>(i)]));
      Polynomial ysum(a, Side::kForm);
      for (int j = 0; j < spec.n; ++j) ysum += Polynomial::variable(a, Side::kForm, a.y(j)).pow(static_cast<unsigned>(spec.b));
      return mono * ysum;
    }
  }
  throw Error(Errc::kInvalidSpec, "unknown family");
}

long claimed_points(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kM1: return 3L * spec.n;
    case FamilyKind::kM2: return 4L * spec.n;
    case FamilyKind::kM3: return 6L * spec.n;
    case FamilyKind::kGeneral: return 2L * spec.m * spec.n;
    case FamilyKind::kMonomialPowerSum: {
      long p = spec.n;
      for (int e : spec.a) p *= e + 1;
      return p;
    }
  }
  return 0;
}

// ------------------------------------------------------------ constructions

namespace {

Polynomial op_var(const VarAlphabet& a, std::size_t v) { return Polynomial::variable(a, Side::kOperator, v); }

std::vector<Polynomial> y_products(const VarAlphabet& a) {
  std::vector<Polynomial> out;
  for (int i = 0; i < a.n; ++i) {
    for (int j = i + 1; j < a.n; ++j) out.push_back(op_var(a, a.y(i)) * op_var(a, a.y(j)));
  }
  return out;
}

// Y1^2 + ... + Y_{n-1}^2 - (n-1) Yn^2
Polynomial balanced_quadric(const VarAlphabet& a) {
  Polynomial q(a, Side::kOperator);
  for (int j = 0; j + 1 < a.n; ++j) q += op_var(a, a.y(j)).pow(2);
  q -= op_var(a, a.y(a.n - 1)).pow(2) * Scalar(a.n - 1);
  return q;
}

Ideal m1_ideal(const FamilySpec& s) {
  VarAlphabet a = s.alphabet();
  std::vector<Polynomial> gens = y_products(a);
  Polynomial x = op_var(a, a.x(0));
  if (s.variant) {
    Polynomial ysum(a, Side::kOperator);
    for (int j = 0; j < a.n; ++j) ysum += op_var(a, a.y(j));
    gens.push_back(x.pow(3) - ysum * balanced_quadric(a));
  } else {
    gens.push_back(x.pow(3) + x * balanced_quadric(a));
  }
  return Ideal(a, std::move(gens));
}

Ideal m2_ideal(const FamilySpec& s) {
  VarAlphabet a = s.alphabet();
  std::vector<Polynomial> gens = y_products(a);
  for (int which = 0; which < 2; ++which) {
    const auto& params = which == 0 ? s.alpha : s.beta;
    Polynomial q = op_var(a, a.x(which)).pow(2);
    Polynomial y1sq = op_var(a, a.y(0)).pow(2);
    for (int i = 1; i < a.n; ++i) q += (y1sq - op_var(a, a.y(i)).pow(2)) * params[static_cast<std::size_t>(i - 1)];
    gens.push_back(q);
  }
  return Ideal(a, std::move(gens));
}

Ideal m3_ideal(const VarAlphabet& a, int x1, int x2, int x3) {
  std::vector<Polynomial> gens = y_products(a);
  Polynomial X1 = op_var(a, a.x(x1)), X2 = op_var(a, a.x(x2)), X3 = op_var(a, a.x(x3));
  gens.push_back(X1 * X2);
  gens.push_back(X1 * X3);
  gens.push_back(X2.pow(2) - X3.pow(2));
  gens.push_back(X1.pow(2) - X2.pow(2) + balanced_quadric(a));
  return Ideal(a, std::move(gens));
}

// Q_j = Xj^{aj+1} + (Y1^c + ... + Yn^c)(-(n-1) Y1^b + Y2^b + ... + Yn^b),
// c = aj + 1 - b, on the X-variables listed in xs.
Ideal powersum_ideal(const VarAlphabet& a, const std::vector<int>& exps, int b, const std::vector<int>& xs) {
  std::vector<Polynomial> gens = y_products(a);
  Polynomial tail = op_var(a, a.y(0)).pow(static_cast<unsigned>(b)) * Scalar(-(a.n - 1));
  for (int j = 1; j < a.n; ++j) tail += op_var(a, a.y(j)).pow(static_cast<unsigned>(b));
  for (std::size_t k = 0; k < exps.size(); ++k) {
    int c = exps[k] + 1 - b;
    Polynomial ysum(a, Side::kOperator);
    for (int j = 0; j < a.n; ++j) ysum += op_var(a, a.y(j)).pow(static_cast<unsigned>(c));
    gens.push_back(op_var(a, a.x(xs[k])).pow(static_cast<unsigned>(exps[k] + 1)) + ysum * tail);
  }
  return Ideal(a, std::move(gens));
}

Ideal with_other_x(Ideal ideal, const std::vector<int>& used) {
  const VarAlphabet& a = ideal.alphabet;
  for (int i = 0; i < a.m; ++i) {
    if (std::find(used.begin(), used.end(), i) == used.end()) ideal.generators.push_back(op_var(a, a.x(i)));
  }
  return ideal;
}

Ideal general_ideal(const FamilySpec& s, const GroebnerOptions& opts) {
  VarAlphabet a = s.alphabet();
  std::vector<Ideal> blocks;
  int pairs = s.m % 2 == 0 ? s.m / 2 : (s.m - 3) / 2;
  for (int k = 0; k < pairs; ++k) {
    int p = 2 * k, q = 2 * k + 1;
    Ideal prod = with_other_x(powersum_ideal(a, {1, 1}, 2, {p, q}), {p, q});
    ScalarMatrix bmat = product_to_squares(a, p, q);
    blocks.push_back(transform_ideal(prod, bmat.transpose()));
  }
  if (s.m % 2 == 1) {
    int base = s.m - 3;
    blocks.push_back(with_other_x(m3_ideal(a, base, base + 1, base + 2), {base, base + 1, base + 2}));
  }
  Ideal acc = blocks.front();
  for (std::size_t k = 1; k < blocks.size(); ++k) acc = ideal_intersect(acc, blocks[k], opts);
  return acc;
}

}  // namespace

ScalarMatrix product_to_squares(const VarAlphabet& alphabet, int i, int j) {
  ScalarMatrix b = ScalarMatrix::identity(alphabet.size());
  std::size_t vi = alphabet.x(i), vj = alphabet.x(j);
  b(vi, vi) = Scalar(1);
  b(vi, vj) = Scalar::imaginary_unit();
  b(vj, vi) = Scalar(1);
  b(vj, vj) = -Scalar::imaginary_unit();
  return b;
}

Ideal construct_minimal_apolar(const FamilySpec& spec, const GroebnerOptions& opts) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::kM1: return m1_ideal(spec);
    case FamilyKind::kM2: return m2_ideal(spec);
    case FamilyKind::kM3: return m3_ideal(spec.alphabet(), 0, 1, 2);
    case FamilyKind::kGeneral: return general_ideal(spec, opts);
    case FamilyKind::kMonomialPowerSum: {
      std::vector<int> xs(static_cast<std::size_t>(spec.m));
      std::iota(xs.begin(), xs.end(), 0);
      return powersum_ideal(spec.alphabet(), spec.a, spec.b, xs);
    }
  }
  throw Error(Errc::kInvalidSpec, "unknown family");
}

}  // namespace apolar
