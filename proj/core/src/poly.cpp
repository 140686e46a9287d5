#include "apolar/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace apolar {

std::string VarAlphabet::name(std::size_t v, Side side) const {
  bool upper = side == Side::kOperator;
  if (is_x(v)) return std::string(upper ? "X" : "x") + std::to_string(v + 1);
  if (is_y(v)) return std::string(upper ? "Y" : "y") + std::to_string(v - m + 1);
  return std::string(upper ? "T" : "t") + std::to_string(v - m - n + 1);
}

void VarAlphabet::validate() const {
  if (m < 0 || n < 0 || aux < 0) throw Error(Errc::kInvalidArgument, "alphabet sizes must be non-negative");
  if (m + n < 1) throw Error(Errc::kInvalidArgument, "alphabet needs at least one variable");
  if (size() > kMaxVars) {
    throw Error(Errc::kInvalidArgument,
                "alphabet too large: at most " + std::to_string(kMaxVars) + " variables");
  }
}

Monomial::Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw Error(Errc::kInvalidArgument, "too many variables");
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  Monomial mono(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) mono.set(i, exps[i]);
  return mono;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t v, unsigned power) {
  Monomial mono(nvars);
  mono.set(v, power);
  return mono;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xffffu) throw Error(Errc::kInvalidArgument, "exponent too large");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<std::uint16_t>(e);
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exp_.begin(), exp_.begin() + size_);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - other.exp_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] + other.exp_[i]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

bool Monomial::supported_in(std::size_t begin, std::size_t end) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] != 0 && (i < begin || i >= end)) return false;
  }
  return true;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

std::size_t Monomial::hash() const {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u + exp_[i];
  return h;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

void fill_monomials(std::size_t nvars, std::size_t var, unsigned remaining, Monomial& cur,
                    std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(var, e);
    fill_monomials(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

bool lex_greater(const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; }

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  fill_monomials(nvars, 0, d, cur, out);
  return out;
}

Polynomial::Polynomial(VarAlphabet alphabet, Side side, std::vector<Term> terms)
    : alphabet_(alphabet), side_(side), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.mono.size() != alphabet_.size()) throw Error(Errc::kDimensionMismatch, "monomial length does not match alphabet");
  }
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), lex_greater);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coef += t.coef;
    } else {
      if (!merged.empty() && merged.back().coef.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coef.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
  homogeneous_degree_.reset();
  if (!terms_.empty()) {
    unsigned d = terms_.front().mono.degree();
    bool homog = std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
    if (homog) homogeneous_degree_ = static_cast<int>(d);
  }
}

Polynomial Polynomial::constant(VarAlphabet alphabet, Side side, const Scalar& c) {
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back({Monomial(alphabet.size()), c});
  return Polynomial(alphabet, side, std::move(terms));
}

Polynomial Polynomial::variable(VarAlphabet alphabet, Side side, std::size_t v) {
  if (v >= alphabet.size()) throw Error(Errc::kInvalidArgument, "variable index out of range");
  return monomial(alphabet, side, Monomial::variable(alphabet.size(), v));
}

Polynomial Polynomial::monomial(VarAlphabet alphabet, Side side, const Monomial& mono, const Scalar& c) {
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back({mono, c});
  return Polynomial(alphabet, side, std::move(terms));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

unsigned Polynomial::degree_in(std::size_t v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

Scalar Polynomial::coefficient(const Monomial& mono) const {
  for (const auto& t : terms_) {
    if (t.mono == mono) return t.coef;
  }
  return Scalar(0);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial r = *this;
  Scalar inv = terms_.front().coef.inverse();
  for (auto& t : r.terms_) t.coef *= inv;
  return r;
}

Polynomial Polynomial::with_side(Side side) const {
  Polynomial r = *this;
  r.side_ = side;
  return r;
}

Polynomial Polynomial::embed(VarAlphabet wider) const {
  if (wider.m != alphabet_.m || wider.n != alphabet_.n || wider.aux < alphabet_.aux) {
    throw Error(Errc::kAlphabetMismatch, "cannot embed into a narrower alphabet");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial mono(wider.size());
    for (std::size_t i = 0; i < t.mono.size(); ++i) mono.set(i, t.mono[i]);
    terms.push_back({mono, t.coef});
  }
  return Polynomial(wider, side_, std::move(terms));
}

Polynomial Polynomial::restrict_to(VarAlphabet narrower) const {
  if (narrower.m != alphabet_.m || narrower.n != alphabet_.n || narrower.aux > alphabet_.aux) {
    throw Error(Errc::kAlphabetMismatch, "cannot restrict to a wider alphabet");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial mono(narrower.size());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (i >= narrower.size()) {
        if (t.mono[i] != 0) throw Error(Errc::kAlphabetMismatch, "polynomial uses a dropped variable");
      } else {
        mono.set(i, t.mono[i]);
      }
    }
    terms.push_back({mono, t.coef});
  }
  return Polynomial(narrower, side_, std::move(terms));
}

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.alphabet() != b.alphabet()) throw Error(Errc::kAlphabetMismatch, "polynomials live over different alphabets");
}

Side merged_side(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant()) return b.side();
  return a.side();
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(*this, o);
  side_ = merged_side(*this, o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == o.terms_.size()) {
      c = 1;
    } else {
      c = lex_compare(terms_[i].mono, o.terms_[j].mono);
    }
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) merged.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    homogeneous_degree_.reset();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      acc[s.mono * t.mono] += s.coef * t.coef;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, coef] : acc) {
    if (!coef.is_zero()) terms.push_back({mono, std::move(coef)});
  }
  return Polynomial(a.alphabet_, merged_side(a, b), std::move(terms));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(alphabet_, side_, Scalar(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mul_monomial(const Monomial& mono, const Scalar& c) const {
  Polynomial r = *this;
  if (c.is_zero()) return Polynomial(alphabet_, side_);
  for (auto& t : r.terms_) {
    t.mono = t.mono * mono;
    t.coef *= c;
  }
  r.normalize();
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.alphabet_ != b.alphabet_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != alphabet_.size()) throw Error(Errc::kDimensionMismatch, "point length does not match alphabet");
  Scalar sum(0);
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (std::size_t i = 0; i < point.size() && !v.is_zero(); ++i) {
      if (t.mono[i] != 0) v *= point[i].pow(t.mono[i]);
    }
    sum += v;
  }
  return sum;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != alphabet_.size()) throw Error(Errc::kDimensionMismatch, "point length does not match alphabet");
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.coef.to_complex();
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::size_t v, const Scalar& value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial mono = t.mono;
    unsigned e = mono[v];
    mono.set(v, 0);
    terms.push_back({mono, t.coef * value.pow(e)});
  }
  return Polynomial(alphabet_, side_, std::move(terms));
}

namespace {

std::string monomial_string(const Monomial& mono, const VarAlphabet& alphabet, Side side) {
  std::string out;
  for (std::size_t v = 0; v < mono.size(); ++v) {
    if (mono[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += alphabet.name(v, side);
    if (mono[v] > 1) out += '^' + std::to_string(mono[v]);
  }
  return out;
}

std::string term_string(const Term& t, const VarAlphabet& alphabet, Side side) {
  if (t.mono.is_one()) {
    std::string c = t.coef.to_string();
    bool composite = !t.coef.is_real() && sgn(t.coef.re()) != 0;
    return composite ? "(" + c + ")" : c;
  }
  std::string mono = monomial_string(t.mono, alphabet, side);
  if (t.coef.is_one()) return mono;
  if (t.coef == Scalar(-1)) return "-" + mono;
  bool composite = !t.coef.is_real() && sgn(t.coef.re()) != 0;
  std::string c = t.coef.to_string();
  return (composite ? "(" + c + ")" : c) + "*" + mono;
}

}  // namespace

std::string Polynomial::to_string(bool compact) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    std::string t = term_string(terms_[k], alphabet_, side_);
    if (k == 0) {
      out = t;
      continue;
    }
    bool neg = t.front() == '-';
    if (compact) {
      out += neg ? t : "+" + t;
    } else {
      out += neg ? " - " + t.substr(1) : " + " + t;
    }
  }
  return out;
}

Polynomial apply_diff(const Polynomial& g, const Polynomial& f) {
  if (g.alphabet() != f.alphabet()) throw Error(Errc::kAlphabetMismatch, "operator and form use different alphabets");
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& gt : g.terms()) {
    for (const auto& ft : f.terms()) {
      if (!gt.mono.divides(ft.mono)) continue;
      mpz_class factor = 1;
      for (std::size_t v = 0; v < ft.mono.size(); ++v) {
        for (unsigned k = 0; k < gt.mono[v]; ++k) factor *= ft.mono[v] - k;
      }
      acc[ft.mono / gt.mono] += gt.coef * ft.coef * Scalar(mpq_class(factor));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, coef] : acc) {
    if (!coef.is_zero()) terms.push_back({mono, std::move(coef)});
  }
  return Polynomial(f.alphabet(), f.side(), std::move(terms));
}

}  // namespace apolar
