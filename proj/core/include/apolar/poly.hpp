#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/scalar.hpp"

namespace apolar {

inline constexpr std::size_t kMaxVars = 16;

/// Which ring a polynomial lives in: forms of S (x1.., y1..) or
/// differential operators of T (X1.., Y1..).
enum class Side { kForm, kOperator };

/// Split variable alphabet: X-block of size m, Y-block of size n, then
/// `aux` auxiliary variables (t1..) used internally for eliminations.
struct VarAlphabet {
  int m = 0;
  int n = 0;
  int aux = 0;

  std::size_t size() const { return static_cast<std::size_t>(m + n + aux); }
  std::size_t x(int i) const { return static_cast<std::size_t>(i); }
  std::size_t y(int j) const { return static_cast<std::size_t>(m + j); }
  std::size_t t(int k) const { return static_cast<std::size_t>(m + n + k); }
  bool is_x(std::size_t v) const { return v < static_cast<std::size_t>(m); }
  bool is_y(std::size_t v) const { return v >= static_cast<std::size_t>(m) && v < static_cast<std::size_t>(m + n); }
  bool is_aux(std::size_t v) const { return v >= static_cast<std::size_t>(m + n); }
  /// 0-based variable index -> "x1", "Y3", "t1".
  std::string name(std::size_t v, Side side) const;
  VarAlphabet with_aux(int k) const { return {m, n, k}; }
  VarAlphabet without_aux() const { return {m, n, 0}; }
  void validate() const;

  friend bool operator==(const VarAlphabet&, const VarAlphabet&) = default;
};

/// Exponent vector with inline storage. Total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial from_exponents(std::span<const unsigned> exps);
  static Monomial variable(std::size_t nvars, std::size_t v, unsigned power = 1);

  std::size_t size() const { return size_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::vector<unsigned> exponents() const;

  bool divides(const Monomial& other) const;
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// True if only variables in [begin, end) appear.
  bool supported_in(std::size_t begin, std::size_t end) const;
  /// Variables with nonzero exponent.
  std::uint32_t support_mask() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t size_ = 0;
};

/// -1/0/+1 under pure lex with x1 > x2 > ... (variable index order).
int lex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree d in nvars variables, descending lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Sparse exact polynomial over Q(i). Terms are kept in canonical
/// descending-lex order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(VarAlphabet alphabet, Side side) : alphabet_(alphabet), side_(side) {}
  /// Takes arbitrary terms; merges duplicates and drops zeros.
  Polynomial(VarAlphabet alphabet, Side side, std::vector<Term> terms);

  static Polynomial constant(VarAlphabet alphabet, Side side, const Scalar& c);
  static Polynomial variable(VarAlphabet alphabet, Side side, std::size_t v);
  static Polynomial monomial(VarAlphabet alphabet, Side side, const Monomial& mono,
                             const Scalar& c = Scalar(1));

  const VarAlphabet& alphabet() const { return alphabet_; }
  Side side() const { return side_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  /// Set iff nonzero and every term has the same total degree.
  std::optional<int> homogeneous_degree() const { return homogeneous_degree_; }
  bool is_homogeneous() const { return homogeneous_degree_.has_value(); }
  /// Degree in a single variable.
  unsigned degree_in(std::size_t v) const;
  bool involves(std::size_t v) const { return degree_in(v) > 0; }

  /// Leading term for descending lex (the first stored term).
  const Term& lex_leading() const { return terms_.front(); }
  Scalar coefficient(const Monomial& mono) const;

  /// Scaled so the lex-leading coefficient is 1.
  Polynomial monic() const;
  Polynomial with_side(Side side) const;
  /// Same polynomial viewed in a larger alphabet (extra aux variables).
  Polynomial embed(VarAlphabet wider) const;
  /// Drops aux variables; throws if any term uses them.
  Polynomial restrict_to(VarAlphabet narrower) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;
  Polynomial mul_monomial(const Monomial& mono, const Scalar& c) const;

  /// Equal as polynomials (alphabet and terms); the side is ignored so
  /// that an operator reread as a form still compares equal.
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Scalar evaluate(std::span<const Scalar> point) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
  /// Substitutes value for variable v.
  Polynomial substitute(std::size_t v, const Scalar& value) const;

  /// "x1^2*y1^2 + x1^2*y2^2"; compact drops the spaces: "Y1^2-Y2^2".
  std::string to_string(bool compact = false) const;

 private:
  void normalize();

  VarAlphabet alphabet_{};
  Side side_ = Side::kForm;
  std::vector<Term> terms_;
  std::optional<int> homogeneous_degree_;
};

/// Parses an expression over x1..xm, y1..yn (forms) or X1.., Y1..
/// (operators); `x`/`X` alone abbreviate x1 when m == 1. Integers,
/// rationals p/q, decimals, `i`, + - * / ^ and parentheses are accepted.
/// Mixed-case input is rejected. Constants take `default_side`.
Polynomial parse_poly(std::string_view text, const VarAlphabet& alphabet,
                      Side default_side = Side::kForm);

/// Apolarity action g o F: each operator monomial differentiates.
Polynomial apply_diff(const Polynomial& g, const Polynomial& f);

}  // namespace apolar
