#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "apolar/poly.hpp"
#include "apolar/scalar.hpp"

namespace apolar {

/// Dense exact matrix over Q(i), row-major.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ScalarMatrix identity(std::size_t n);
  static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> column(std::size_t j) const;

  ScalarMatrix transpose() const;
  ScalarMatrix operator*(const ScalarMatrix& o) const;
  std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  bool is_identity() const;
  Scalar trace() const;

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; pivot columns chosen left to right by first
/// nonzero entry.
struct Rref {
  ScalarMatrix matrix;
  std::vector<std::size_t> pivots;
};
Rref rref(ScalarMatrix m);
std::size_t rank(const ScalarMatrix& m);
/// Kernel basis as the rows of a matrix in reduced echelon form.
/// Kernel basis as the rows of the result, in reduced echelon form.
ScalarMatrix kernel(const ScalarMatrix& m);
ScalarMatrix inverse(const ScalarMatrix& m);
Scalar determinant(ScalarMatrix m);

struct LinearSolution {
  std::vector<Scalar> x;
  /// False when free variables exist (they are set to zero).
  bool unique = true;
};
/// Solves A x = b exactly; throws kInconsistentSystem when b is outside the
/// column span.
LinearSolution solve(const ScalarMatrix& a, const std::vector<Scalar>& b);

/// x_i -> sum_j A(i, j) x_j over the whole alphabet.
Polynomial linear_substitute(const Polynomial& f, const ScalarMatrix& a);

/// Dense univariate polynomial, coefficients from the constant term up.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& leading() const { return c_.back(); }
  UniPoly derivative() const;
  UniPoly monic() const;
  Scalar evaluate(const Scalar& x) const;
  std::string to_string(const std::string& var = "z") const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Scalar> c_;
};

UniPoly poly_rem(const UniPoly& a, const UniPoly& b);
/// Monic gcd.
UniPoly poly_gcd(UniPoly a, UniPoly b);
/// gcd(p, p') is constant.
bool is_squarefree(const UniPoly& p);
/// Characteristic polynomial det(zI - A) by Faddeev-LeVerrier.
UniPoly charpoly(const ScalarMatrix& a);

/// Row echelon over sparse vectors indexed by monomials. Each stored row
/// has a distinct pivot, its lex-leading monomial.
class IncrementalEchelon {
 public:
  /// Reduces v against the stored rows.
  Polynomial reduce(Polynomial v) const;
  /// Inserts v if independent of the stored rows; returns whether it was.
  bool insert(const Polynomial& v);
  std::size_t size() const { return rows_.size(); }

 private:
  std::unordered_map<Monomial, Polynomial, MonomialHash> rows_;
};

}  // namespace apolar
