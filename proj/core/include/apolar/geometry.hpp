#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/family.hpp"
#include "apolar/groebner.hpp"
#include "apolar/linalg.hpp"

namespace apolar {

enum class PointMode { kExact, kApprox };

inline constexpr double kDefaultPointTol = 1e-9;

using ComplexVec = std::vector<std::complex<double>>;

/// Projective point, normalized so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  static ProjPoint exact(std::vector<Scalar> coords);
  /// Coordinates below `zero_tol` in modulus (relative to the largest) are
  /// treated as zero when picking the normalizing coordinate.
  static ProjPoint approx(ComplexVec coords, double zero_tol = 1e-12);

  PointMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == PointMode::kExact; }
  std::size_t size() const { return numeric_.size(); }
  const std::vector<Scalar>& coords() const;
  const ComplexVec& numeric() const { return numeric_; }

  /// Exact comparison when both are exact, else max coordinate distance < tol.
  bool equals(const ProjPoint& o, double tol = kDefaultPointTol) const;
  std::string to_string() const;

 private:
  PointMode mode_ = PointMode::kExact;
  std::vector<Scalar> exact_;
  ComplexVec numeric_;
};

/// Finite set of distinct points over an alphabet.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(VarAlphabet alphabet, double tol = kDefaultPointTol) : alphabet_(alphabet), tol_(tol) {}

  const VarAlphabet& alphabet() const { return alphabet_; }
  double tol() const { return tol_; }
  const std::vector<ProjPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool is_exact() const;
  /// Adds p unless an equal point is present; returns whether it was added.
  bool add(ProjPoint p);
  bool contains(const ProjPoint& p) const;
  /// All points converted to approx mode.
  PointSet to_approx() const;

 private:
  VarAlphabet alphabet_{};
  double tol_ = kDefaultPointTol;
  std::vector<ProjPoint> points_;
};

/// Degreewise interpolation: kernels of the evaluation matrices trimmed to
/// minimal generators, up to one past the regularity index.
Ideal ideal_of_points(const PointSet& points, const GroebnerOptions& opts = {});

/// HF(X, d) = rank of the evaluation matrix in degree d (numeric rank with
/// relative threshold for approx sets).
std::vector<long> hf_of_points(const PointSet& points, int max_deg);

enum class Block { kX, kY };

/// Removes the coordinates of one block. Throws kForbiddenPoint when a point
/// lies entirely inside the dropped block.
PointSet project_points(const PointSet& points, Block drop);
/// Removes arbitrary coordinates (alphabet shrinks accordingly).
PointSet project_coordinates(const PointSet& points, const std::vector<std::size_t>& drop);

/// p -> M p for every point.
PointSet transform_points(const PointSet& points, const ScalarMatrix& m);
PointSet transform_points(const PointSet& points, const std::vector<ComplexVec>& m);
/// Ideal of M(X) from the ideal of X: generators substituted with M^{-1}.
Ideal transform_ideal(const Ideal& ideal, const ScalarMatrix& m);

/// Block diagonal matrix diag(a, b) with a acting on the X-block.
ScalarMatrix block_diag(const ScalarMatrix& a, const ScalarMatrix& b);

/// (I+K)(I-K)^{-1} for the skew matrix with the given strictly upper
/// triangular entries (row-major, n(n-1)/2 of them).
ScalarMatrix cayley_orthogonal(const std::vector<Scalar>& params, int n);
bool is_orthogonal(const ScalarMatrix& o);
/// Seeded small rational Cayley parameters.
std::vector<Scalar> random_cayley_params(int n, std::uint64_t seed);

/// Columns of O as points of P^{n-1}.
PointSet orthogonal_to_apolar_set(const ScalarMatrix& o);

struct RotationResult {
  PointSet points;
  ScalarMatrix rotation;  // the n x n block acting on Y
  int attempts = 0;
};

/// Acts with a seeded Cayley rotation on the Y-block of every point until
/// all Y-coordinates are nonzero. F must be invariant under the action.
RotationResult rotate_generic(const PointSet& points, const Polynomial& f, std::uint64_t seed, int max_attempts = 64);

struct Carrier {
  std::string name;
  std::vector<std::string> forms;
  std::size_t count = 0;
  std::vector<std::size_t> line_counts;  // planes only: points per line through Q_i
};

struct IncidenceReport {
  std::string family;
  bool passed = false;
  std::vector<Carrier> carriers;
  std::vector<std::size_t> residual;  // indices of points on no carrier
  std::vector<std::string> violations;
};

/// Lines through [1:0:...:0] (m = 1) or planes through V(Y) (m = 2): groups
/// points by the class of their Y-part and checks the 3-per-line or
/// 4-per-plane-on-two-lines pattern.
IncidenceReport incidence_structure(const PointSet& points, const FamilySpec& spec);

/// Numeric rank with a relative singular value threshold.
long numeric_rank(const std::vector<ComplexVec>& rows, double rel_tol = 1e-9);

}  // namespace apolar
