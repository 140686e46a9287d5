#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolar/family.hpp"
#include "apolar/geometry.hpp"
#include "apolar/groebner.hpp"

namespace apolar {

// ---------------------------------------------------------------- construct

/// The explicit minimal apolar ideal of the family.
Ideal construct_minimal_apolar(const FamilySpec& spec, const GroebnerOptions& opts = {});

/// x1 x2 <-> x1^2 + x2^2 coordinate change on two X-variables: u1 = x_i + i x_j,
/// u2 = x_i - i x_j, identity elsewhere. F_sum(x) = F_prod(B x).
ScalarMatrix product_to_squares(const VarAlphabet& alphabet, int i, int j);

// ------------------------------------------------------------------ extract

struct CarrierCertificate {
  int carrier = 0;  // 1-based Y index
  std::string univariate;  // characteristic polynomial of the separating form
  std::string separating_form;
  long points = 0;
  bool squarefree = false;
};

struct DistinctnessCertificate {
  std::vector<CarrierCertificate> carriers;
  long degree = 0;  // degree_of_points of the ideal
  bool no_points_at_infinity = false;
  bool on_carriers = false;  // Y_i Y_j in I for all i < j
  bool passed = false;
};

struct Extraction {
  PointSet points;
  DistinctnessCertificate certificate;
  bool exact = false;
};

/// Points of a structured ideal whose points lie on the Y-coordinate
/// carriers {Y_j = 0, j != i}. Exact mode returns exact points when every
/// coordinate lies in Q(i) and otherwise falls back to floating complex.
Extraction extract_points(const Ideal& ideal, const FamilySpec& spec, PointMode mode,
                          const GroebnerOptions& opts = {});

/// Explicit family points (exact when possible), built from the
/// construction and certified through extract_points.
Extraction family_points(const FamilySpec& spec, PointMode mode, const GroebnerOptions& opts = {});

// ---------------------------------------------------------------- decompose

struct WaringTerm {
  Scalar coef;
  std::complex<double> coef_approx;
  ProjPoint point;
};

struct WaringDecomposition {
  VarAlphabet alphabet{};
  int degree = 0;
  bool exact = false;
  bool unique = true;
  std::vector<WaringTerm> terms;
  double residual = 0;
};

/// Solves sum c_i L_i^d = F for the linear forms of the points.
WaringDecomposition solve_coefficients(const PointSet& points, const Polynomial& f);

struct ResidualReport {
  bool exact = false;
  double residual = 0;
  bool passed = false;
};
ResidualReport verify_decomposition(const WaringDecomposition& d, const Polynomial& f, double tol = 1e-9);

/// Expands sum c_i L_i^d exactly (exact decompositions only).
Polynomial expand_decomposition(const WaringDecomposition& d);

// ------------------------------------------------------------------- bounds

struct EcompTrace {
  Ideal colon_ideal;  // F^perp : I
  Ideal quotient_ideal;  // (F^perp : I) + (t)
  Polynomial t;
  int e = 1;
  HilbertFunction hf;
  long sum = 0;
  long bound = 0;
  bool nonzerodivisor_checked = false;
  bool genericity_checked = false;
  std::vector<std::string> notes;
};

struct EcompOptions {
  std::optional<Ideal> points_ideal;
  std::uint64_t seed = 0;
  /// Second generic t' compared against t; skipped when false.
  bool check_genericity = true;
  GroebnerOptions groebner{};
};

/// ceil(sum_i HF(T/((F^perp : I) + (t)), i) / e).
EcompTrace ecomp_lower_bound(const Polynomial& f, const Ideal& i, const Polynomial& t, const EcompOptions& opts = {});
/// Default t = Y1 + 2 Y2 + ... + n Yn and I = (Y1, ..., Yn).
EcompTrace ecomp_lower_bound(const FamilySpec& spec, const EcompOptions& opts = {});

/// |{(l_1..l_m) : sum l_i = s, 0 <= l_i <= a_i}|.
long bounded_compositions(int m, int s, const std::vector<int>& a);

struct RecurrenceRow {
  int degree = 0;
  long engine = 0;
  long formula = 0;
};
/// HF(T/I~, l+1) = C(m,l,a)(n-1) + C(m,l+1,a) against the engine.
std::vector<RecurrenceRow> compositions_recurrence(const FamilySpec& spec, const EcompTrace& trace);

struct RankReport {
  FamilySpec spec;
  long lower = 0;
  std::string lower_provenance;
  std::optional<long> lower_strict_over;
  long upper = 0;
  std::string upper_provenance;
  std::optional<long> exact;
  std::map<std::string, std::string> certificates;
};

RankReport rank_bounds(const FamilySpec& spec, const GroebnerOptions& opts = {});

// --------------------------------------------------------------------- loci

/// Forbidden-locus membership. m2 points are read in x1 x2 coordinates
/// unless `sum_of_squares` is set.
bool forbidden_member(const ProjPoint& p, const FamilySpec& spec, bool sum_of_squares = false);

struct Witness {
  PointSet points;
  bool exact = false;
  std::string base;
  double residual = 0;
  bool contains_point = false;
  bool apolar = false;
};

/// A minimal apolar set through p (m1 and m2 only).
Witness waring_witness(const ProjPoint& p, const FamilySpec& spec, double tol = 1e-9);

/// Complex orthogonal N with first column v (v^T v = 1).
std::vector<ComplexVec> orthogonal_completion(const ComplexVec& v);
std::optional<ScalarMatrix> orthogonal_completion(const std::vector<Scalar>& v);

struct Census {
  long projected = 0;  // |W| from the extracted points
  long predicted = 0;  // 2 * number of distinct ratios
  std::vector<Scalar> ratios;  // alpha_i/beta_i (i >= 2) then sum ratio
  bool even = false;
  bool within_bound = false;
};

/// Projection of the m2 set away from the Y-block.
Census second_projection_census(const FamilySpec& spec, const GroebnerOptions& opts = {});

}  // namespace apolar
