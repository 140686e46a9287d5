#pragma once

#include <string>
#include <vector>

#include "apolar/groebner.hpp"
#include "apolar/poly.hpp"

namespace apolar {

enum class FamilyKind { kM1, kM2, kM3, kGeneral, kMonomialPowerSum };

/// One of the structured form families together with its parameters.
///  m1:   x^2 (y1^2+...+yn^2)
///  m2:   x1 x2 (y1^2+...+yn^2), ideal parameters alpha_i, beta_i (i = 2..n)
///  m3:   (x1^2+x2^2+x3^2)(y1^2+...+yn^2)
///  general(m, n): (x1^2+...+xm^2)(y1^2+...+yn^2)
///  monomial_powersum(a, b, n): x1^a1 ... xm^am (y1^b+...+yn^b)
struct FamilySpec {
  FamilyKind kind = FamilyKind::kM1;
  int m = 1;
  int n = 2;
  /// m1 only: use the ideal whose points include [1:1:0:...:0].
  bool variant = false;
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;
  std::vector<int> a;
  int b = 2;

  static FamilySpec m1(int n, bool variant = false);
  /// Default parameters alpha_i = 1, beta_i = 1 + 1/i.
  static FamilySpec m2(int n);
  static FamilySpec m2(int n, std::vector<Scalar> alpha, std::vector<Scalar> beta);
  static FamilySpec m3(int n);
  static FamilySpec general(int m, int n);
  static FamilySpec monomial_powersum(std::vector<int> a, int b, int n);

  /// Throws kInvalidSpec naming the violated constraint.
  void validate() const;
  VarAlphabet alphabet() const { return {m, n, 0}; }
  std::string kind_name() const;
  std::string describe() const;
};

FamilySpec parse_family(const std::string& kind, int m, int n, const std::vector<int>& a, int b,
                        const std::vector<Scalar>& alpha, const std::vector<Scalar>& beta, bool variant);

/// The family's form F (in the x/y alphabet).
Polynomial family_form(const FamilySpec& spec);
/// y1^2 + ... + yn^2 style quadric over the alphabet, on the given block.
Polynomial sum_of_squares(const VarAlphabet& alphabet, bool y_block, Side side);
/// Point count of the family's explicit construction.
long claimed_points(const FamilySpec& spec);

}  // namespace apolar
