#pragma once

#include <vector>

#include "apolar/groebner.hpp"
#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Apolarity pairing T_{d'} x S_{d-d'} for one degree d'.
struct CatalecticantSlice {
  int degree = 0;
  /// Rows: monomials of S_{d-d'}; columns: monomials of T_{d'} (both
  /// descending lex).
  ScalarMatrix matrix;
  std::vector<Monomial> row_basis;
  std::vector<Monomial> col_basis;
  std::size_t rank = 0;
  std::vector<Polynomial> kernel_basis;
};

CatalecticantSlice catalecticant(const Polynomial& f, int dprime);

/// Minimal homogeneous generators of F^perp, monic, sorted by descending
/// lex leading monomial.
Ideal annihilator(const Polynomial& f, const GroebnerOptions& opts = {});

/// Closed-form generators for (x1^2+...+xm^2)(y1^2+...+yn^2) (x1^2 alone
/// when m = 1).
Ideal annihilator_closed_form(int m, int n);

/// Every generator of I kills F.
bool is_apolar(const Ideal& ideal, const Polynomial& f);

/// (t o F)^perp, cross-checked against F^perp : (t).
Ideal perp_colon_linear(const Polynomial& f, const Polynomial& t, const GroebnerOptions& opts = {});

}  // namespace apolar
