#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/poly.hpp"

namespace apolar {

enum class OrderKind { kLex, kGrevlex, kBlock };

/// Monomial order over variable indices. `priority` lists variables from
/// most to least significant. Block orders compare the eliminated block
/// first (degree, then grevlex) and the remaining block second.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::vector<std::size_t> priority);
  static MonomialOrder grevlex(std::vector<std::size_t> priority);
  /// Elimination order for the variables in `eliminate`.
  static MonomialOrder block(std::size_t nvars, const std::vector<std::size_t>& eliminate);

  OrderKind kind() const { return kind_; }
  std::size_t num_vars() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::uint32_t eliminated_mask() const { return eliminated_; }

  /// -1/0/+1.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  int grevlex_part(const Monomial& a, const Monomial& b, bool in_block, bool block_value) const;

  OrderKind kind_ = OrderKind::kGrevlex;
  std::vector<std::size_t> priority_;
  std::uint32_t eliminated_ = 0;
};

/// Finite generating set. Generators are stored nonzero.
struct Ideal {
  VarAlphabet alphabet{};
  std::vector<Polynomial> generators;

  Ideal() = default;
  Ideal(VarAlphabet a, std::vector<Polynomial> gens);
  bool is_homogeneous() const;
  bool is_zero() const { return generators.empty(); }
  Side side() const { return generators.empty() ? Side::kOperator : generators.front().side(); }
  /// Generators sorted by descending lex leading monomial, each monic.
  Ideal canonical() const;
};

unsigned default_degree_cap();
void set_default_degree_cap(unsigned cap);

struct GroebnerOptions {
  unsigned max_degree = default_degree_cap();
  /// Per-variable weights used for pair selection and the cap; empty means
  /// weight 1 for regular variables and 0 for auxiliary ones.
  std::vector<unsigned> weights;
};

/// Reduced Groebner basis. `basis` holds canonical polynomials; the order
/// sorted term lists are kept for fast reduction.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(VarAlphabet alphabet, MonomialOrder order, std::vector<std::vector<Term>> sorted, Side side);

  const VarAlphabet& alphabet() const { return alphabet_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  const std::vector<std::vector<Term>>& sorted_terms() const { return sorted_; }
  bool is_unit() const;
  int max_degree() const;

 private:
  VarAlphabet alphabet_{};
  MonomialOrder order_;
  std::vector<std::vector<Term>> sorted_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leading_;
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& opts = {});
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);
bool ideal_member(const Polynomial& f, const GroebnerBasis& g);
/// Monomial ideal of leading monomials.
Ideal initial_ideal(const GroebnerBasis& g);

/// Leading monomial of f under `order` (f nonzero).
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::size_t>& keep, const GroebnerOptions& opts = {});
Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});
Ideal colon(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});
/// Exact quotient h / g; throws if g does not divide h.
Polynomial exact_divide(const Polynomial& h, const Polynomial& g);

/// a subset of b.
bool ideal_contains(const Ideal& b, const Ideal& a, const GroebnerOptions& opts = {});
bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});
/// Minimal homogeneous generators, degree by degree.
Ideal minimal_generators(const Ideal& ideal, const GroebnerOptions& opts = {});

struct HilbertFunction {
  std::vector<long> values;
  std::optional<int> stabilized_at;
  std::optional<long> stable_value;

  long at(int d) const;
  long sum() const;
};

/// Counts of standard monomials per degree, 0..max_deg.
HilbertFunction hilbert_function(const Ideal& ideal, const MonomialOrder& order, int max_deg,
                                 const GroebnerOptions& opts = {});
HilbertFunction hilbert_function(const GroebnerBasis& g, int max_deg);
/// Hilbert function of T/I for a zero-dimensional affine cone: computed
/// until it vanishes (artinian) or stabilizes (points).
HilbertFunction hilbert_function_auto(const Ideal& ideal, const GroebnerOptions& opts = {});

/// Krull dimension of the quotient ring (from the initial ideal).
int krull_dimension(const GroebnerBasis& g);
/// Number of points (with multiplicity) of a projective scheme of dimension 0.
long degree_of_points(const Ideal& ideal, const GroebnerOptions& opts = {});

}  // namespace apolar
