#include <algorithm>
#include <bit>
#include <unordered_set>

#include "apolar/groebner.hpp"

namespace apolar {

long HilbertFunction::at(int d) const {
  if (d < 0) return 0;
  if (static_cast<std::size_t>(d) < values.size()) return values[static_cast<std::size_t>(d)];
  if (stable_value) return *stable_value;
  throw Error(Errc::kInvalidArgument, "Hilbert function not computed at degree " + std::to_string(d));
}

long HilbertFunction::sum() const {
  if (stable_value && *stable_value != 0) throw Error(Errc::kInvalidArgument, "Hilbert function sum diverges");
  long s = 0;
  for (long v : values) s += v;
  return s;
}

namespace {

class StandardMonomials {
 public:
  explicit StandardMonomials(const GroebnerBasis& g) : lead_(g.leading_monomials()), nvars_(g.alphabet().size()) {
    for (const auto& m : lead_) masks_.push_back(m.support_mask());
    if (!g.is_unit()) level_.push_back(Monomial(nvars_));
  }

  long count() const { return static_cast<long>(level_.size()); }

  void advance() {
    std::unordered_set<Monomial, MonomialHash> next;
    for (const auto& m : level_) {
      for (std::size_t v = 0; v < nvars_; ++v) {
        Monomial c = m * Monomial::variable(nvars_, v);
        if (!next.count(c) && standard(c)) next.insert(c);
      }
    }
    level_.assign(next.begin(), next.end());
  }

 private:
  bool standard(const Monomial& m) const {
    std::uint32_t mm = m.support_mask();
    for (std::size_t k = 0; k < lead_.size(); ++k) {
      if ((masks_[k] & ~mm) == 0 && lead_[k].divides(m)) return false;
    }
    return true;
  }

  const std::vector<Monomial>& lead_;
  std::vector<std::uint32_t> masks_;
  std::size_t nvars_;
  std::vector<Monomial> level_;
};

void detect_stabilization(HilbertFunction& hf, int after) {
  int top = static_cast<int>(hf.values.size()) - 1;
  if (top < 0) return;
  for (int d = 0; d <= top; ++d) {
    if (hf.values[static_cast<std::size_t>(d)] == 0) {
      hf.stabilized_at = d;
      hf.stable_value = 0;
      return;
    }
  }
  int s = top;
  while (s > 0 && hf.values[static_cast<std::size_t>(s - 1)] == hf.values[static_cast<std::size_t>(top)]) --s;
  int first_trusted = std::max(s, after + 1);
  if (top - first_trusted + 1 >= 3) {
    hf.stabilized_at = s;
    hf.stable_value = hf.values[static_cast<std::size_t>(top)];
  }
}

void require_homogeneous(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw Error(Errc::kNotHomogeneous, "Hilbert function needs a homogeneous ideal");
}

}  // namespace

HilbertFunction hilbert_function(const GroebnerBasis& g, int max_deg) {
  HilbertFunction hf;
  StandardMonomials sm(g);
  for (int d = 0; d <= max_deg; ++d) {
    if (d > 0) sm.advance();
    hf.values.push_back(sm.count());
  }
  detect_stabilization(hf, g.max_degree());
  return hf;
}

HilbertFunction hilbert_function(const Ideal& ideal, const MonomialOrder& order, int max_deg, const GroebnerOptions& opts) {
  require_homogeneous(ideal);
  return hilbert_function(buchberger(ideal, order, opts), max_deg);
}

HilbertFunction hilbert_function_auto(const Ideal& ideal, const GroebnerOptions& opts) {
  require_homogeneous(ideal);
  GroebnerBasis g = buchberger(ideal, MonomialOrder::grevlex(ideal.alphabet.size()), opts);
  if (krull_dimension(g) > 1) throw Error(Errc::kPositiveDimensional, "ideal does not define a finite set of points");
  HilbertFunction hf;
  StandardMonomials sm(g);
  int after = g.max_degree();
  for (int d = 0;; ++d) {
    if (d > 0) sm.advance();
    hf.values.push_back(sm.count());
    detect_stabilization(hf, after);
    if (hf.stabilized_at) break;
    if (d >= static_cast<int>(opts.max_degree) + 3) {
      throw Error(Errc::kDegreeCap, "Hilbert function did not stabilize below the degree cap");
    }
  }
  // Drop the repeated tail beyond the first stable degree.
  hf.values.resize(static_cast<std::size_t>(*hf.stabilized_at) + 1);
  return hf;
}

int krull_dimension(const GroebnerBasis& g) {
  if (g.is_unit()) return -1;
  std::size_t nv = g.alphabet().size();
  std::vector<std::uint32_t> masks;
  for (const auto& m : g.leading_monomials()) masks.push_back(m.support_mask());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << nv); ++s) {
    int pc = std::popcount(s);
    if (pc <= best) continue;
    bool independent = std::none_of(masks.begin(), masks.end(), [s](std::uint32_t m) { return (m & ~s) == 0; });
    if (independent) best = pc;
  }
  return best;
}

long degree_of_points(const Ideal& ideal, const GroebnerOptions& opts) {
  require_homogeneous(ideal);
  GroebnerBasis g = buchberger(ideal, MonomialOrder::grevlex(ideal.alphabet.size()), opts);
  int dim = krull_dimension(g);
  if (dim > 1) throw Error(Errc::kPositiveDimensional, "ideal defines a positive-dimensional scheme");
  if (dim <= 0) return 0;
  return *hilbert_function_auto(ideal, opts).stable_value;
}

}  // namespace apolar
