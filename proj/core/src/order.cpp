#include <numeric>

#include "apolar/groebner.hpp"

namespace apolar {

namespace {

std::vector<std::size_t> identity_priority(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void check_priority(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) throw Error(Errc::kInvalidArgument, "variable priority must be a permutation");
    seen[v] = true;
  }
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return lex(identity_priority(nvars)); }

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return grevlex(identity_priority(nvars)); }

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  check_priority(priority);
  MonomialOrder o;
  o.kind_ = OrderKind::kLex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> priority) {
  check_priority(priority);
  MonomialOrder o;
  o.kind_ = OrderKind::kGrevlex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t nvars, const std::vector<std::size_t>& eliminate) {
  MonomialOrder o;
  o.kind_ = OrderKind::kBlock;
  o.priority_ = identity_priority(nvars);
  for (std::size_t v : eliminate) {
    if (v >= nvars) throw Error(Errc::kInvalidArgument, "eliminated variable out of range");
    o.eliminated_ |= 1u << v;
  }
  return o;
}

int MonomialOrder::grevlex_part(const Monomial& a, const Monomial& b, bool in_block, bool block_value) const {
  unsigned da = 0, db = 0;
  for (std::size_t v : priority_) {
    if (in_block && (((eliminated_ >> v) & 1u) != 0) != block_value) continue;
    da += a[v];
    db += b[v];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = priority_.size(); k-- > 0;) {
    std::size_t v = priority_[k];
    if (in_block && (((eliminated_ >> v) & 1u) != 0) != block_value) continue;
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::kLex:
      for (std::size_t v : priority_) {
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      }
      return 0;
    case OrderKind::kGrevlex:
      return grevlex_part(a, b, false, false);
    case OrderKind::kBlock: {
      int c = grevlex_part(a, b, true, true);
      if (c != 0) return c;
      return grevlex_part(a, b, true, false);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::kLex: return "lex";
    case OrderKind::kGrevlex: return "grevlex";
    case OrderKind::kBlock: return "block";
  }
  return "unknown";
}

}  // namespace apolar
