#include "germinv/term_order.hpp"

#include <algorithm>
#include <numeric>

#include "germinv/errors.hpp"

namespace germinv {

TermOrder::TermOrder(Kind kind, std::size_t nvars)
    : kind_(kind), nvars_(nvars), priority_(nvars) {
  if (nvars > Monomial::kMaxVars) throw InvalidArgument("too many variables for term order");
  std::iota(priority_.begin(), priority_.end(), std::size_t{0});
}

TermOrder TermOrder::degrevlex(std::size_t nvars) { return {Kind::kDegRevLex, nvars}; }
TermOrder TermOrder::lex(std::size_t nvars) { return {Kind::kLex, nvars}; }
TermOrder TermOrder::local(std::size_t nvars) { return {Kind::kLocalDegRevLex, nvars}; }

TermOrder TermOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& front) {
  TermOrder o(Kind::kBlockElimination, nvars);
  for (auto i : front) {
    if (i >= nvars) throw InvalidArgument("elimination variable out of range");
    o.front_mask_ |= (1u << i);
  }
  return o;
}

TermOrder TermOrder::with_priority(std::vector<std::size_t> priority) const {
  std::vector<std::size_t> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != nvars_ || sorted[i] != i) throw InvalidArgument("priority is not a permutation");
  }
  TermOrder o = *this;
  o.priority_ = std::move(priority);
  return o;
}

// Among equal-degree monomials restricted to `mask`, the one with the smaller
// exponent in the least significant differing variable is bigger.
int TermOrder::revlex_tail(const Monomial& a, const Monomial& b, std::uint32_t mask) const {
  for (std::size_t k = nvars_; k-- > 0;) {
    std::size_t v = priority_[k];
    if (!(mask & (1u << v))) continue;
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  constexpr std::uint32_t kAll = 0xFFFFFFFFu;
  switch (kind_) {
    case Kind::kDegRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex_tail(a, b, kAll);
    case Kind::kLocalDegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex_tail(a, b, kAll);
    case Kind::kLex:
      for (std::size_t k = 0; k < nvars_; ++k) {
        std::size_t v = priority_[k];
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      }
      return 0;
    case Kind::kBlockElimination: {
      unsigned da = 0, db = 0;
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (front_mask_ & (1u << v)) {
          da += a[v];
          db += b[v];
        }
      }
      if (da != db) return da > db ? 1 : -1;
      if (int c = revlex_tail(a, b, front_mask_)) return c;
      unsigned ra = a.degree() - da, rb = b.degree() - db;
      if (ra != rb) return ra > rb ? 1 : -1;
      return revlex_tail(a, b, ~front_mask_);
    }
  }
  return 0;
}

}  // namespace germinv
