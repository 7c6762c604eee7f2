#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "germinv/monomial.hpp"

namespace germinv {

/// Total order on the monomials of an n-variable ring.
///
/// Variable priority follows a permutation (default: ring order), so
/// `degrevlex` with the identity permutation ranks x0 > x1 > ... The local
/// order ranks lower total degree higher and breaks ties like degrevlex; it
/// is the order of the local ring of germs at the origin.
class TermOrder {
 public:
  enum class Kind { kDegRevLex, kLex, kBlockElimination, kLocalDegRevLex };

  static TermOrder degrevlex(std::size_t nvars);
  static TermOrder lex(std::size_t nvars);
  /// Block order: degrevlex on the `front` variables first, then degrevlex on
  /// the rest. Every polynomial whose leading monomial is free of the front
  /// variables is free of them entirely.
  static TermOrder elimination(std::size_t nvars, const std::vector<std::size_t>& front);
  static TermOrder local(std::size_t nvars);

  /// `priority[k]` is the ring index of the k-th most significant variable.
  TermOrder with_priority(std::vector<std::size_t> priority) const;

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  bool is_global() const { return kind_ != Kind::kLocalDegRevLex; }
  std::uint32_t front_mask() const { return front_mask_; }

  /// Negative, zero or positive as a is smaller, equal or bigger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  TermOrder(Kind kind, std::size_t nvars);
  int revlex_tail(const Monomial& a, const Monomial& b, std::uint32_t mask) const;

  Kind kind_;
  std::size_t nvars_;
  std::vector<std::size_t> priority_;
  std::uint32_t front_mask_ = 0;
};

}  // namespace germinv
