#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace germinv {

/// Exponent vector with one slot per ring variable. Slots past the ring's
/// variable count stay zero, so monomials of one ring compare and hash
/// consistently without knowing the ring.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 12;

  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  /// Bit i is set iff variable i occurs.
  std::uint32_t support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Precondition: other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp_ == b.exp_;
  }
  /// Lexicographic on raw slots; only for containers, not a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exp_ < b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace germinv
