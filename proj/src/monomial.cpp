#include "germinv/monomial.hpp"

#include <algorithm>
#include <limits>

#include "germinv/errors.hpp"

namespace germinv {

namespace {

std::uint16_t checked(unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) {
    throw InvalidArgument("exponent overflow");
  }
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw InvalidArgument("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exp_[i] = checked(exponents[i]);
    deg_ += exp_[i];
  }
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  deg_ -= exp_[i];
  exp_[i] = checked(e);
  deg_ += exp_[i];
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0) mask |= (1u << i);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = checked(static_cast<unsigned>(exp_[i]) + other.exp_[i]);
  }
  r.deg_ = deg_ + other.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - other.exp_[i]);
  }
  r.deg_ = deg_ - other.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.deg_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.deg_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  return (support() & other.support()) == 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace germinv
