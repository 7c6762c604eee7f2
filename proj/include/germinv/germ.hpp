#pragma once

#include <array>
#include <optional>
#include <string>

#include "germinv/groebner.hpp"
#include "germinv/matrix.hpp"
#include "germinv/polynomial.hpp"

namespace germinv {

/// Map germ (C^2,0) -> (C^3,0) given by three polynomials in x, y.
class MapGerm {
 public:
  MapGerm(Polynomial f1, Polynomial f2, Polynomial f3);
  /// Parses "(f1, f2, f3)" over x, y.
  static MapGerm parse(const std::string& text);

  const Polynomial& operator[](std::size_t i) const { return f_[i]; }
  const std::array<Polynomial, 3>& components() const { return f_; }
  std::string to_string() const;

 private:
  std::array<Polynomial, 3> f_;
};

/// One-parameter unfolding F(x, y, t); specializations are map germs.
class Unfolding {
 public:
  Unfolding(Polynomial F1, Polynomial F2, Polynomial F3);
  /// Parses "(F1, F2, F3)" over x, y, t.
  static Unfolding parse(const std::string& text);
  /// The trivial unfolding (f, t).
  static Unfolding constant(const MapGerm& f);

  const Polynomial& operator[](std::size_t i) const { return F_[i]; }
  bool origin_preserving() const { return origin_preserving_; }
  bool depends_on_parameter() const;
  std::string to_string() const;

 private:
  std::array<Polynomial, 3> F_;
  bool origin_preserving_;
};

/// Substitutes t = t0; throws InvalidArgument when the unfolding is not
/// origin preserving or the specialization has no nonzero component.
MapGerm specialize(const Unfolding& F, const BigRational& t0);

struct WeightData {
  unsigned w1 = 1, w2 = 1;
  std::array<unsigned, 3> d{};
  friend bool operator==(const WeightData&, const WeightData&) = default;
};

/// 2 minus the rank of the differential at the origin.
int corank(const MapGerm& f);
/// 3x2 Jacobian matrix over x, y.
PolyMatrix jacobian(const MapGerm& f);
/// The 2x2 minors of the Jacobian (generators of the ramification ideal).
std::vector<Polynomial> ramification_generators(const MapGerm& f);
/// dim of O_2 / Rf; INFINITE when the singular set is not isolated.
QuotientDimension crosscap_count(const MapGerm& f);
/// Smallest coprime positive weights making every component weighted
/// homogeneous, with the degrees; none when impossible or a component is 0.
std::optional<WeightData> detect_quasihomogeneous(const MapGerm& f);

}  // namespace germinv
