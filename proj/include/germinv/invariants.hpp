#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germinv/germ.hpp"

namespace germinv {

/// How a report field was obtained.
enum class Provenance {
  kDirect,      // computed from an ideal or a polynomial
  kIdentity,    // derived from other fields through an exact identity
  kClosedForm,  // evaluated from a formula in the degrees
};
std::string to_string(Provenance p);

/// One random plane aX + bY + cZ = 0 and the Milnor numbers of the two
/// sections it cuts.
struct PlaneSample {
  std::array<BigRational, 3> coefficients;
  /// mu of a f1 + b f2 + c f3 (the source section); nullopt when infinite.
  std::optional<std::size_t> mu_Ytilde;
  /// mu of the image equation restricted to the plane; nullopt when infinite.
  std::optional<std::size_t> mu_Y;
};

struct PlaneSections {
  std::size_t mu_Ytilde = 0;
  std::size_t mu1 = 0;
  std::vector<PlaneSample> samples;
};

/// Generic plane section Milnor numbers: the minimum over seeded random
/// planes, accepted once each minimum is attained by at least two samples.
/// Batches of n_samples planes are drawn until that happens or max_batches is
/// reached (GenericityUnresolved). `image` is the image equation in X, Y, Z.
PlaneSections generic_plane_sections(const MapGerm& f, const Polynomial& image, std::uint64_t seed,
                                     unsigned n_samples = 5, unsigned max_batches = 4);

/// Nonzero integers in [-20, 20] drawn from mt19937_64(seed), three per plane.
std::vector<std::array<BigRational, 3>> plane_coefficients(std::uint64_t seed, std::size_t count);

struct InvariantReport {
  std::string germ;
  long mu_D = 0, C = 0, T = 0;
  long mu_D2 = 0, mu_D2_mod_S2 = 0, mu_fD = 0;
  long m0_image = 0, m1_image = 0;
  long mu_Ytilde = 0, mu1 = 0;
  long m0_fD = 0, J = 0;

  Polynomial lambda{rings::source()};
  Polynomial image{rings::target()};
  std::vector<PlaneSample> planes;

  struct Field {
    const char* name;
    long value;
    Provenance provenance;
  };
  /// The twelve invariants in serialization order.
  std::vector<Field> fields() const;
};

/// Full invariant vector of a finitely determined germ.
/// NotFinitelyDetermined when the double point curve is not reduced or has
/// infinite Milnor number; InvalidArgument for immersions (no double points)
/// and for representatives whose zero fiber has points besides the origin.
/// Every halving identity is checked for integrality (IntegrityError).
InvariantReport invariant_report(const MapGerm& f, std::uint64_t seed = 1, unsigned plane_samples = 5);

struct MondValues {
  long C = 0, T = 0, mu_D = 0;
};
/// Closed forms for quasi-homogeneous germs in the weights and degrees.
/// IntegrityError when a value is not an integer.
MondValues mond_formulas(const WeightData& w);

struct HomogeneousCorank1Values {
  long d = 0, m0_fD = 0, mu1 = 0, J = 0;
  /// "fold" when n and m are both even (one fold component V(x)),
  /// "identification" otherwise.
  std::string case_tag;
};
/// Closed forms for homogeneous corank-1 germs (x, p, q) with deg p = n,
/// deg q = m, 2 <= n <= m. InvalidArgument when gcd(n, m) > 2, since no such
/// germ is finitely determined.
HomogeneousCorank1Values homogeneous_corank1_closed_forms(long n, long m);

struct CoprimeFamilyValues {
  long d = 0, m0_fD = 0, mu1 = 0, mu_Ytilde_0 = 0, mu_Ytilde_t = 0;
};
/// Closed forms for (x^n + t y^n, y^m, (x+y)^k), 2 <= n < m < k pairwise
/// coprime.
CoprimeFamilyValues coprime_family_closed_forms(long n, long m, long k);

/// The (n, m) of a homogeneous corank-1 germ already in the form (x, p, q)
/// with p, q homogeneous, 2 <= deg p <= deg q; none otherwise.
std::optional<std::pair<long, long>> homogeneous_corank1_degrees(const MapGerm& f);

}  // namespace germinv
