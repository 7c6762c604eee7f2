#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germinv/errors.hpp"
#include "germinv/germ.hpp"

namespace germinv {

/// Failure of the double-point construction for a specific reason.
class DoublePointError : public Error {
 public:
  enum class Kind {
    kZeroElimination,  // the elimination ideal is zero: f is not generically 1-1
    kNonPrincipal,     // generators have a unit gcd
    kEmpty,            // unit ideal: f has no double points (immersion)
  };
  DoublePointError(Kind kind, const std::string& what)
      : Error(ErrorCode::kNotFinitelyDetermined, what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// 3x2 matrix over (x, y, x', y') with
/// f_i(x,y) - f_i(x',y') = a_i1 (x - x') + a_i2 (y - y').
PolyMatrix divided_differences(const MapGerm& f);

struct DoublePointIdeal {
  std::vector<Polynomial> pullback_gens;  // f_i(x,y) - f_i(x',y')
  std::vector<Polynomial> minor_gens;     // 2x2 minors of the divided differences
  std::vector<Polynomial> all() const;
  IdealPresentation presentation(const TermOrder& order) const;
};

DoublePointIdeal double_point_ideal(const MapGerm& f);

struct DoublePointCurve {
  Polynomial lambda{rings::source()};  // normalized, in (x, y)
  bool reduced = false;
  /// Factors found over Q with their multiplicities: linear factors first,
  /// then whatever cofactor remains (not necessarily irreducible).
  std::vector<std::pair<Polynomial, unsigned>> components;
};

/// Eliminates (x', y') from the double point ideal and extracts the
/// principal generator.
DoublePointCurve dpc_equation(const MapGerm& f);

enum class Determinacy { kYes, kNo, kUndetermined };
std::string to_string(Determinacy d);

/// Finite determinacy via the double point curve: reduced with finite Milnor
/// number. Resource caps yield kUndetermined.
Determinacy is_finitely_determined(const MapGerm& f, std::string* reason = nullptr);

/// gcd of a nonempty list of positive integers.
unsigned fiber_degree(const std::vector<unsigned>& exponents);

enum class ComponentKind { kIdentification, kFold, kUnclassified };
std::string to_string(ComponentKind k);

struct ClassifiedComponent {
  Polynomial factor{rings::source()};
  unsigned degree = 1;   // number of branches it carries over C when known
  ComponentKind kind = ComponentKind::kUnclassified;
  /// Ideal of the image curve in (X, Y, Z), when computed.
  std::vector<Polynomial> image;
  /// Index of the partner component (identification pairs between
  /// different factors); -1 when none or when the pairing is internal.
  int partner = -1;
};

struct ComponentClassification {
  std::vector<ClassifiedComponent> components;
  /// Number of identification branches (over C).
  unsigned identification_branches() const;
  unsigned fold_branches() const;
  bool complete() const;
};

ComponentClassification classify_components(const MapGerm& f, const DoublePointCurve& d);

}  // namespace germinv
