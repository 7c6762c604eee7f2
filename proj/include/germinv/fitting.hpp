#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germinv/germ.hpp"
#include "germinv/groebner.hpp"
#include "germinv/matrix.hpp"

namespace germinv {

/// Presentation of a push-forward module over the target ring. Rows are
/// relations, columns are generators: row . (generator column) = 0 after
/// substituting the target variables by the map components.
struct PresentationMatrix {
  PolyMatrix matrix;
  /// Generators of the module as source monomials.
  std::vector<Monomial> generator_labels;
  std::size_t generators() const { return matrix.cols(); }
};

enum class MonomialShape {
  kLinearPower,  // (x, y^n, q)
  kPowerPair,    // (x^a, y^b, q)
};

/// Z*Id - M(q) in the basis {x^i y^j : i < a, j < b} of O_2 over
/// Q[X, Y] = Q[x^a, y^b]. Throws a kShapeMismatch error when f does not have
/// the declared shape.
PresentationMatrix presentation_monomial(const MapGerm& f, MonomialShape shape);
/// The shape f matches, if any.
std::optional<MonomialShape> detect_monomial_shape(const MapGerm& f);

/// Presentation of (source ring / source ideal) over Q[T_1..T_N] via the map
/// T_j -> images[j], by module elimination. `target` names the T_j.
/// Generators are the standard monomials of source_ideal + (images) in the
/// local order (ascending degree). Throws InvalidArgument when that local
/// algebra is infinite.
PresentationMatrix presentation_general(const IdealPresentation& source_ideal, const std::vector<Polynomial>& images,
                                        const RingPtr& target);

/// Square presentation of f_* O_2 using a pair of components over which
/// Q[x, y] is free; falls back to presentation_general.
PresentationMatrix pushforward_presentation(const MapGerm& f);

struct FittingIdeal {
  unsigned k = 0;
  /// Distinct normalized nonzero minors of size (generators - k).
  std::vector<Polynomial> minors;
  /// Ideal generated by the minors in the global degrevlex order; its
  /// standard_basis() is the interreduced basis.
  IdealPresentation ideal() const;
  RingPtr ring;
  /// True when the minor size is 0 or smaller (the unit ideal).
  bool unit = false;
};

/// k-th Fitting ideal: (g - k)-minors of the presentation. Constant pivots
/// are eliminated first, which preserves every Fitting ideal.
FittingIdeal fitting_ideal(const PresentationMatrix& p, unsigned k, std::size_t max_minor_entries = 2'000'000);

/// Generator of F_0 of f_* O_2, computed as the determinant of the square
/// presentation and by eliminating (x, y) from (X - f1, Y - f2, Z - f3). The
/// squarefree normalized results must agree; IntegrityError otherwise.
Polynomial image_equation(const MapGerm& f);
/// Only the determinant route.
Polynomial image_equation_determinant(const MapGerm& f);
/// Only the elimination route.
Polynomial image_equation_elimination(const MapGerm& f);

/// dim of O_3 / F_2(f_* O_2).
QuotientDimension triple_point_count(const MapGerm& f);

}  // namespace germinv
