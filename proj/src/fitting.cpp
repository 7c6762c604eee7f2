#include "germinv/fitting.hpp"

#include <algorithm>

#include "germinv/errors.hpp"

namespace germinv {

namespace {

bool is_pure_power(const Polynomial& p, std::size_t var, unsigned& exponent) {
  if (p.size() != 1 || p.terms()[0].coeff != 1) return false;
  const Monomial& m = p.terms()[0].mono;
  if (m.degree() == 0 || m[var] != m.degree()) return false;
  exponent = m.degree();
  return true;
}

Polynomial target_monomial(unsigned X, unsigned Y, unsigned Z, const BigRational& c) {
  return Polynomial::monomial(rings::target(), Monomial{X, Y, Z}, c);
}

}  // namespace

std::optional<MonomialShape> detect_monomial_shape(const MapGerm& f) {
  unsigned a = 0, b = 0;
  if (!is_pure_power(f[0], 0, a) || !is_pure_power(f[1], 1, b)) return std::nullopt;
  return a == 1 ? MonomialShape::kLinearPower : MonomialShape::kPowerPair;
}

PresentationMatrix presentation_monomial(const MapGerm& f, MonomialShape shape) {
  unsigned a = 0, b = 0;
  if (!is_pure_power(f[0], 0, a) || !is_pure_power(f[1], 1, b) || (shape == MonomialShape::kLinearPower && a != 1)) {
    throw Error(ErrorCode::kShapeMismatch, "germ " + f.to_string() + " does not have the declared monomial shape");
  }
  std::vector<Monomial> labels;
  for (unsigned i = 0; i < a; ++i)
    for (unsigned j = 0; j < b; ++j) labels.push_back(Monomial{i, j});
  std::size_t g = labels.size();
  auto index = [&](unsigned i, unsigned j) { return static_cast<std::size_t>(i) * b + j; };
  PolyMatrix m(rings::target(), g, g);
  for (std::size_t k = 0; k < g; ++k) {
    std::vector<Polynomial> row(g, Polynomial(rings::target()));
    row[k] = target_monomial(0, 0, 1, 1);
    for (const auto& t : f[2].terms()) {
      unsigned u = t.mono[0] + labels[k][0], v = t.mono[1] + labels[k][1];
      row[index(u % a, v % b)] -= target_monomial(u / a, v / b, 0, t.coeff);
    }
    for (std::size_t l = 0; l < g; ++l) m.set(k, l, std::move(row[l]));
  }
  return {std::move(m), std::move(labels)};
}

PresentationMatrix presentation_general(const IdealPresentation& source_ideal, const std::vector<Polynomial>& images,
                                        const RingPtr& target) {
  const RingPtr& S = source_ideal.ring();
  if (images.size() != target->size()) throw InvalidArgument("one image per target variable is required");
  std::size_t ns = S->size(), nt = target->size();

  std::vector<Polynomial> fiber = source_ideal.generators();
  fiber.insert(fiber.end(), images.begin(), images.end());
  QuotientDimension local = local_quotient_dim(IdealPresentation(S, fiber, TermOrder::local(ns)));
  if (!local.finite) throw InvalidArgument("the map is not finite: the special fiber has infinite length");
  const std::vector<Monomial>& labels = local.standard_monomials;
  std::size_t r = labels.size();

  std::vector<std::string> names = S->names();
  names.insert(names.end(), target->names().begin(), target->names().end());
  RingPtr C = Ring::make(names);
  auto lift = [&](const Polynomial& p) { return change_ring(p, C); };

  std::vector<ModuleElement> gens;
  auto zero_vector = [&]() { return ModuleElement(r + 1, Polynomial(C)); };
  for (std::size_t a = 0; a < r; ++a) {
    ModuleElement v = zero_vector();
    v[0] = lift(Polynomial::monomial(S, labels[a]));
    v[a + 1] = Polynomial::constant(C, 1);
    gens.push_back(std::move(v));
  }
  for (const auto& g : source_ideal.generators()) {
    ModuleElement v = zero_vector();
    v[0] = lift(g);
    gens.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < nt; ++j) {
    ModuleElement v = zero_vector();
    v[0] = Polynomial::variable(C, ns + j) - lift(images[j]);
    gens.push_back(std::move(v));
  }
  std::vector<std::size_t> front(ns);
  for (std::size_t i = 0; i < ns; ++i) front[i] = i;
  auto basis = module_standard_basis(C, gens, TermOrder::elimination(ns + nt, front));

  std::vector<std::vector<Polynomial>> rows;
  for (const auto& v : basis) {
    if (!v[0].is_zero()) continue;
    bool free = true;
    for (std::size_t c = 1; c <= r && free; ++c)
      for (std::size_t i = 0; i < ns; ++i)
        if (v[c].involves(i)) free = false;
    if (!free) continue;
    std::vector<Polynomial> row;
    for (std::size_t c = 1; c <= r; ++c) row.push_back(change_ring(v[c], target));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    // No relations: the module is free and every Fitting ideal below the rank vanishes.
    rows.push_back(std::vector<Polynomial>(r, Polynomial(target)));
  }
  return {PolyMatrix::from_rows(std::move(rows)), labels};
}

namespace {

std::optional<PresentationMatrix> free_pair_presentation(const MapGerm& f, std::size_t a, std::size_t b, std::size_t c) {
  const RingPtr& G = rings::graph();  // x, y, X, Y, Z
  Polynomial Ta = Polynomial::variable(G, 2 + a), Tb = Polynomial::variable(G, 2 + b);
  IdealPresentation ideal(G, {Ta - change_ring(f[a], G), Tb - change_ring(f[b], G)}, TermOrder::elimination(5, {0, 1}));
  const auto& basis = ideal.standard_basis();
  std::vector<Monomial> lms;
  for (const auto& g : basis) {
    Monomial lm = g.leading_term(ideal.order()).mono;
    if (lm[2] || lm[3] || lm[4]) return std::nullopt;  // not monic in the source variables, or a relation among f_a, f_b
    lms.push_back(lm);
  }
  std::vector<unsigned> bound(2, 0);
  for (const auto& m : lms) {
    if (m[1] == 0 && m[0] > 0 && (bound[0] == 0 || m[0] < bound[0])) bound[0] = m[0];
    if (m[0] == 0 && m[1] > 0 && (bound[1] == 0 || m[1] < bound[1])) bound[1] = m[1];
  }
  if (!bound[0] || !bound[1]) return std::nullopt;
  std::vector<Monomial> labels;
  for (unsigned d = 0; d < bound[0] + bound[1]; ++d) {
    for (unsigned i = 0; i <= d; ++i) {
      Monomial m{i, d - i};
      if (i >= bound[0] || d - i >= bound[1]) continue;
      if (std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) continue;
      labels.push_back(m);
    }
  }
  std::size_t g = labels.size();
  auto find_label = [&](const Monomial& m) -> std::size_t {
    for (std::size_t i = 0; i < g; ++i)
      if (labels[i][0] == m[0] && labels[i][1] == m[1]) return i;
    throw IntegrityError("normal form produced a non-standard source monomial");
  };
  PolyMatrix mat(rings::target(), g, g);
  Polynomial fc = change_ring(f[c], G);
  for (std::size_t k = 0; k < g; ++k) {
    Polynomial prod = fc.mul_monomial(Monomial{labels[k][0], labels[k][1]}, 1);
    Polynomial nf = ideal.normal_form(prod);
    std::vector<Polynomial> row(g, Polynomial(rings::target()));
    row[k] = Polynomial::variable(rings::target(), c);
    for (const auto& t : nf.terms()) {
      std::size_t l = find_label(Monomial{t.mono[0], t.mono[1]});
      row[l] -= Polynomial::monomial(rings::target(), Monomial{t.mono[2], t.mono[3], t.mono[4]}, t.coeff);
    }
    for (std::size_t l = 0; l < g; ++l) mat.set(k, l, std::move(row[l]));
  }
  return PresentationMatrix{std::move(mat), std::move(labels)};
}

}  // namespace

PresentationMatrix pushforward_presentation(const MapGerm& f) {
  if (auto shape = detect_monomial_shape(f)) return presentation_monomial(f, *shape);
  const std::size_t triples[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& t : triples) {
    if (f[t[0]].is_zero() || f[t[1]].is_zero()) continue;
    if (auto p = free_pair_presentation(f, t[0], t[1], t[2])) return *p;
  }
  IdealPresentation zero(rings::source(), {}, TermOrder::degrevlex(2));
  return presentation_general(zero, {f[0], f[1], f[2]}, rings::target());
}

IdealPresentation FittingIdeal::ideal() const {
  std::vector<Polynomial> gens = minors;
  if (unit) gens = {Polynomial::constant(ring, 1)};
  return IdealPresentation(ring, gens, TermOrder::degrevlex(ring->size()));
}

FittingIdeal fitting_ideal(const PresentationMatrix& p, unsigned k, std::size_t max_minor_entries) {
  FittingIdeal out;
  out.k = k;
  out.ring = p.matrix.ring();
  std::size_t removed = 0;
  PolyMatrix m = prune_constant_pivots(p.matrix, &removed);
  std::size_t g = p.generators() - removed;
  if (g <= k) {
    out.unit = true;
    out.minors = {Polynomial::constant(out.ring, 1)};
    return out;
  }
  out.minors = minors(m, g - k, max_minor_entries);
  std::sort(out.minors.begin(), out.minors.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_string() < b.to_string();
  });
  for (const auto& q : out.minors) {
    if (q.is_constant()) {
      out.unit = true;
      out.minors = {Polynomial::constant(out.ring, 1)};
      break;
    }
  }
  return out;
}

Polynomial image_equation_determinant(const MapGerm& f) {
  PresentationMatrix p = pushforward_presentation(f);
  FittingIdeal f0 = fitting_ideal(p, 0);
  if (f0.minors.empty()) throw IntegrityError("F0 of the push-forward vanishes: f is not finite");
  return poly_gcd(f0.minors).normalized();
}

Polynomial image_equation_elimination(const MapGerm& f) {
  const RingPtr& G = rings::graph();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(Polynomial::variable(G, 2 + i) - change_ring(f[i], G));
  std::vector<std::string> front{"x", "y"};
  // A component that is a linear form lets one source variable be solved
  // for directly, which leaves a much smaller elimination problem.
  for (std::size_t i = 0; i < 3; ++i) {
    if (f[i].is_zero() || !f[i].is_homogeneous() || f[i].total_degree() != 1) continue;
    std::size_t v = f[i].involves(0) ? 0 : 1;
    Monomial mv = v == 0 ? Monomial{1, 0} : Monomial{0, 1};
    BigRational cv = f[i].coefficient(mv);
    Polynomial solved = (gens[i] - Polynomial::variable(G, v) * (-cv)) * (1 / cv);  // x_v in terms of the rest
    std::map<std::string, Polynomial> sub{{G->names()[v], solved}};
    std::vector<Polynomial> rest;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) rest.push_back(substitute(gens[j], sub, G));
    gens = std::move(rest);
    front = {G->names()[1 - v]};
    break;
  }
  IdealPresentation elim = eliminate(IdealPresentation(G, gens, TermOrder::degrevlex(5)), front);
  if (elim.generators().empty()) throw IntegrityError("the image of f is not a hypersurface");
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(change_ring(g, rings::target()));
  return poly_gcd(out).normalized();
}

Polynomial image_equation(const MapGerm& f) {
  Polynomial det = image_equation_determinant(f);
  Polynomial elim = image_equation_elimination(f);
  if (det != elim && squarefree_part(det) != squarefree_part(elim)) {
    throw IntegrityError("image equation routes disagree:\n  determinant: " + det.to_string() +
                         "\n  elimination: " + elim.to_string());
  }
  return det;
}

QuotientDimension triple_point_count(const MapGerm& f) {
  FittingIdeal f2 = fitting_ideal(pushforward_presentation(f), 2);
  if (f2.unit) {
    QuotientDimension q;
    q.finite = true;
    return q;
  }
  if (f2.minors.empty()) return QuotientDimension::infinite();
  return local_quotient_dim(IdealPresentation(rings::target(), f2.minors, TermOrder::local(3)));
}

}  // namespace germinv
