#include "germinv/double_point.hpp"

#include <algorithm>
#include <numeric>

#include "germinv/roots.hpp"

namespace germinv {

namespace {

const RingPtr& pair_ring() {
  static const RingPtr r = rings::source_pair();
  return r;
}

Polynomial pair_monomial(unsigned x, unsigned y, unsigned xp, unsigned yp, const BigRational& c) {
  return Polynomial::monomial(pair_ring(), Monomial{x, y, xp, yp}, c);
}

}  // namespace

PolyMatrix divided_differences(const MapGerm& f) {
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Polynomial::Term> a1, a2;
    for (const auto& t : f[i].terms()) {
      unsigned a = t.mono[0], b = t.mono[1];
      // (x^a - x'^a)/(x - x') * y^b
      for (unsigned k = 0; k < a; ++k) a1.push_back({Monomial{k, b, a - 1 - k, 0}, t.coeff});
      // x'^a * (y^b - y'^b)/(y - y')
      for (unsigned k = 0; k < b; ++k) a2.push_back({Monomial{0, k, a, b - 1 - k}, t.coeff});
    }
    rows.push_back({Polynomial::from_terms(pair_ring(), std::move(a1)), Polynomial::from_terms(pair_ring(), std::move(a2))});
  }
  return PolyMatrix::from_rows(std::move(rows));
}

std::vector<Polynomial> DoublePointIdeal::all() const {
  std::vector<Polynomial> out = pullback_gens;
  out.insert(out.end(), minor_gens.begin(), minor_gens.end());
  return out;
}

IdealPresentation DoublePointIdeal::presentation(const TermOrder& order) const {
  return IdealPresentation(pair_ring(), all(), order);
}

DoublePointIdeal double_point_ideal(const MapGerm& f) {
  DoublePointIdeal ideal;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : f[i].terms()) {
      terms.push_back({Monomial{t.mono[0], t.mono[1], 0, 0}, t.coeff});
      terms.push_back({Monomial{0, 0, t.mono[0], t.mono[1]}, -t.coeff});
    }
    ideal.pullback_gens.push_back(Polynomial::from_terms(pair_ring(), std::move(terms)));
  }
  PolyMatrix a = divided_differences(f);
  const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& p : pairs) {
    ideal.minor_gens.push_back(a.at(p[0], 0) * a.at(p[1], 1) - a.at(p[0], 1) * a.at(p[1], 0));
  }
  (void)pair_monomial;
  return ideal;
}

namespace {

bool locally_unit(const Polynomial& g) { return g.constant_term() != 0; }

// Linear factors a*x + b*y of lambda through the origin, with multiplicity,
// and the remaining cofactor.
std::vector<std::pair<Polynomial, unsigned>> split_linear_factors(const Polynomial& lambda) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  const RingPtr& R = lambda.ring();
  Polynomial rest = lambda;
  unsigned ord = lambda.order_at_origin();
  Polynomial initial = lambda.homogeneous_part(ord);
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);

  std::vector<Polynomial> candidates;
  // Factor y of the tangent cone, then x - r*y for rational roots r of
  // initial(r, 1).
  if (initial.coefficient(Monomial{ord, 0}) == 0) candidates.push_back(y);
  std::vector<BigRational> coeffs(ord + 1);
  for (unsigned k = 0; k <= ord; ++k) coeffs[k] = initial.coefficient(Monomial{k, ord - k});
  for (const auto& r : rational_roots(coeffs)) candidates.push_back((x - y * r).normalized());
  for (const auto& c : candidates) {
    unsigned mult = 0;
    while (!rest.is_constant()) {
      auto [q, r] = divide(rest, c, TermOrder::degrevlex(2));
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult) out.push_back({c, mult});
  }
  if (!rest.is_constant()) out.push_back({rest.normalized(), 1});
  return out;
}

}  // namespace

DoublePointCurve dpc_equation(const MapGerm& f) {
  DoublePointIdeal ideal = double_point_ideal(f);
  IdealPresentation elim = eliminate(ideal.presentation(TermOrder::degrevlex(4)), {"x'", "y'"});
  std::vector<Polynomial> gens;
  for (const auto& g : elim.generators()) gens.push_back(change_ring(g, rings::source()));
  if (gens.empty()) {
    throw DoublePointError(DoublePointError::Kind::kZeroElimination,
                           "the double point ideal eliminates to zero: f is not generically one-to-one");
  }
  for (const auto& g : gens) {
    if (g.is_constant()) throw DoublePointError(DoublePointError::Kind::kEmpty, "f has no double points");
  }
  Polynomial lambda = poly_gcd(gens);
  if (lambda.is_constant()) {
    throw DoublePointError(DoublePointError::Kind::kNonPrincipal,
                           "the double point locus is not a curve: elimination ideal has a unit gcd");
  }
  // Factors that do not pass through the origin are units of the local ring.
  DoublePointCurve d{lambda.normalized(), false, {}};
  if (locally_unit(d.lambda)) {
    throw DoublePointError(DoublePointError::Kind::kEmpty, "the double point curve misses the origin");
  }
  Polynomial g = poly_gcd(std::vector<Polynomial>{d.lambda, d.lambda.derivative(0), d.lambda.derivative(1)});
  d.reduced = g.is_constant() || locally_unit(g);
  d.components = split_linear_factors(d.lambda);
  return d;
}

std::string to_string(Determinacy d) {
  switch (d) {
    case Determinacy::kYes: return "true";
    case Determinacy::kNo: return "false";
    case Determinacy::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

Determinacy is_finitely_determined(const MapGerm& f, std::string* reason) {
  auto say = [&](const std::string& s) {
    if (reason) *reason = s;
  };
  try {
    DoublePointCurve d = dpc_equation(f);
    if (!d.reduced) {
      say("the double point curve is not reduced");
      return Determinacy::kNo;
    }
    QuotientDimension mu = milnor_number(d.lambda);
    if (!mu.finite) {
      say("the double point curve has infinite Milnor number");
      return Determinacy::kNo;
    }
    say("the double point curve is reduced with Milnor number " + mu.to_string());
    return Determinacy::kYes;
  } catch (const DoublePointError& e) {
    if (e.kind() == DoublePointError::Kind::kEmpty) {
      say(e.what());
      return Determinacy::kYes;
    }
    say(e.what());
    return Determinacy::kNo;
  } catch (const ResourceCapExceeded& e) {
    say(e.what());
    return Determinacy::kUndetermined;
  }
}

unsigned fiber_degree(const std::vector<unsigned>& exponents) {
  if (exponents.empty()) throw InvalidArgument("fiber degree of an empty list");
  unsigned g = 0;
  for (auto e : exponents) {
    if (e == 0) throw InvalidArgument("fiber degree needs positive exponents");
    g = std::gcd(g, e);
  }
  return g;
}

std::string to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::kIdentification: return "identification";
    case ComponentKind::kFold: return "fold";
    case ComponentKind::kUnclassified: return "unclassified";
  }
  return "unclassified";
}

unsigned ComponentClassification::identification_branches() const {
  unsigned n = 0;
  for (const auto& c : components)
    if (c.kind == ComponentKind::kIdentification) n += c.degree;
  return n;
}

unsigned ComponentClassification::fold_branches() const {
  unsigned n = 0;
  for (const auto& c : components)
    if (c.kind == ComponentKind::kFold) n += c.degree;
  return n;
}

bool ComponentClassification::complete() const {
  return std::none_of(components.begin(), components.end(),
                      [](const ClassifiedComponent& c) { return c.kind == ComponentKind::kUnclassified; });
}

namespace {

const RingPtr& curve_pair_ring() {
  static const RingPtr r = Ring::make({"u", "w"});
  return r;
}

// Generic degree of s -> (g1(s), g2(s), g3(s)) onto its image: the degree in
// u of gcd_i (g_i(u) - g_i(w)).
unsigned parametrization_degree(const std::array<Polynomial, 3>& g) {
  const RingPtr& R = curve_pair_ring();
  std::vector<Polynomial> diffs;
  for (const auto& gi : g) {
    if (gi.is_constant()) continue;
    Polynomial a = substitute(gi, {{"u", Polynomial::variable(R, 0)}}, R);
    Polynomial b = substitute(gi, {{"u", Polynomial::variable(R, 1)}}, R);
    diffs.push_back(a - b);
  }
  if (diffs.empty()) return 0;
  return poly_gcd(diffs).degree_in(0);
}

std::vector<Polynomial> image_of_component(const MapGerm& f, const Polynomial& factor) {
  const RingPtr& G = rings::graph();
  std::vector<Polynomial> gens{change_ring(factor, G)};
  const char* names[3] = {"X", "Y", "Z"};
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(Polynomial::variable(G, names[i]) - change_ring(f[i], G));
  IdealPresentation elim = eliminate(IdealPresentation(G, gens, TermOrder::degrevlex(5)), {"x", "y"});
  std::vector<Polynomial> out;
  for (const auto& g : elim.standard_basis()) out.push_back(change_ring(g, rings::target()));
  return out;
}

// Dehomogenized coefficient of f_i on the branch x = a*y: f_i(a, 1).
Polynomial branch_coefficient(const Polynomial& fi, const RingPtr& R) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : fi.terms()) terms.push_back({Monomial{t.mono[0]}, t.coeff});
  return Polynomial::from_terms(R, std::move(terms));
}

bool all_homogeneous(const MapGerm& f) {
  for (const auto& p : f.components())
    if (!p.is_homogeneous()) return false;
  return true;
}

}  // namespace

ComponentClassification classify_components(const MapGerm& f, const DoublePointCurve& d) {
  ComponentClassification out;
  const RingPtr& S = rings::source();
  const RingPtr& U = curve_pair_ring();
  Polynomial u = Polynomial::variable(U, 0);
  bool homogeneous = all_homogeneous(f) && d.lambda.is_homogeneous();

  for (const auto& [factor, mult] : d.components) {
    (void)mult;
    if (factor.total_degree() == 1) {
      ClassifiedComponent c;
      c.factor = factor;
      // a*x + b*y = 0 is parametrized by (x, y) = (-b*u, a*u).
      BigRational a = factor.coefficient(Monomial{1, 0}), b = factor.coefficient(Monomial{0, 1});
      std::map<std::string, Polynomial> param{{"x", u * (-b)}, {"y", u * a}};
      std::array<Polynomial, 3> g{substitute(f[0], param, U), substitute(f[1], param, U), substitute(f[2], param, U)};
      unsigned deg = parametrization_degree(g);
      c.kind = deg == 1 ? ComponentKind::kIdentification : deg >= 2 ? ComponentKind::kFold : ComponentKind::kUnclassified;
      out.components.push_back(std::move(c));
      continue;
    }
    if (!homogeneous) {
      out.components.push_back({factor, static_cast<unsigned>(factor.total_degree()), ComponentKind::kUnclassified, {}, -1});
      continue;
    }
    // Homogeneous cofactor: every branch is a line x = a*y with a a root of
    // h(a, 1) (y does not divide it; that factor was split off). On such a
    // branch f_i(a*s, s) = f_i(a, 1) s^{n_i}, so the branch fiber degree is the
    // gcd of the n_i with f_i(a, 1) != 0. Split h by which f_i vanish.
    const RingPtr& A = U;  // variable u plays the role of a
    Polynomial h = branch_coefficient(factor, A);
    std::vector<std::pair<Polynomial, std::vector<bool>>> pieces{{h, {false, false, false}}};
    for (std::size_t i = 0; i < 3; ++i) {
      Polynomial ci = branch_coefficient(f[i], A);
      std::vector<std::pair<Polynomial, std::vector<bool>>> next;
      for (auto& [p, vanish] : pieces) {
        Polynomial g = poly_gcd(p, ci);
        Polynomial rest = exact_div(p, g);
        if (!g.is_constant()) {
          auto v = vanish;
          v[i] = true;
          next.push_back({g, v});
        }
        if (!rest.is_constant()) next.push_back({rest.normalized(), vanish});
      }
      pieces = std::move(next);
    }
    for (auto& [p, vanish] : pieces) {
      std::vector<unsigned> exps;
      for (std::size_t i = 0; i < 3; ++i)
        if (!vanish[i]) exps.push_back(static_cast<unsigned>(f[i].total_degree()));
      ClassifiedComponent c;
      // Back to a binary form in x, y.
      unsigned k = p.degree_in(0);
      std::vector<Polynomial::Term> terms;
      for (const auto& t : p.terms()) terms.push_back({Monomial{t.mono[0], k - t.mono[0]}, t.coeff});
      c.factor = Polynomial::from_terms(S, std::move(terms)).normalized();
      c.degree = k;
      if (exps.empty()) c.kind = ComponentKind::kUnclassified;
      else c.kind = fiber_degree(exps) == 1 ? ComponentKind::kIdentification : ComponentKind::kFold;
      out.components.push_back(std::move(c));
    }
  }

  // Pair identification components with equal images.
  for (auto& c : out.components) {
    if (c.kind == ComponentKind::kIdentification) c.image = image_of_component(f, c.factor);
  }
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    auto& ci = out.components[i];
    if (ci.kind != ComponentKind::kIdentification || ci.partner >= 0) continue;
    for (std::size_t j = i + 1; j < out.components.size(); ++j) {
      auto& cj = out.components[j];
      if (cj.kind != ComponentKind::kIdentification || cj.partner >= 0) continue;
      if (ci.image == cj.image) {
        ci.partner = static_cast<int>(j);
        cj.partner = static_cast<int>(i);
        break;
      }
    }
    // A conjugate family of branches that shares one image pairs internally.
    if (ci.partner < 0 && ci.degree >= 2 && ci.degree % 2 == 0) ci.partner = static_cast<int>(i);
  }
  return out;
}

}  // namespace germinv
