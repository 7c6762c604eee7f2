#include "germinv/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "germinv/double_point.hpp"
#include "germinv/errors.hpp"
#include "germinv/fitting.hpp"

namespace germinv {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kDirect: return "direct";
    case Provenance::kIdentity: return "identity";
    case Provenance::kClosedForm: return "closed-form";
  }
  return "direct";
}

namespace {

long half(long v, const char* what) {
  if (v % 2 != 0) throw IntegrityError(std::string(what) + " = " + std::to_string(v) + "/2 is not an integer");
  return v / 2;
}

std::optional<std::size_t> finite_value(const QuotientDimension& q) {
  if (!q.finite) return std::nullopt;
  return q.value;
}

// Smallest finite value and how many samples attain it.
std::pair<std::optional<std::size_t>, std::size_t> minimum(const std::vector<PlaneSample>& s,
                                                           std::optional<std::size_t> PlaneSample::*field) {
  std::optional<std::size_t> best;
  std::size_t hits = 0;
  for (const auto& p : s) {
    const auto& v = p.*field;
    if (!v) continue;
    if (!best || *v < *best) {
      best = v;
      hits = 1;
    } else if (*v == *best) {
      ++hits;
    }
  }
  return {best, hits};
}

}  // namespace

std::vector<std::array<BigRational, 3>> plane_coefficients(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto draw = [&]() -> long {
    long v = static_cast<long>(rng() % 40);
    return v < 20 ? v - 20 : v - 19;
  };
  std::vector<std::array<BigRational, 3>> out;
  for (std::size_t i = 0; i < count; ++i) {
    long a = draw(), b = draw(), c = draw();
    out.push_back({BigRational(a), BigRational(b), BigRational(c)});
  }
  return out;
}

PlaneSections generic_plane_sections(const MapGerm& f, const Polynomial& image, std::uint64_t seed,
                                     unsigned n_samples, unsigned max_batches) {
  if (n_samples < 2) throw InvalidArgument("at least two plane samples are needed");
  if (!image.ring()->same_as(*rings::target())) throw RingMismatch("the image equation must be in X, Y, Z");
  const RingPtr& P = rings::plane();
  auto coeffs = plane_coefficients(seed, static_cast<std::size_t>(n_samples) * max_batches);
  PlaneSections out;
  std::size_t next = 0;
  for (unsigned batch = 0; batch < max_batches; ++batch) {
    for (unsigned i = 0; i < n_samples; ++i, ++next) {
      const auto& [a, b, c] = coeffs[next];
      PlaneSample s;
      s.coefficients = coeffs[next];
      Polynomial section = f[0] * a + f[1] * b + f[2] * c;
      s.mu_Ytilde = section.is_zero() ? std::nullopt : finite_value(milnor_number(section));
      Polynomial z = (Polynomial::variable(P, 0) * a + Polynomial::variable(P, 1) * b) * (-1 / c);
      Polynomial restricted = substitute(image, {{"Z", z}}, P);
      s.mu_Y = restricted.is_zero() ? std::nullopt : finite_value(milnor_number(restricted));
      out.samples.push_back(std::move(s));
    }
    auto [tilde, tilde_hits] = minimum(out.samples, &PlaneSample::mu_Ytilde);
    auto [mu1, mu1_hits] = minimum(out.samples, &PlaneSample::mu_Y);
    if (tilde && mu1 && tilde_hits >= 2 && mu1_hits >= 2) {
      out.mu_Ytilde = *tilde;
      out.mu1 = *mu1;
      return out;
    }
  }
  throw GenericityUnresolved("no plane section value was attained twice in " + std::to_string(out.samples.size()) +
                             " samples");
}

std::vector<InvariantReport::Field> InvariantReport::fields() const {
  const auto D = Provenance::kDirect, I = Provenance::kIdentity;
  return {{"mu_D", mu_D, D},         {"C", C, D},
          {"T", T, D},               {"mu_D2", mu_D2, I},
          {"mu_D2_mod_S2", mu_D2_mod_S2, I}, {"mu_fD", mu_fD, I},
          {"m0_image", m0_image, D}, {"m1_image", m1_image, I},
          {"mu_Ytilde", mu_Ytilde, D}, {"mu1", mu1, D},
          {"m0_fD", m0_fD, I},       {"J", J, I}};
}

InvariantReport invariant_report(const MapGerm& f, std::uint64_t seed, unsigned plane_samples) {
  InvariantReport r;
  r.germ = f.to_string();

  std::vector<Polynomial> comps(f.components().begin(), f.components().end());
  QuotientDimension local = local_quotient_dim(IdealPresentation(rings::source(), comps, TermOrder::local(2)));
  if (!local.finite) throw NotFinitelyDetermined("f is not finite: f^-1(0) is not isolated at the origin");
  QuotientDimension global = global_quotient_dim(IdealPresentation(rings::source(), comps, TermOrder::degrevlex(2)));
  if (!global.finite || global.value != local.value) {
    throw InvalidArgument("the polynomial representative maps points other than the origin to 0; "
                          "global presentations would count them");
  }

  DoublePointCurve dpc;
  try {
    dpc = dpc_equation(f);
  } catch (const DoublePointError& e) {
    if (e.kind() == DoublePointError::Kind::kEmpty) {
      throw InvalidArgument("f is an immersion: there is no double point curve and J is not an integer");
    }
    throw NotFinitelyDetermined(e.what());
  }
  if (!dpc.reduced) throw NotFinitelyDetermined("the double point curve is not reduced");
  r.lambda = dpc.lambda;
  QuotientDimension mu = milnor_number(dpc.lambda);
  if (!mu.finite) throw NotFinitelyDetermined("the double point curve has infinite Milnor number");
  r.mu_D = static_cast<long>(mu.value);

  QuotientDimension c = crosscap_count(f);
  if (!c.finite) throw NotFinitelyDetermined("the ramification ideal is not of finite length");
  r.C = static_cast<long>(c.value);
  QuotientDimension t = triple_point_count(f);
  if (!t.finite) throw NotFinitelyDetermined("the second Fitting ideal is not of finite length");
  r.T = static_cast<long>(t.value);

  r.image = image_equation(f);
  r.m0_image = order_at_origin(r.image);
  PlaneSections planes = generic_plane_sections(f, r.image, seed, plane_samples);
  r.planes = planes.samples;
  r.mu_Ytilde = static_cast<long>(planes.mu_Ytilde);
  r.mu1 = static_cast<long>(planes.mu1);

  r.mu_D2 = r.mu_D - 6 * r.T;
  if (r.mu_D2 < 0) throw IntegrityError("mu(D) - 6T is negative");
  r.mu_D2_mod_S2 = half(r.mu_D2 - r.C + 1, "mu(D2) - C + 1");
  r.mu_fD = half(r.mu_D - r.C + 2 * r.T + 1, "mu(D) - C + 2T + 1");
  r.m1_image = r.mu_Ytilde + r.m0_image - 1;
  r.m0_fD = half(r.mu1 - r.mu_Ytilde, "mu1 - mu(Ytilde)");
  r.J = half(r.mu_D + 2 * r.m0_fD - 1 - r.C - 6 * r.T, "mu(D) + 2 m0(f(D)) - 1 - C - 6T");
  for (const auto& field : r.fields()) {
    if (field.value < 0) throw IntegrityError(std::string(field.name) + " is negative");
  }
  return r;
}

namespace {

long as_integer(const BigRational& q, const char* what) {
  if (q.get_den() != 1) throw IntegrityError(std::string(what) + " = " + to_string(q) + " is not an integer");
  if (!q.get_num().fits_slong_p()) throw IntegrityError(std::string(what) + " does not fit a machine integer");
  return q.get_num().get_si();
}

}  // namespace

MondValues mond_formulas(const WeightData& w) {
  if (w.w1 == 0 || w.w2 == 0) throw InvalidArgument("weights must be positive");
  BigRational w1 = w.w1, w2 = w.w2;
  BigRational d1 = w.d[0], d2 = w.d[1], d3 = w.d[2];
  BigRational ww = w1 * w2;
  BigRational delta = d1 * d2 * d3 / ww;
  BigRational eps = d1 + d2 + d3 - w1 - w2;
  BigRational C = ((d2 - w1) * (d3 - w2) + (d1 - w2) * (d3 - w2) + (d1 - w1) * (d2 - w1)) / ww;
  BigRational T = (delta - eps) * (delta - 2 * eps) / (6 * ww) + C / 3;
  BigRational mu = (delta - eps - w1) * (delta - eps - w2) / ww;
  return {as_integer(C, "C"), as_integer(T, "T"), as_integer(mu, "mu(D)")};
}

HomogeneousCorank1Values homogeneous_corank1_closed_forms(long n, long m) {
  if (n < 2 || m < n) throw InvalidArgument("the degrees must satisfy 2 <= n <= m");
  HomogeneousCorank1Values v;
  v.d = n * m - n - m + 1;
  // f restricted to x = 0 is gcd(n, m)-to-1, so a larger gcd leaves a curve of
  // triple points.
  if (std::gcd(n, m) > 2) throw InvalidArgument("gcd of the degrees exceeds 2: not finitely determined");
  if (n % 2 == 0 && m % 2 == 0) {
    v.case_tag = "fold";
    v.m0_fD = half(n * m - m, "(nm - m)");
    v.mu1 = n * m - m;
    v.J = half(m * m * n + m * n * n - m * m - 7 * m * n - n * n + 6 * m + 7 * n - 6, "J");
  } else {
    v.case_tag = "identification";
    v.m0_fD = half(n * m - n - m + 1, "(nm - n - m + 1)");
    v.mu1 = n * m - n - m + 1;
    v.J = half(m * m * n + m * n * n - m * m - 7 * m * n - n * n + 6 * m + 6 * n - 5, "J");
  }
  return v;
}

CoprimeFamilyValues coprime_family_closed_forms(long n, long m, long k) {
  if (!(2 <= n && n < m && m < k)) throw InvalidArgument("the exponents must satisfy 2 <= n < m < k");
  if (std::gcd(n, m) != 1 || std::gcd(n, k) != 1 || std::gcd(m, k) != 1) {
    throw InvalidArgument("the exponents must be pairwise coprime");
  }
  CoprimeFamilyValues v;
  v.d = n * m * k - n - m - k + 2;
  v.m0_fD = half(v.d * n, "d n");
  v.mu1 = (n - 1) * (m - 1) + v.d * n;
  v.mu_Ytilde_0 = (n - 1) * (m - 1);
  v.mu_Ytilde_t = (n - 1) * (n - 1);
  return v;
}

std::optional<std::pair<long, long>> homogeneous_corank1_degrees(const MapGerm& f) {
  if (f[0] != Polynomial::variable(rings::source(), 0)) return std::nullopt;
  auto homogeneous_degree = [](const Polynomial& p) -> std::optional<long> {
    if (p.is_zero()) return std::nullopt;
    long d = static_cast<long>(p.total_degree());
    if (static_cast<long>(order_at_origin(p)) != d) return std::nullopt;
    return d;
  };
  auto n = homogeneous_degree(f[1]), m = homogeneous_degree(f[2]);
  if (!n || !m) return std::nullopt;
  long lo = std::min(*n, *m), hi = std::max(*n, *m);
  if (lo < 2) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace germinv
