#include <numeric>

#include "corpus.hpp"
#include "doctest.h"
#include "germinv/errors.hpp"
#include "germinv/invariants.hpp"
#include "germinv/parse.hpp"
#include "oracles.hpp"

using namespace germinv;

namespace {

// A homogeneous corank-1 germ (x, p, q) with deg p = n, deg q = m and
// coefficients chosen away from the special loci seen for these degrees.
std::string homogeneous_germ(long n, long m) {
  std::string p = "y^" + std::to_string(n) + " + 2*x^" + std::to_string(n - 1) + "*y";
  if (n > 2) p += " + x^" + std::to_string(n - 2) + "*y^2";
  std::string q;
  for (long i = 1; i <= m; ++i) {
    if (!q.empty()) q += " + ";
    q += std::to_string((3 * i * i + 5 * i) % 11 + 1) + "*x^" + std::to_string(m - i) + "*y^" + std::to_string(i);
  }
  return "(x, " + p + ", " + q + ")";
}

void check_identities(const InvariantReport& r) {
  CAPTURE(r.germ);
  CHECK(r.mu_D == r.mu_D2 + 6 * r.T);
  CHECK(r.mu_D2 >= 0);
  CHECK((r.mu_D2 - r.C + 1) % 2 == 0);
  CHECK(2 * r.mu_D2_mod_S2 == r.mu_D2 - r.C + 1);
  CHECK((r.mu_D - r.C + 2 * r.T + 1) % 2 == 0);
  CHECK(2 * r.mu_fD == r.mu_D - r.C + 2 * r.T + 1);
  CHECK(r.C + 2 * r.J + 6 * r.T == r.mu_D + 2 * r.m0_fD - 1);
  CHECK(r.m1_image == r.mu_Ytilde + r.m0_image - 1);
  CHECK(r.mu1 == r.mu_Ytilde + 2 * r.m0_fD);
  CHECK(r.J >= 0);
  CHECK(r.C >= 0);
  CHECK(r.T >= 0);
}

}  // namespace

TEST_CASE("golden invariants of the corank 2 homogeneous example") {
  InvariantReport r = invariant_report(MapGerm::parse(corpus::kEx51));
  CHECK(r.mu_D == 441);
  CHECK(r.C == 14);
  CHECK(r.T == 56);
  CHECK(r.mu_fD == 270);
  CHECK(r.m0_image == 6);
  CHECK(r.mu1 == 46);
  CHECK(r.m1_image == 7);
  CHECK(r.m0_fD == 22);
  CHECK(r.mu_Ytilde == 2);
  CHECK(r.lambda == parse_polynomial(corpus::kEx51Lambda, rings::source()).normalized());
  CHECK(order_at_origin(r.image) == 6);
}

TEST_CASE("invariants of small and corank 1 germs") {
  InvariantReport cc = invariant_report(MapGerm::parse(corpus::kCrossCap));
  CHECK(cc.mu_D == 0);
  CHECK(cc.C == 1);
  CHECK(cc.T == 0);
  CHECK(cc.m0_image == 2);
  CHECK(cc.J == 0);

  InvariantReport c3 = invariant_report(MapGerm::parse(corpus::kC3));
  CHECK(c3.mu_D == 4);
  CHECK(c3.C == 3);
  CHECK(c3.T == 0);

  InvariantReport e54 = invariant_report(MapGerm::parse(corpus::kEx54));
  CHECK(e54.mu_D == 196);
  CHECK(e54.C == 15);
  CHECK(e54.T == 20);
  CHECK(e54.m0_fD == 9);
  CHECK(e54.J == 39);
  CHECK(e54.mu_Ytilde == 0);

  InvariantReport e53 = invariant_report(MapGerm::parse(corpus::kEx53));
  CHECK(e53.mu1 == 47);
  CHECK(e53.m0_fD == 23);
  CHECK(e53.mu_Ytilde == 1);
}

TEST_CASE("provenance marks identity-derived fields") {
  InvariantReport r = invariant_report(MapGerm::parse(corpus::kC3));
  auto fields = r.fields();
  REQUIRE(fields.size() == 12);
  for (const auto& f : fields) {
    std::string name = f.name;
    bool derived = name == "mu_D2" || name == "mu_D2_mod_S2" || name == "mu_fD" || name == "m1_image" ||
                   name == "m0_fD" || name == "J";
    CAPTURE(name);
    CHECK((f.provenance == Provenance::kIdentity) == derived);
  }
}

TEST_CASE("identity battery over the corpus") {
  for (const char* text : corpus::all()) check_identities(invariant_report(MapGerm::parse(text)));
}

TEST_CASE("inputs outside the domain are rejected by kind") {
  CHECK_THROWS_AS(invariant_report(MapGerm::parse("(x, y, x^2)")), InvalidArgument);
  CHECK_THROWS_AS(invariant_report(MapGerm::parse("(x, y^2, 0)")), NotFinitelyDetermined);
  CHECK_THROWS_AS(invariant_report(MapGerm::parse("(x^3, y^5, y^2 - x*y)")), NotFinitelyDetermined);
  // The zero fiber contains (0, 1) as well as the origin.
  CHECK_THROWS_AS(invariant_report(MapGerm::parse("(x, y^2 - y^3, x*y)")), InvalidArgument);
}

TEST_CASE("weighted formulas agree with direct computation") {
  CHECK(mond_formulas(WeightData{1, 1, {2, 3, 5}}).mu_D == 441);
  MondValues e54 = mond_formulas(WeightData{1, 1, {1, 4, 6}});
  CHECK(e54.C == 15);
  CHECK(e54.T == 20);
  CHECK(e54.mu_D == 196);
  MondValues cc = mond_formulas(WeightData{1, 1, {1, 2, 2}});
  CHECK((cc.C == 1 && cc.T == 0 && cc.mu_D == 0));
  std::size_t checked = 0;
  for (const char* text : corpus::all()) {
    MapGerm f = MapGerm::parse(text);
    auto w = detect_quasihomogeneous(f);
    if (!w) continue;
    CAPTURE(text);
    ++checked;
    MondValues m = mond_formulas(*w);
    InvariantReport r = invariant_report(f);
    CHECK(m.C == r.C);
    CHECK(m.T == r.T);
    CHECK(m.mu_D == r.mu_D);
  }
  CHECK(checked >= 8);
  // T = -1/3 + 2/3 for these weights and degrees.
  CHECK_THROWS_AS(mond_formulas(WeightData{2, 1, {2, 3, 3}}), IntegrityError);
}

TEST_CASE("homogeneous corank 1 closed forms against direct computation on the corpus") {
  HomogeneousCorank1Values v = homogeneous_corank1_closed_forms(4, 6);
  CHECK(v.d == 15);
  CHECK(v.m0_fD == 9);
  CHECK(v.mu1 == 18);
  CHECK(v.J == 39);
  CHECK(v.case_tag == "fold");
  CHECK(homogeneous_corank1_closed_forms(4, 10).m0_fD == 15);
  HomogeneousCorank1Values small = homogeneous_corank1_closed_forms(2, 3);
  CHECK((small.d == 2 && small.m0_fD == 1 && small.mu1 == 2 && small.J == 0));

  std::size_t checked = 0;
  for (const char* text : corpus::all()) {
    MapGerm f = MapGerm::parse(text);
    auto nm = homogeneous_corank1_degrees(f);
    if (!nm) continue;
    CAPTURE(text);
    ++checked;
    HomogeneousCorank1Values c = homogeneous_corank1_closed_forms(nm->first, nm->second);
    InvariantReport r = invariant_report(f);
    CHECK(static_cast<long>(r.lambda.total_degree()) == c.d);
    CHECK(static_cast<long>(order_at_origin(r.lambda)) == c.d);
    CHECK(r.m0_fD == c.m0_fD);
    CHECK(r.mu1 == c.mu1);
    CHECK(r.J == c.J);
  }
  CHECK(checked >= 5);
}

TEST_CASE("degree grid: parity of d and closed forms against generic germs") {
  for (long n = 2; n <= 8; ++n) {
    for (long m = n; m <= 8; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      MapGerm f = MapGerm::parse(homogeneous_germ(n, m));
      if (std::gcd(n, m) > 2) {
        CHECK_THROWS_AS(homogeneous_corank1_closed_forms(n, m), InvalidArgument);
        CHECK_THROWS_AS(invariant_report(f), NotFinitelyDetermined);
        continue;
      }
      HomogeneousCorank1Values c = homogeneous_corank1_closed_forms(n, m);
      bool both_even = n % 2 == 0 && m % 2 == 0;
      CHECK((c.d % 2 == 1) == both_even);
      CHECK(c.case_tag == (both_even ? "fold" : "identification"));
      InvariantReport r = invariant_report(f);
      CHECK(static_cast<long>(r.lambda.total_degree()) == c.d);
      CHECK(r.mu_D == (c.d - 1) * (c.d - 1));
      CHECK(r.m0_fD == c.m0_fD);
      CHECK(r.mu1 == c.mu1);
      CHECK(r.J == c.J);
    }
  }
}

TEST_CASE("pairwise coprime family closed forms") {
  CoprimeFamilyValues v = coprime_family_closed_forms(2, 3, 5);
  CHECK(v.d == 22);
  CHECK(v.m0_fD == 22);
  CHECK(v.mu1 == 46);
  CHECK(v.mu_Ytilde_0 == 2);
  CHECK(v.mu_Ytilde_t == 1);
  CoprimeFamilyValues w = coprime_family_closed_forms(3, 4, 5);
  CHECK(w.d == 50);
  CHECK(w.m0_fD == 75);
  CHECK(w.mu1 == 156);
  // Non-coprime exponents are rejected; an odd d n has no integral m0.
  for (long n = 2; n <= 5; ++n)
    for (long m = n + 1; m <= 7; ++m)
      for (long k = m + 1; k <= 9; ++k) {
        if (std::gcd(n, m) != 1 || std::gcd(n, k) != 1 || std::gcd(m, k) != 1) {
          CHECK_THROWS_AS(coprime_family_closed_forms(n, m, k), InvalidArgument);
          continue;
        }
        long d = n * m * k - n - m - k + 2;
        if ((d * n) % 2 != 0) CHECK_THROWS_AS(coprime_family_closed_forms(n, m, k), IntegrityError);
      }
  CHECK_THROWS_AS(coprime_family_closed_forms(3, 3, 5), InvalidArgument);

  // The t = 0 member (x^2, y^3, (x + y)^5) computed directly.
  InvariantReport r = invariant_report(MapGerm::parse("(x^2, y^3, (x + y)^5)"));
  CHECK(static_cast<long>(r.lambda.total_degree()) == v.d);
  CHECK(r.m0_fD == v.m0_fD);
  CHECK(r.mu1 == v.mu1);
  CHECK(r.mu_Ytilde == v.mu_Ytilde_0);
}

TEST_CASE("plane samples respect semicontinuity") {
  for (const char* text : {corpus::kEx51, corpus::kEx53, corpus::kEx54, corpus::kH2}) {
    CAPTURE(text);
    InvariantReport r = invariant_report(MapGerm::parse(text), 3, 5);
    REQUIRE(r.planes.size() >= 5);
    std::size_t at_min_tilde = 0, at_min_y = 0;
    for (const auto& p : r.planes) {
      if (p.mu_Ytilde) {
        CHECK(static_cast<long>(*p.mu_Ytilde) >= r.mu_Ytilde);
        at_min_tilde += static_cast<long>(*p.mu_Ytilde) == r.mu_Ytilde;
      }
      if (p.mu_Y) {
        CHECK(static_cast<long>(*p.mu_Y) >= r.mu1);
        at_min_y += static_cast<long>(*p.mu_Y) == r.mu1;
      }
      for (const auto& c : p.coefficients) CHECK(c != 0);
    }
    CHECK(at_min_tilde >= 2);
    CHECK(at_min_y >= 2);
  }
}

TEST_CASE("reports are deterministic in the seed and independent of it in value") {
  MapGerm f = MapGerm::parse(corpus::kEx53);
  InvariantReport a = invariant_report(f, 42), b = invariant_report(f, 42), c = invariant_report(f, 7);
  REQUIRE(a.planes.size() == b.planes.size());
  for (std::size_t i = 0; i < a.planes.size(); ++i) CHECK(a.planes[i].coefficients == b.planes[i].coefficients);
  auto fa = a.fields(), fc = c.fields();
  for (std::size_t i = 0; i < fa.size(); ++i) CHECK(fa[i].value == fc[i].value);
  CHECK(plane_coefficients(5, 4) == plane_coefficients(5, 4));
  for (const auto& p : plane_coefficients(9, 50))
    for (const auto& v : p) CHECK((v != 0 && v >= -20 && v <= 20));
}

TEST_CASE("m0 of f(D) agrees with an intersection count on D") {
  // Each branch of f(D) is covered twice by D, so a generic plane meets D
  // with multiplicity 2 m0(f(D)) upstairs.
  std::vector<std::string> germs(corpus::all().begin(), corpus::all().end());
  germs.push_back("(x^2, y^3, (x + y)^5)");
  germs.push_back("(x^2 + 3*y^2, y^3, (x + y)^5)");
  for (const auto& text : germs) {
    CAPTURE(text);
    MapGerm f = MapGerm::parse(text);
    InvariantReport r = invariant_report(f);
    Polynomial plane = f[0] * 3 + f[1] * -7 + f[2] * 11;
    auto d = oracle::local_dim({r.lambda, plane}, 120);
    REQUIRE(d.has_value());
    CHECK(static_cast<long>(*d) == 2 * r.m0_fD);
  }
}
