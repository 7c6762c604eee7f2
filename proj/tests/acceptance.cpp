// Acceptance run: one PASS/FAIL line per criterion. Budgets are wall-clock
// seconds; a criterion that overruns its budget fails even when its values
// agree. Exit status is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "germinv/double_point.hpp"
#include "germinv/errors.hpp"
#include "germinv/family.hpp"
#include "germinv/fitting.hpp"
#include "germinv/groebner.hpp"
#include "germinv/invariants.hpp"
#include "germinv/matrix.hpp"
#include "germinv/parse.hpp"
#include "oracles.hpp"

using namespace germinv;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class T>
  void equal(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) failures.push_back(what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  }
};

Polynomial P(const std::string& s, const RingPtr& r = rings::source()) { return parse_polynomial(s, r); }

Polynomial compose(const Polynomial& g, const MapGerm& f) {
  return substitute(g, {{"X", f[0]}, {"Y", f[1]}, {"Z", f[2]}}, rings::source());
}

// Same ideal in the local ring at the origin.
bool same_local_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  auto R = a.front().ring();
  IdealPresentation A(R, a, TermOrder::local(R->size())), B(R, b, TermOrder::local(R->size()));
  for (const auto& g : b)
    if (!A.contains(g)) return false;
  for (const auto& g : a)
    if (!B.contains(g)) return false;
  return true;
}

bool equal_up_to_unit(const Polynomial& a, const Polynomial& b) { return a.normalized() == b.normalized(); }

std::vector<BigRational> samples(std::initializer_list<BigRational> v) { return v; }

const std::vector<BigRational>& default_family_samples() {
  static const std::vector<BigRational> v{0, 1, -1, BigRational(1, 2), 3};
  return v;
}

std::string tstr(const BigRational& t) { return to_string(t); }

void check_family_sample_reports(Check& c, const FamilyVerdict& v) {
  for (const auto& s : v.samples)
    if (!s.report) c.failures.push_back("t = " + tstr(s.t) + ": " + s.failure);
}

// 1 ------------------------------------------------------------------------
void corank2_golden(Check& c) {
  InvariantReport r = invariant_report(MapGerm::parse(corpus::kEx51));
  c.equal(r.mu_D, 441L, "mu_D");
  c.equal(r.C, 14L, "C");
  c.equal(r.T, 56L, "T");
  c.equal(r.mu_fD, 270L, "mu_fD");
  c.equal(r.m0_image, 6L, "m0_image");
  c.equal(r.mu1, 46L, "mu1");
  c.equal(r.m1_image, 7L, "m1_image");
  c.equal(r.m0_fD, 22L, "m0_fD");
  c.expect(equal_up_to_unit(r.lambda, P(corpus::kEx51Lambda)), "lambda differs from the displayed polynomial");
}

// 2 ------------------------------------------------------------------------
void corank2_family(Check& c) {
  FamilyVerdict v = analyze_family(Unfolding::parse("(x^2 + t*x*y, x^2*y + x*y^2 + y^3, x^5 + y^5)"),
                                   samples({0, 1, -1, BigRational(1, 2)}));
  check_family_sample_reports(c, v);
  for (const auto& s : v.samples) {
    if (!s.report) continue;
    const std::string at = " at t = " + tstr(s.t);
    bool zero = s.t == 0;
    c.equal(s.report->mu_D, 441L, "mu_D" + at);
    c.equal(s.report->mu1, zero ? 46L : 45L, "mu1" + at);
    c.equal(s.report->m1_image, zero ? 7L : 6L, "m1_image" + at);
    c.equal(s.report->m0_fD, 22L, "m0_fD" + at);
  }
  c.expect(v.topologically_trivial == Verdict::kYes, "topologically trivial: " + to_string(v.topologically_trivial));
  c.expect(v.whitney == Verdict::kNo, "Whitney: " + to_string(v.whitney));
  c.expect(v.counterexample_to_conjecture, "not flagged as a counterexample");
}

// 3 ------------------------------------------------------------------------
void corank2_second_family(Check& c) {
  const char* family = "(x^3, y^5, x^2 - x*y + y^2 + t*x^2)";
  Unfolding F = Unfolding::parse(family);
  DoublePointCurve d0 = dpc_equation(specialize(F, 0));
  c.expect(equal_up_to_unit(d0.lambda, P(corpus::kEx53Lambda)), "lambda at t = 0 differs from the displayed product");
  for (const auto& t : default_family_samples()) {
    MapGerm ft = specialize(F, t);
    Polynomial shown = P(corpus::ex53_image_at(tstr(t)), rings::target());
    c.expect(equal_up_to_unit(image_equation(ft), shown), "image equation differs at t = " + tstr(t));
  }
  FamilyVerdict v = analyze_family(F, default_family_samples());
  check_family_sample_reports(c, v);
  for (const auto& s : v.samples) {
    if (!s.report) continue;
    const std::string at = " at t = " + tstr(s.t);
    bool zero = s.t == 0;
    c.equal(s.report->mu1, zero ? 47L : 45L, "mu1" + at);
    c.equal(s.report->mu_Ytilde, 1L, "mu_Ytilde" + at);
    c.equal(s.report->m0_fD, zero ? 23L : 22L, "m0_fD" + at);
  }
  c.expect(v.topologically_trivial == Verdict::kYes, "topologically trivial: " + to_string(v.topologically_trivial));
  c.expect(v.whitney == Verdict::kNo, "Whitney: " + to_string(v.whitney));
}

// 4 ------------------------------------------------------------------------
void corank1_family(Check& c) {
  Unfolding F = Unfolding::parse("(x, y^4, x^5*y - 5*x^3*y^3 + 4*x*y^5 + y^6 + t*y^7)");
  FamilyVerdict v = analyze_family(F, default_family_samples());
  check_family_sample_reports(c, v);
  for (const auto& s : v.samples) {
    if (!s.report) continue;
    const std::string at = " at t = " + tstr(s.t);
    bool zero = s.t == 0;
    c.equal(s.report->mu_D, 196L, "mu_D" + at);
    c.equal(s.report->C, 15L, "C" + at);
    c.equal(s.report->T, 20L, "T" + at);
    c.equal(s.report->J, zero ? 39L : 38L, "J" + at);
    c.equal(s.report->m0_fD, zero ? 9L : 8L, "m0_fD" + at);
  }
  for (const auto& t : default_family_samples()) {
    MapGerm ft = specialize(F, t);
    std::vector<Polynomial> shown;
    for (const auto& g : corpus::ex54_f1()) shown.push_back(P(corpus::at_t(g, tstr(t)), rings::target()));
    FittingIdeal f1 = fitting_ideal(pushforward_presentation(ft), 1);
    c.expect(!f1.unit && same_local_ideal(f1.minors, shown), "F1 differs from the displayed generators at t = " + tstr(t));

    PresentationMatrix fast = presentation_monomial(ft, MonomialShape::kLinearPower);
    c.expect(fast.matrix.rows() == 4 && fast.matrix.cols() == 4, "fast path matrix is not 4x4");
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& row : corpus::ex54_matrix()) {
      rows.emplace_back();
      for (const auto& e : row) rows.back().push_back(P(corpus::at_t(e, tstr(t)), rings::target()));
    }
    Polynomial a = determinant(fast.matrix), b = determinant(PolyMatrix::from_rows(rows));
    c.expect(same_local_ideal({a}, {b}), "determinant ideal differs from the displayed matrix at t = " + tstr(t));
  }
}

// 5 ------------------------------------------------------------------------
void table(Check& c) {
  Limits per_row{0, 0, 1800};
  for (auto& row : table1_rows()) {
    compute_table1_row(row, samples({1, -1, BigRational(1, 2), 3}), 1, 5, per_row);
    if (row.failure_code) {
      c.failures.push_back(row.family + ": " + (*row.failure_code == ErrorCode::kResourceCap ? "cap exceeded: " : "") +
                           row.failure);
    } else if (!row.matched()) {
      const auto& g = *row.computed;
      c.failures.push_back(row.family + ": computed (" + std::to_string(g[0]) + ", " + std::to_string(g[1]) + ", " +
                           std::to_string(g[2]) + ", " + std::to_string(g[3]) + ")");
    }
  }
}

// 6 ------------------------------------------------------------------------
void closed_forms(Check& c) {
  for (const char* text : corpus::all()) {
    MapGerm f = MapGerm::parse(text);
    auto w = detect_quasihomogeneous(f);
    auto nm = homogeneous_corank1_degrees(f);
    if (!w && !nm) continue;
    InvariantReport r = invariant_report(f);
    if (w) {
      MondValues m = mond_formulas(*w);
      c.equal(m.C, r.C, std::string("weighted C of ") + text);
      c.equal(m.T, r.T, std::string("weighted T of ") + text);
      c.equal(m.mu_D, r.mu_D, std::string("weighted mu(D) of ") + text);
    }
    if (nm) {
      HomogeneousCorank1Values h = homogeneous_corank1_closed_forms(nm->first, nm->second);
      c.equal(static_cast<long>(r.lambda.total_degree()), h.d, std::string("d of ") + text);
      c.equal(r.m0_fD, h.m0_fD, std::string("m0_fD of ") + text);
      c.equal(r.mu1, h.mu1, std::string("mu1 of ") + text);
      c.equal(r.J, h.J, std::string("J of ") + text);
    }
  }
  HomogeneousCorank1Values v = homogeneous_corank1_closed_forms(4, 6);
  c.expect(v.d == 15 && v.m0_fD == 9 && v.mu1 == 18 && v.J == 39, "(4, 6) closed forms");
}

// 7 ------------------------------------------------------------------------
void identities(Check& c) {
  auto pair = rings::source_pair();
  Polynomial dx = P("x - x'", pair), dy = P("y - y'", pair);
  for (const char* text : corpus::all()) {
    const std::string g = text;
    MapGerm f = MapGerm::parse(text);

    PolyMatrix A = divided_differences(f);
    DoublePointIdeal I = double_point_ideal(f);
    for (std::size_t i = 0; i < 3; ++i)
      c.expect(I.pullback_gens[i] == A.at(i, 0) * dx + A.at(i, 1) * dy, "divided differences of " + g);

    PresentationMatrix p = pushforward_presentation(f);
    FittingIdeal f0 = fitting_ideal(p, 0), f1 = fitting_ideal(p, 1), f2 = fitting_ideal(p, 2);
    IdealPresentation I1 = f1.ideal(), I2 = f2.ideal();
    for (const auto& m : f0.minors) {
      c.expect(I1.contains(m), "F0 in F1 for " + g);
      c.expect(compose(m, f).is_zero(), "F0 vanishes on the graph of " + g);
    }
    if (!f2.unit)
      for (const auto& m : f1.minors) c.expect(I2.contains(m), "F1 in F2 for " + g);

    DoublePointCurve d = dpc_equation(f);
    Polynomial lambda_red = squarefree_part(d.lambda);
    for (const auto& m : f1.minors) {
      Polynomial pulled = compose(m, f);
      if (pulled.is_zero()) continue;
      bool divides = true;
      try {
        exact_div(pulled, lambda_red);
      } catch (const InexactDivision&) {
        divides = false;
      }
      c.expect(divides, "reduced double point curve divides F1 pulled back, " + g);
    }

    InvariantReport r = invariant_report(f);
    c.expect(r.mu_D == r.mu_D2 + 6 * r.T && r.mu_D2 >= 0, "mu(D) = mu(D2) + 6T for " + g);
    c.expect((r.mu_D2 - r.C + 1) % 2 == 0, "mu(D2) - C + 1 even for " + g);
    c.expect((r.mu_D - r.C + 2 * r.T + 1) % 2 == 0, "mu(D) - C + 2T + 1 even for " + g);
    c.expect(r.C + 2 * r.J + 6 * r.T == r.mu_D + 2 * r.m0_fD - 1, "C + 2J + 6T identity for " + g);

    auto k = classify_components(f, d);
    if (k.complete()) c.expect(k.identification_branches() % 2 == 0, "identification branches pair up for " + g);
  }

  for (long n = 2; n <= 8; ++n)
    for (long m = n; m <= 8; ++m) {
      if (std::gcd(n, m) > 2) continue;
      HomogeneousCorank1Values h = homogeneous_corank1_closed_forms(n, m);
      c.expect((h.d % 2 == 1) == (n % 2 == 0 && m % 2 == 0),
               "parity of d for (" + std::to_string(n) + ", " + std::to_string(m) + ")");
    }

  for (int d : {2, 3, 22}) {
    Polynomial g = P("x^" + std::to_string(d) + " + y^" + std::to_string(d) + " + x y^" + std::to_string(d - 1));
    QuotientDimension mu = milnor_number(g);
    c.expect(mu.finite && static_cast<long>(mu.value) == static_cast<long>((d - 1) * (d - 1)),
             "mu of a degree " + std::to_string(d) + " homogeneous curve");
  }
}

// 8 ------------------------------------------------------------------------
void oracles(Check& c) {
  auto agree = [&](const std::vector<Polynomial>& gens, const std::string& what) {
    auto R = gens.front().ring();
    QuotientDimension d = local_quotient_dim(IdealPresentation(R, gens, TermOrder::local(R->size())));
    if (!d.finite || d.value > 60 || d.value == 0) return;
    auto o = oracle::local_dim(gens, 80);
    c.expect(o && *o == d.value, "quotient dimension of " + what);
  };
  for (const char* text : corpus::all()) {
    MapGerm f = MapGerm::parse(text);
    agree(ramification_generators(f), std::string("Rf of ") + text);
    Polynomial lambda = dpc_equation(f).lambda;
    agree({lambda.derivative(0), lambda.derivative(1)}, std::string("J(lambda) of ") + text);
    FittingIdeal f2 = fitting_ideal(pushforward_presentation(f), 2);
    if (!f2.unit && !f2.minors.empty()) agree(f2.minors, std::string("F2 of ") + text);
  }

  auto G = rings::graph();
  std::vector<Polynomial> cc{P("X - x", G), P("Y - y^2", G), P("Z - x y", G)};
  auto E = eliminate(IdealPresentation(G, cc, TermOrder::degrevlex(5)), {"x", "y"});
  c.expect(E.generators().size() == 1 && equal_up_to_unit(E.generators()[0], P("X^2 Y - Z^2", G)),
           "image of the cross-cap");
  std::vector<Polynomial> graph{P("X - x", G), P("Y - y", G), P("Z - x^2 - y^3", G)};
  auto H = eliminate(IdealPresentation(G, graph, TermOrder::degrevlex(5)), {"x", "y"});
  bool found = false;
  for (const auto& g : H.generators()) found = found || equal_up_to_unit(g, P("Z - X^2 - Y^3", G));
  c.expect(found, "graph of x^2 + y^3");
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "corank 2 homogeneous germ, golden invariants", 600, corank2_golden},
      {2, "corank 2 family at t in {0, 1, -1, 1/2}", 1800, corank2_family},
      {3, "second corank 2 family at default samples", 1800, corank2_second_family},
      {4, "corank 1 family with presentation and F1", 600, corank1_family},
      {5, "table of counterexample families", 3600, table},
      {6, "closed-form oracle battery", 300, closed_forms},
      {7, "identity battery on the corpus", 600, identities},
      {8, "oracle equivalence at small scale", 120, oracles},
  };
  int failed = 0;
  for (const auto& k : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      LimitScope scope({0, 0, k.budget_seconds});
      k.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("aborted: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > k.budget_seconds) c.failures.push_back("over budget");
    bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.1f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", k.number, k.title, secs,
                k.budget_seconds);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed;
}
