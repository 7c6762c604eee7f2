#include <algorithm>
#include <random>

#include "doctest.h"
#include "germinv/errors.hpp"
#include "germinv/matrix.hpp"
#include "germinv/parse.hpp"
#include "germinv/polynomial.hpp"
#include "germinv/term_order.hpp"
#include "oracles.hpp"

using namespace germinv;

namespace {

Polynomial P(const std::string& s, const RingPtr& r = rings::source()) { return parse_polynomial(s, r); }

const RingPtr& univariate() {
  static const RingPtr r = Ring::make({"u"});
  return r;
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned max_deg, unsigned terms) {
  Polynomial p(ring);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  for (unsigned i = 0; i < terms; ++i) {
    std::vector<unsigned> e(ring->size());
    for (auto& v : e) v = deg(rng);
    p += Polynomial::monomial(ring, Monomial(std::span<const unsigned>(e)), coeff(rng));
  }
  return p;
}

// Cofactor expansion along the first row.
Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      sub.emplace_back();
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) sub.back().push_back(m[i][k]);
    }
    Polynomial term = m[0][j] * cofactor_det(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST_CASE("monomial arithmetic and divisibility") {
  Monomial a{2, 1}, b{1, 3};
  CHECK((a * b) == Monomial{3, 4});
  CHECK(Monomial::lcm(a, b) == Monomial{2, 3});
  CHECK(Monomial::gcd(a, b) == Monomial{1, 1});
  CHECK(Monomial{1, 1}.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK((a / Monomial{1, 0}) == Monomial{1, 1});
  CHECK(a.degree() == 3);
  CHECK(Monomial{2, 0}.coprime(Monomial{0, 5}));
}

TEST_CASE("term orders rank monomials as documented") {
  auto g = TermOrder::degrevlex(2);
  CHECK(g.greater(Monomial{0, 3}, Monomial{2, 0}));  // higher degree wins
  CHECK(g.greater(Monomial{2, 0}, Monomial{1, 1}));
  auto l = TermOrder::local(2);
  CHECK(l.greater(Monomial{1, 0}, Monomial{0, 3}));  // lower degree wins
  CHECK(l.greater(Monomial{2, 0}, Monomial{1, 1}));
  auto lex = TermOrder::lex(2);
  CHECK(lex.greater(Monomial{1, 0}, Monomial{0, 9}));
  auto e = TermOrder::elimination(3, {0});
  CHECK(e.greater(Monomial{1, 0, 0}, Monomial{0, 5, 5}));
  CHECK(e.greater(Monomial{0, 2, 0}, Monomial{0, 1, 0}));
}

TEST_CASE("parser accepts the shared grammar") {
  CHECK(P("x^2 + 2xy + y^2") == P("(x+y)^2"));
  CHECK(P("1/2 x") * 2 == P("x"));
  CHECK(P("2(x - y)") == P("2*x - 2*y"));
  CHECK(P("-x^0") == Polynomial::constant(rings::source(), -1));
  auto pair = rings::source_pair();
  CHECK(P("x' - x", pair) == P("-(x - x')", pair));
  CHECK(P("X*Y - Z", rings::target()).size() == 2);
}

TEST_CASE("parser reports errors with an offset") {
  CHECK_THROWS_AS(P("x + q"), ParseError);
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P("X", rings::source()), ParseError);
  try {
    P("x + q");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_triple("(x, y)", rings::source()), ParseError);
}

TEST_CASE("normalization gives positive leading coefficient and primitive content") {
  Polynomial p = P("-6x^2 + 4y");
  Polynomial n = p.normalized();
  CHECK(n.leading_coefficient() > 0);
  CHECK(p * p.normalizing_factor() == n);
  CHECK(P("1/3 x + 2/3 y").normalized() == P("x + 2y"));
}

TEST_CASE("arithmetic laws on random polynomials") {
  std::mt19937_64 rng(7);
  auto R = rings::source();
  for (int i = 0; i < 20; ++i) {
    Polynomial a = random_poly(rng, R, 4, 5), b = random_poly(rng, R, 4, 5), c = random_poly(rng, R, 3, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
    CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
  }
}

TEST_CASE("exact division rejects non-divisors; rings do not mix") {
  CHECK_THROWS_AS(exact_div(P("x^2 + 1"), P("x + 1")), InexactDivision);
  CHECK_THROWS_AS(P("x") + P("X", rings::target()), RingMismatch);
}

TEST_CASE("univariate division agrees with schoolbook long division") {
  std::mt19937_64 rng(11);
  auto R = univariate();
  for (int i = 0; i < 30; ++i) {
    Polynomial a = random_poly(rng, R, 9, 6), b = random_poly(rng, R, 4, 3);
    if (b.is_zero()) continue;
    auto [q, r] = divide(a, b, TermOrder::degrevlex(1));
    auto [oq, orem] = oracle::long_division(oracle::to_dense(a), oracle::to_dense(b));
    CHECK(oracle::to_dense(q) == oq);
    CHECK(oracle::to_dense(r) == orem);
  }
}

TEST_CASE("univariate gcd agrees with the Euclidean remainder sequence") {
  std::mt19937_64 rng(13);
  auto R = univariate();
  for (int i = 0; i < 30; ++i) {
    Polynomial common = random_poly(rng, R, 3, 3);
    Polynomial a = random_poly(rng, R, 5, 4) * common, b = random_poly(rng, R, 5, 4) * common;
    if (a.is_zero() || b.is_zero()) continue;
    auto g = oracle::to_dense(poly_gcd(a, b));
    auto e = oracle::euclid_gcd(oracle::to_dense(a), oracle::to_dense(b));
    REQUIRE(!g.empty());
    BigRational lc = g.back();
    for (auto& c : g) c /= lc;
    CHECK(g == e);
  }
}

TEST_CASE("multivariate gcd recovers a planted common factor") {
  std::mt19937_64 rng(17);
  auto R = rings::source();
  for (int i = 0; i < 15; ++i) {
    Polynomial g = random_poly(rng, R, 3, 3), a = random_poly(rng, R, 3, 4), b = random_poly(rng, R, 3, 4);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial d = poly_gcd(a * g, b * g);
    CHECK(exact_div(a * g, d) * d == a * g);
    CHECK(exact_div(d, poly_gcd(a, b) * g.normalized()).is_constant());
  }
  CHECK(poly_gcd(P("x^2 - y^2"), P("x^2 + 2xy + y^2")) == P("x + y"));
  CHECK(poly_gcd(P("x"), P("y")) == P("1"));
}

TEST_CASE("squarefree part removes repeated factors") {
  CHECK(squarefree_part(P("(x - y)^3 (x + 2y)^2 x")) == P("(x - y)(x + 2y) x").normalized());
  CHECK(squarefree_part(P("x^2 + y^3")) == P("x^2 + y^3"));
  Polynomial big = P("(x^5 + y^5 + x*y)^2 (x - 3y)");
  CHECK(squarefree_part(big) == P("(x^5 + y^5 + x*y)(x - 3y)").normalized());
}

TEST_CASE("substitution and evaluation") {
  auto T = rings::target();
  Polynomial g = P("X^2 - Y*Z", T);
  Polynomial s = substitute(g, {{"X", P("x^2")}, {"Y", P("x")}, {"Z", P("x^3")}}, rings::source());
  CHECK(s.is_zero());
  CHECK(evaluate(P("x^2 y + 1/2"), {BigRational(2), BigRational(3)}) == BigRational(25, 2));
  CHECK(change_ring(P("x y"), rings::source_param()) == P("x y", rings::source_param()));
  CHECK(order_at_origin(P("x^3 + x y^5")) == 3);
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  std::mt19937_64 rng(19);
  auto R = rings::source();
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u}) {
    std::vector<std::vector<Polynomial>> m(n);
    for (auto& row : m)
      for (std::size_t j = 0; j < n; ++j) row.push_back(random_poly(rng, R, 2, 2));
    CHECK(determinant(PolyMatrix::from_rows(m)) == cofactor_det(m));
  }
  // A zero leading pivot forces a row swap.
  std::vector<std::vector<Polynomial>> swap{{P("0"), P("x")}, {P("y"), P("1")}};
  CHECK(determinant(PolyMatrix::from_rows(swap)) == P("-x y"));
}

TEST_CASE("minors of a 3x2 matrix") {
  auto m = PolyMatrix::from_rows({{P("x"), P("y")}, {P("1"), P("x")}, {P("y"), P("0")}});
  auto ms = minors(m, 2);
  std::vector<Polynomial> expected{P("x^2 - y"), P("y^2"), P("x y")};
  CHECK(ms.size() == 3);
  for (const auto& e : expected) CHECK(std::find(ms.begin(), ms.end(), e) != ms.end());
  // Entries are listed once each: x, y, 1.
  CHECK(minors(m, 1).size() == 3);
}
