#include "germinv/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "germinv/errors.hpp"

namespace germinv {

namespace {

const TermOrder& canonical_order() {
  static const TermOrder order = TermOrder::degrevlex(Monomial::kMaxVars);
  return order;
}

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return canonical_order().compare(a.mono, b.mono) > 0;
}

BigInt lcm_int(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd_int(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) throw InvalidArgument("not a rational number: " + text);
  if (q.get_den() == 0) throw InvalidArgument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("null ring");
}

Polynomial Polynomial::constant(RingPtr ring, const BigRational& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw InvalidArgument("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  std::size_t i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const BigRational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  for (const auto& t : terms_) {
    for (std::size_t i = ring_->size(); i < Monomial::kMaxVars; ++i) {
      if (t.mono[i] != 0) throw RingMismatch("monomial uses a slot outside the ring");
    }
  }
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) {
    throw RingMismatch("operands live in different rings");
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

BigRational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

BigRational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().mono.degree());
}

unsigned Polynomial::order_at_origin() const {
  if (terms_.empty()) throw InvalidArgument("order of the zero polynomial");
  return terms_.back().mono.degree();
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().mono.degree() == terms_.back().mono.degree();
}

bool Polynomial::involves(std::size_t var) const { return degree_in(var) > 0; }

Polynomial::Term Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = canonical_order().compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      BigRational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  if (terms_.empty() || o.terms_.empty()) return r;
  if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mul_monomial(terms_[0].mono, terms_[0].coeff);
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      acc[a.mono * b.mono] += a.coeff * b.coeff;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

Polynomial Polynomial::operator*(const BigRational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const BigRational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves any term order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->size()) throw InvalidArgument("derivative variable out of range");
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    r.terms_.push_back({m, t.coeff * e});
  }
  // Differentiation can reorder terms under degrevlex ties.
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

Polynomial Polynomial::truncated(unsigned degree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() < degree) r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == degree) r.terms_.push_back(t);
  }
  return r;
}

BigRational Polynomial::leading_coefficient() const {
  if (terms_.empty()) return 0;
  return terms_.front().coeff;
}

BigRational Polynomial::normalizing_factor() const {
  if (terms_.empty()) return 1;
  BigInt den_lcm = 1;
  for (const auto& t : terms_) den_lcm = lcm_int(den_lcm, t.coeff.get_den());
  BigInt num_gcd = 0;
  for (const auto& t : terms_) {
    BigInt n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    num_gcd = gcd_int(num_gcd, n);
  }
  BigRational f(den_lcm, num_gcd);
  f.canonicalize();
  if (terms_.front().coeff < 0) f = -f;
  return f;
}

Polynomial Polynomial::normalized() const { return *this * normalizing_factor(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    if (!unit || t.mono.is_one()) {
      os << c.get_str();
      if (!t.mono.is_one()) os << "*";
    }
    bool first_var = true;
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      unsigned e = t.mono[v];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b,
                                         const TermOrder& order) {
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("division across rings");
  Polynomial q(a.ring()), r(a.ring()), p = a;
  auto lt_b = b.leading_term(order);
  while (!p.is_zero()) {
    auto lt_p = p.leading_term(order);
    if (lt_b.mono.divides(lt_p.mono)) {
      Monomial m = lt_p.mono / lt_b.mono;
      BigRational c = lt_p.coeff / lt_b.coeff;
      q += Polynomial::monomial(a.ring(), m, c);
      p -= b.mul_monomial(m, c);
    } else {
      auto t = Polynomial::monomial(a.ring(), lt_p.mono, lt_p.coeff);
      r += t;
      p -= t;
    }
  }
  return {q, r};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InexactDivision("division by zero polynomial");
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("division across rings");
  const TermOrder& order = canonical_order();
  Polynomial q(a.ring()), p = a;
  const auto& lt_b = b.terms().front();
  std::vector<Polynomial::Term> qterms;
  while (!p.is_zero()) {
    const auto& lt_p = p.terms().front();
    if (!lt_b.mono.divides(lt_p.mono)) throw InexactDivision("divisor does not divide dividend");
    Monomial m = lt_p.mono / lt_b.mono;
    BigRational c = lt_p.coeff / lt_b.coeff;
    qterms.push_back({m, c});
    p -= b.mul_monomial(m, c);
  }
  (void)order;
  return Polynomial::from_terms(a.ring(), std::move(qterms));
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kExactDiv: return exact_div(a, b);
  }
  throw InvalidArgument("unknown arithmetic operation");
}

// ---------------------------------------------------------------------------
// gcd: recursive primitive polynomial remainder sequences.

namespace {

std::map<unsigned, Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::map<unsigned, std::vector<Polynomial::Term>> buckets;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::map<unsigned, Polynomial> out;
  for (auto& [e, terms] : buckets) out.emplace(e, Polynomial::from_terms(p.ring(), std::move(terms)));
  return out;
}

Polynomial leading_coeff_in(const Polynomial& p, std::size_t var) {
  auto coeffs = coefficients_in(p, var);
  return coeffs.rbegin()->second;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
  auto coeffs = coefficients_in(p, var);
  Polynomial g(p.ring());
  for (auto& [e, c] : coeffs) {
    g = gcd_rec(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  unsigned db = b.degree_in(var);
  Polynomial lcb = leading_coeff_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    unsigned da = a.degree_in(var);
    Polynomial lca = leading_coeff_in(a, var);
    Polynomial shifted = b * lca;
    if (da > db) shifted = shifted.mul_monomial(Monomial::variable(var, da - db), 1);
    a = a * lcb - shifted;
    if (!a.is_zero()) a = a.normalized();
  }
  return a;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  Polynomial c = content_in(p, var);
  return exact_div(p, c).normalized();
}

// Arithmetic modulo the prime 2^31 - 1 for the coprimality certificate.
constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> mod_image(const BigRational& c) {
  BigInt n = c.get_num() % static_cast<unsigned long>(kPrime);
  BigInt d = c.get_den() % static_cast<unsigned long>(kPrime);
  if (d == 0) return std::nullopt;
  if (n < 0) n += static_cast<unsigned long>(kPrime);
  std::uint64_t nn = n.get_ui(), dd = d.get_ui();
  return nn * mod_pow(dd, kPrime - 2) % kPrime;
}

// Univariate image in `var` after evaluating the other variables at `point`,
// ascending coefficients; nullopt when a coefficient has p in its denominator.
std::optional<std::vector<std::uint64_t>> univariate_image(const Polynomial& p, std::size_t var,
                                                           const std::vector<std::uint64_t>& point) {
  std::vector<std::uint64_t> out(p.degree_in(var) + 1, 0);
  for (const auto& t : p.terms()) {
    auto c = mod_image(t.coeff);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (std::size_t w = 0; w < point.size(); ++w)
      if (w != var && t.mono[w]) v = v * mod_pow(point[w], t.mono[w]) % kPrime;
    out[t.mono[var]] = (out[t.mono[var]] + v) % kPrime;
  }
  return out;
}

std::size_t univariate_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      std::uint64_t f = a.back() * mod_pow(b.back(), kPrime - 2) % kPrime;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + kPrime - f * b[i] % kPrime) % kPrime;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True when a modular image proves gcd(a, b) is constant: for each variable
// in both, the univariate images at a point where neither leading
// coefficient vanishes have a constant gcd, which bounds the degree of the
// true gcd in that variable by zero.
bool certified_coprime(const Polynomial& a, const Polynomial& b) {
  std::size_t n = a.ring()->size();
  std::vector<std::uint64_t> point(n);
  for (std::size_t v = 0; v < n; ++v) point[v] = 1000003 + 7919 * v * v + 104729 * v;
  for (std::size_t v = 0; v < n; ++v) {
    if (!a.involves(v) || !b.involves(v)) continue;
    auto ia = univariate_image(a, v, point), ib = univariate_image(b, v, point);
    if (!ia || !ib) return false;
    if (ia->back() == 0 || ib->back() == 0) return false;
    if (univariate_gcd_degree(*ia, *ib) != 0) return false;
  }
  return true;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
  if (a.size() > 8 && b.size() > 8 && certified_coprime(a, b)) return Polynomial::constant(a.ring(), 1);
  std::size_t nv = a.ring()->size();
  std::size_t var = nv;
  for (std::size_t v = nv; v-- > 0;) {
    if (a.involves(v) || b.involves(v)) {
      var = v;
      break;
    }
  }
  bool in_a = a.involves(var), in_b = b.involves(var);
  if (!in_a) return gcd_rec(a, content_in(b, var));
  if (!in_b) return gcd_rec(content_in(a, var), b);

  Polynomial ca = content_in(a, var), cb = content_in(b, var);
  Polynomial c = gcd_rec(ca, cb);
  Polynomial p = exact_div(a, ca).normalized();
  Polynomial q = exact_div(b, cb).normalized();
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (true) {
    Polynomial r = pseudo_remainder(p, q, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      q = Polynomial::constant(a.ring(), 1);
      break;
    }
    p = std::move(q);
    q = primitive_in(r, var);
  }
  return (c * q).normalized();
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("gcd across rings");
  return gcd_rec(a, b);
}

Polynomial poly_gcd(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw InvalidArgument("gcd of an empty list");
  Polynomial g(polys.front().ring());
  for (const auto& p : polys) {
    g = poly_gcd(g, p);
    if (is_unit(g)) break;
  }
  return g;
}

bool is_unit(const Polynomial& p) { return p.is_constant() && !p.is_zero(); }

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return p.normalized();
  Polynomial g = p;
  for (std::size_t v = 0; v < p.ring()->size(); ++v) {
    if (p.involves(v)) g = poly_gcd(g, p.derivative(v));
  }
  return exact_div(p, g).normalized();
}

// ---------------------------------------------------------------------------

Polynomial substitute(const Polynomial& g, const std::map<std::string, Polynomial>& bindings,
                      const RingPtr& result_ring) {
  const Ring& src = *g.ring();
  std::vector<const Polynomial*> images(src.size(), nullptr);
  std::vector<Polynomial> implicit;
  implicit.reserve(src.size());
  for (const auto& [name, poly] : bindings) {
    std::size_t i = src.require_index(name);
    if (!poly.ring()->same_as(*result_ring)) throw RingMismatch("binding for '" + name + "' is not in the result ring");
    images[i] = &poly;
  }
  for (std::size_t v = 0; v < src.size(); ++v) {
    if (images[v] || !g.involves(v)) continue;
    implicit.push_back(Polynomial::variable(result_ring, result_ring->require_index(src.name(v))));
  }
  std::size_t k = 0;
  for (std::size_t v = 0; v < src.size(); ++v) {
    if (images[v] || !g.involves(v)) continue;
    images[v] = &implicit[k++];
  }

  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(result_ring, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[v]);
    return cache[e];
  };

  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  for (const auto& t : g.terms()) {
    Polynomial prod = Polynomial::constant(result_ring, t.coeff);
    for (std::size_t v = 0; v < src.size() && !prod.is_zero(); ++v) {
      if (t.mono[v]) prod = prod * power(v, t.mono[v]);
    }
    for (const auto& pt : prod.terms()) acc[pt.mono] += pt.coeff;
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(result_ring, std::move(terms));
}

Polynomial change_ring(const Polynomial& g, const RingPtr& result_ring) {
  if (g.ring()->same_as(*result_ring)) return Polynomial::from_terms(result_ring, g.terms());
  std::vector<int> map(g.ring()->size(), -1);
  for (std::size_t v = 0; v < g.ring()->size(); ++v) {
    if (auto i = result_ring->index_of(g.ring()->name(v))) map[v] = static_cast<int>(*i);
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(g.size());
  for (const auto& t : g.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < g.ring()->size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (map[v] < 0) throw RingMismatch("variable '" + g.ring()->name(v) + "' missing from target ring");
      m.set(static_cast<std::size_t>(map[v]), t.mono[v]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(result_ring, std::move(terms));
}

BigRational evaluate(const Polynomial& g, const std::vector<BigRational>& point) {
  if (point.size() != g.ring()->size()) throw InvalidArgument("evaluation point has wrong dimension");
  BigRational sum = 0;
  for (const auto& t : g.terms()) {
    BigRational prod = t.coeff;
    for (std::size_t v = 0; v < point.size(); ++v) {
      for (unsigned e = 0; e < t.mono[v]; ++e) prod *= point[v];
    }
    sum += prod;
  }
  return sum;
}

unsigned order_at_origin(const Polynomial& g) { return g.order_at_origin(); }

}  // namespace germinv
