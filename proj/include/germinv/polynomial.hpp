#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "germinv/monomial.hpp"
#include "germinv/ring.hpp"
#include "germinv/term_order.hpp"

namespace germinv {

using BigInt = mpz_class;
/// GMP rationals are canonical after every operation: lowest terms,
/// positive denominator, zero is 0/1.
using BigRational = mpq_class;

BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& q);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by degrevlex (descending) with no zero
/// coefficients, so two polynomials over the same ring are equal iff their
/// term vectors are equal.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    BigRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, const BigRational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const BigRational& c = 1);
  /// Combines repeated monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational coefficient(const Monomial& m) const;
  BigRational constant_term() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Minimal total degree of a term (multiplicity at the origin).
  unsigned order_at_origin() const;
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool involves(std::size_t var) const;

  Term leading_term(const TermOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const BigRational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(unsigned e) const;
  Polynomial mul_monomial(const Monomial& m, const BigRational& c) const;

  Polynomial derivative(std::size_t var) const;
  /// Drops every term of total degree >= degree.
  Polynomial truncated(unsigned degree) const;
  /// Homogeneous component of the given degree.
  Polynomial homogeneous_part(unsigned degree) const;

  /// Primitive integer content, positive leading coefficient (degrevlex).
  Polynomial normalized() const;
  /// Scalar c with normalized() == *this * c.
  BigRational normalizing_factor() const;
  BigRational leading_coefficient() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_ring(const Polynomial& o) const;
  void canonicalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { kAdd, kSub, kMul, kExactDiv };

/// Exact arithmetic; kExactDiv throws InexactDivision unless b divides a.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
/// Quotient and remainder of multivariate division by one divisor under the
/// given order.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b,
                                         const TermOrder& order);

/// Primitive gcd, normalized; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(const std::vector<Polynomial>& polys);
/// Squarefree part (product of distinct factors), normalized.
Polynomial squarefree_part(const Polynomial& p);
bool is_unit(const Polynomial& p);

/// Simultaneous substitution. Bound variables are replaced by the given
/// polynomials (all over `result_ring`); every other variable that occurs is
/// mapped to the variable of the same name in `result_ring`.
Polynomial substitute(const Polynomial& g, const std::map<std::string, Polynomial>& bindings,
                      const RingPtr& result_ring);
/// Moves a polynomial into another ring by variable name.
Polynomial change_ring(const Polynomial& g, const RingPtr& result_ring);
/// Evaluates every variable at a rational point (indexed by ring position).
BigRational evaluate(const Polynomial& g, const std::vector<BigRational>& point);

/// Multiplicity of the germ of g at the origin; throws on the zero polynomial.
unsigned order_at_origin(const Polynomial& g);

}  // namespace germinv
