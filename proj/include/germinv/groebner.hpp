#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germinv/polynomial.hpp"

namespace germinv {

/// Budgets enforced by every standard-basis computation on the current
/// thread. Zero means unlimited.
struct Limits {
  std::size_t max_spairs = 0;
  std::size_t max_terms = 0;
  double time_budget_seconds = 0;
};

/// Installs limits for the current thread until destroyed. The wall-clock
/// deadline starts when the scope is created.
class LimitScope {
 public:
  explicit LimitScope(const Limits& limits);
  ~LimitScope();
  LimitScope(const LimitScope&) = delete;
  LimitScope& operator=(const LimitScope&) = delete;

  struct State;

 private:
  std::unique_ptr<State> state_;
  State* previous_;
  friend void check_budget(std::size_t terms);
  friend void count_spair();
};

/// Throws ResourceCapExceeded when the active budget is exhausted.
void check_budget(std::size_t terms = 0);
void count_spair();

/// Dimension of a quotient ring; `finite` is false for INFINITE.
struct QuotientDimension {
  bool finite = false;
  std::size_t value = 0;
  std::vector<Monomial> standard_monomials;

  static QuotientDimension infinite() { return {}; }
  std::string to_string() const { return finite ? std::to_string(value) : "INFINITE"; }
};

/// An ideal given by generators, with a term order and a lazily computed,
/// shared standard basis. Copies share the cache.
class IdealPresentation {
 public:
  IdealPresentation(RingPtr ring, std::vector<Polynomial> generators, TermOrder order);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const TermOrder& order() const { return order_; }

  /// Reduced Groebner basis (global orders) or minimal standard basis
  /// (local order), normalized. Computed once.
  const std::vector<Polynomial>& standard_basis() const;
  bool contains(const Polynomial& p) const;
  /// Full normal form for global orders, weak (Mora) normal form for local.
  Polynomial normal_form(const Polynomial& p) const;
  bool is_unit_ideal() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  TermOrder order_;
  std::shared_ptr<Cache> cache_;
};

std::vector<Polynomial> standard_basis(const IdealPresentation& ideal);

/// Generators of I ∩ Q[remaining variables], computed in a block order with
/// `front_vars` first. The result lives in the same ring, uses degrevlex and
/// contains no front variable.
IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<std::string>& front_vars);

/// dim of the localization at the origin; requires the local order.
QuotientDimension local_quotient_dim(const IdealPresentation& ideal);
/// dim of the global quotient Q[x]/I; requires a global order.
QuotientDimension global_quotient_dim(const IdealPresentation& ideal);

/// Milnor number of a plane curve germ g(0) = 0 (any number of variables is
/// accepted; the Jacobian ideal is taken over every ring variable).
QuotientDimension milnor_number(const Polynomial& g);

/// Element of a free module Q[ring]^r, one polynomial per component.
using ModuleElement = std::vector<Polynomial>;

/// Groebner basis of a submodule of Q[ring]^r under the order that ranks
/// component 0 above all others, then compares monomials by `base`, then
/// prefers lower component indices. Elements whose component 0 vanishes
/// generate the intersection with the span of the remaining components.
std::vector<ModuleElement> module_standard_basis(const RingPtr& ring,
                                                 const std::vector<ModuleElement>& generators,
                                                 const TermOrder& base);

}  // namespace germinv
