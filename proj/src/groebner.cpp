#include "germinv/groebner.hpp"

#include <algorithm>
#include <mutex>

#include "germinv/errors.hpp"

namespace germinv {

// ---------------------------------------------------------------------------
// Budgets

struct LimitScope::State {
  Limits limits;
  std::chrono::steady_clock::time_point deadline;
  std::size_t spairs = 0;
};

namespace {
thread_local LimitScope::State* g_budget = nullptr;
}

LimitScope::LimitScope(const Limits& limits) : state_(std::make_unique<State>()), previous_(g_budget) {
  state_->limits = limits;
  if (limits.time_budget_seconds > 0) {
    state_->deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(limits.time_budget_seconds));
  }
  g_budget = state_.get();
}

LimitScope::~LimitScope() { g_budget = previous_; }

void check_budget(std::size_t terms) {
  auto* s = g_budget;
  if (!s) return;
  if (s->limits.max_terms && terms > s->limits.max_terms) {
    throw ResourceCapExceeded("polynomial exceeded " + std::to_string(s->limits.max_terms) + " terms");
  }
  if (s->limits.time_budget_seconds > 0 && std::chrono::steady_clock::now() > s->deadline) {
    throw ResourceCapExceeded("time budget exhausted");
  }
}

void count_spair() {
  auto* s = g_budget;
  if (!s) return;
  ++s->spairs;
  if (s->limits.max_spairs && s->spairs > s->limits.max_spairs) {
    throw ResourceCapExceeded("more than " + std::to_string(s->limits.max_spairs) + " S-pairs");
  }
  check_budget();
}

// ---------------------------------------------------------------------------
// Integer working representation

namespace {

struct ITerm {
  Monomial m;
  std::uint32_t comp = 0;
  BigInt c;
};

struct IPoly {
  std::vector<ITerm> t;
  unsigned sugar = 0;
  unsigned ecart = 0;
  std::uint32_t lm_mask = 0;
  // This polynomial equals scale times the polynomial it was derived from.
  BigRational scale = 1;

  bool empty() const { return t.empty(); }
  const ITerm& lt() const { return t.front(); }
};

class Cmp {
 public:
  Cmp(const TermOrder& order, bool module) : order_(order), module_(module) {}

  int operator()(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const {
    if (module_) {
      bool a0 = ac == 0, b0 = bc == 0;
      if (a0 != b0) return a0 ? 1 : -1;
      if (int c = order_.compare(am, bm)) return c;
      if (ac != bc) return ac < bc ? 1 : -1;
      return 0;
    }
    return order_.compare(am, bm);
  }
  int operator()(const ITerm& a, const ITerm& b) const { return (*this)(a.m, a.comp, b.m, b.comp); }

  const TermOrder& order() const { return order_; }
  bool module() const { return module_; }
  bool local() const { return !order_.is_global(); }

 private:
  TermOrder order_;
  bool module_;
};

unsigned max_degree(const IPoly& p) {
  unsigned d = 0;
  for (const auto& t : p.t) d = std::max(d, t.m.degree());
  return d;
}

void refresh(IPoly& p) {
  if (p.t.empty()) {
    p.lm_mask = 0;
    p.ecart = 0;
    return;
  }
  p.lm_mask = p.lt().m.support();
  p.ecart = max_degree(p) - p.lt().m.degree();
}

void make_primitive(IPoly& p) {
  if (p.t.empty()) return;
  BigInt g = 0;
  for (const auto& t : p.t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.lt().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : p.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    p.scale /= g;
  }
}

void sort_terms(IPoly& p, const Cmp& cmp) {
  std::sort(p.t.begin(), p.t.end(), [&](const ITerm& a, const ITerm& b) { return cmp(a, b) > 0; });
}

IPoly to_ipoly(const Polynomial& p, std::uint32_t comp, const Cmp& cmp) {
  IPoly r;
  BigRational f = p.normalizing_factor();
  for (const auto& t : p.terms()) {
    BigRational c = t.coeff * f;
    r.t.push_back({t.mono, comp, c.get_num()});
  }
  sort_terms(r, cmp);
  r.sugar = p.is_zero() ? 0 : static_cast<unsigned>(p.total_degree());
  r.scale = f;
  refresh(r);
  return r;
}

// a*p - b*shift*g. The leading terms are expected to cancel when used for
// reduction, but the merge is general.
IPoly combine(const IPoly& p, const BigInt& a, const IPoly& g, const Monomial& shift, const BigInt& b,
              const Cmp& cmp) {
  IPoly r;
  r.t.reserve(p.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  ITerm gt;
  bool have_g = false;
  while (true) {
    if (!have_g && j < g.t.size()) {
      gt.m = g.t[j].m * shift;
      gt.comp = g.t[j].comp;
      have_g = true;
    }
    bool have_p = i < p.t.size();
    if (!have_p && !have_g) break;
    int c;
    if (!have_p) c = -1;
    else if (!have_g) c = 1;
    else c = cmp(p.t[i].m, p.t[i].comp, gt.m, gt.comp);
    if (c > 0) {
      r.t.push_back({p.t[i].m, p.t[i].comp, a * p.t[i].c});
      ++i;
    } else if (c < 0) {
      r.t.push_back({gt.m, gt.comp, -(b * g.t[j].c)});
      ++j;
      have_g = false;
    } else {
      BigInt v = a * p.t[i].c - b * g.t[j].c;
      if (v != 0) r.t.push_back({p.t[i].m, p.t[i].comp, std::move(v)});
      ++i;
      ++j;
      have_g = false;
    }
  }
  r.sugar = std::max(p.sugar, g.sugar + shift.degree());
  r.scale = p.scale * a;
  return r;
}

// Multipliers (a, b) with a*lc_p - b*lc_g = 0 and gcd(a, b) = 1.
void cancel_factors(const BigInt& lc_p, const BigInt& lc_g, BigInt& a, BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), lc_p.get_mpz_t(), lc_g.get_mpz_t());
  a = lc_g / g;
  b = lc_p / g;
  if (a < 0) {
    a = -a;
    b = -b;
  }
}

// Reduces the term at position idx of p against g (whose leading term divides it).
IPoly reduce_at(const IPoly& p, std::size_t idx, const IPoly& g, const Cmp& cmp) {
  Monomial shift = p.t[idx].m / g.lt().m;
  BigInt a, b;
  cancel_factors(p.t[idx].c, g.lt().c, a, b);
  IPoly r = combine(p, a, g, shift, b, cmp);
  return r;
}

bool lm_divides(const IPoly& g, const ITerm& t) {
  if (g.lt().comp != t.comp) return false;
  if ((g.lm_mask & ~t.m.support()) != 0) return false;
  return g.lt().m.divides(t.m);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  unsigned sugar;
  std::size_t serial;
};

// ---------------------------------------------------------------------------

class Engine {
 public:
  Engine(const Cmp& cmp, std::size_t nvars) : cmp_(cmp), nvars_(nvars) {}

  void add_generator(IPoly p) {
    if (p.empty()) return;
    if (cmp_.local()) {
      p = weak_normal_form(std::move(p));
    } else {
      p = full_reduce(std::move(p), active_indices());
    }
    if (p.empty()) return;
    make_primitive(p);
    refresh(p);
    insert(std::move(p));
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (better(*it, *best)) best = it;
      }
      Pair pr = *best;
      pairs_.erase(best);
      if (truncated_ && pr.lcm.degree() >= corner_) continue;
      count_spair();
      IPoly s = spoly(pr);
      IPoly h = cmp_.local() ? weak_normal_form(std::move(s)) : full_reduce(std::move(s), active_indices());
      if (h.empty()) continue;
      make_primitive(h);
      refresh(h);
      insert(std::move(h));
    }
  }

  // Minimal basis (local) or reduced basis (global), sorted ascending by
  // leading term.
  std::vector<IPoly> result() {
    std::vector<std::size_t> idx = active_indices();
    std::vector<IPoly> out;
    if (cmp_.local()) {
      for (auto i : idx) out.push_back(polys_[i]);
      if (truncated_) append_corner_monomials(out);
    } else {
      for (auto i : idx) {
        std::vector<std::size_t> others;
        for (auto k : idx)
          if (k != i) others.push_back(k);
        IPoly r = full_reduce(polys_[i], others);
        make_primitive(r);
        refresh(r);
        out.push_back(std::move(r));
      }
    }
    std::sort(out.begin(), out.end(), [&](const IPoly& a, const IPoly& b) { return cmp_(a.lt(), b.lt()) < 0; });
    return out;
  }

  // Full normal form for global orders, weak normal form for local ones.
  IPoly reduce(IPoly p) {
    if (cmp_.local()) return weak_normal_form(std::move(p));
    return full_reduce(std::move(p), active_indices());
  }

 private:
  bool better(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = cmp_(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return cmp_.local() ? c > 0 : c < 0;
    return a.serial < b.serial;
  }

  std::vector<std::size_t> active_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) out.push_back(i);
    return out;
  }

  IPoly spoly(const Pair& pr) {
    const IPoly& f = polys_[pr.i];
    const IPoly& g = polys_[pr.j];
    Monomial sf = pr.lcm / f.lt().m;
    Monomial sg = pr.lcm / g.lt().m;
    BigInt a, b;
    cancel_factors(f.lt().c, g.lt().c, a, b);
    IPoly shifted;
    shifted.t.reserve(f.t.size());
    for (const auto& t : f.t) shifted.t.push_back({t.m * sf, t.comp, t.c});
    shifted.sugar = f.sugar + sf.degree();
    IPoly r = combine(shifted, a, g, sg, b, cmp_);
    truncate(r);
    refresh(r);
    return r;
  }

  void maybe_content(IPoly& p, std::size_t& steps) {
    if (++steps % 6 == 0) make_primitive(p);
  }

  IPoly full_reduce(IPoly p, const std::vector<std::size_t>& basis) {
    std::size_t steps = 0;
    std::size_t idx = 0;
    while (idx < p.t.size()) {
      const IPoly* red = nullptr;
      for (auto k : basis) {
        const IPoly& g = polys_[k];
        if (lm_divides(g, p.t[idx]) && (!red || g.t.size() < red->t.size())) red = &g;
      }
      if (!red) {
        ++idx;
        continue;
      }
      p = reduce_at(p, idx, *red, cmp_);
      check_budget(p.t.size());
      maybe_content(p, steps);
    }
    refresh(p);
    return p;
  }

  // Mora's normal form with ecart, over the reducer set T (basis elements and
  // remembered intermediate remainders).
  IPoly weak_normal_form(IPoly h) {
    truncate(h);
    refresh(h);
    std::size_t steps = 0;
    std::vector<IPoly> extra;
    while (!h.empty()) {
      const IPoly* red = nullptr;
      auto consider = [&](const IPoly& g) {
        if (g.empty() || !lm_divides(g, h.lt())) return;
        if (!red || g.ecart < red->ecart || (g.ecart == red->ecart && g.t.size() < red->t.size())) red = &g;
      };
      for (std::size_t k = 0; k < polys_.size(); ++k)
        if (active_[k]) consider(polys_[k]);
      for (const auto& g : reducers_) consider(g);
      for (const auto& g : extra) consider(g);
      if (!red) break;
      IPoly g = *red;
      if (g.ecart > h.ecart) extra.push_back(h);
      h = reduce_at(h, 0, g, cmp_);
      truncate(h);
      refresh(h);
      check_budget(h.t.size());
      maybe_content(h, steps);
    }
    refresh(h);
    return h;
  }

  void truncate(IPoly& p) {
    if (!truncated_) return;
    std::erase_if(p.t, [&](const ITerm& t) { return t.m.degree() >= corner_; });
  }

  void insert(IPoly h) {
    std::size_t n = polys_.size();
    const Monomial& hm = h.lt().m;
    std::uint32_t hc = h.lt().comp;
    bool module = cmp_.module();

    // Gebauer-Moeller update.
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::size_t k = 0; k < n; ++k) {
      if (!active_[k] || polys_[k].lt().comp != hc) continue;
      const Monomial& gm = polys_[k].lt().m;
      cands.push_back({k, Monomial::lcm(gm, hm), !module && gm.coprime(hm)});
    }
    // Chain criterion among the new pairs: drop (g,h) when another new pair's
    // lcm properly divides it, or divides it and comes first.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        if (cands[b].lcm == cands[a].lcm) {
          // Equal lcms: keep exactly one, preferring a coprime witness.
          if (cands[b].coprime && !cands[a].coprime) cands[a].keep = false;
          else if (cands[b].coprime == cands[a].coprime && b < a) cands[a].keep = false;
        } else {
          cands[a].keep = false;
        }
        if (!cands[a].keep) break;
      }
    }
    // Old pairs whose lcm is divisible by LM(h) with both new lcms different.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != hc || !hm.divides(p.lcm)) return false;
      Monomial l1 = Monomial::lcm(polys_[p.i].lt().m, hm);
      Monomial l2 = Monomial::lcm(polys_[p.j].lt().m, hm);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    h.sugar = std::max(h.sugar, hm.degree());
    for (const auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      const IPoly& g = polys_[c.g];
      unsigned sugar = std::max(g.sugar + c.lcm.degree() - g.lt().m.degree(), h.sugar + c.lcm.degree() - hm.degree());
      pairs_.push_back({c.g, n, c.lcm, hc, sugar, serial_++});
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!active_[k] || polys_[k].lt().comp != hc) continue;
      if (hm.divides(polys_[k].lt().m)) {
        active_[k] = false;
        // In the local case the replaced element remains a valid reducer.
        if (cmp_.local()) reducers_.push_back(polys_[k]);
      }
    }
    polys_.push_back(std::move(h));
    active_.push_back(true);
    if (cmp_.local() && !cmp_.module()) update_corner();
  }

  // Once every variable has a pure power among the leading monomials, all
  // monomials of degree >= corner lie in the leading ideal, so the ideal
  // contains the corner power of the maximal ideal and every computation may
  // be done modulo it.
  void update_corner() {
    std::vector<unsigned> bound(nvars_, 0);
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      const Monomial& m = polys_[k].lt().m;
      std::uint32_t s = m.support();
      if (s == 0) {
        set_corner(0);
        return;
      }
      if ((s & (s - 1)) == 0) {
        std::size_t v = static_cast<std::size_t>(__builtin_ctz(s));
        if (bound[v] == 0 || m[v] < bound[v]) bound[v] = m[v];
      }
    }
    for (auto b : bound)
      if (b == 0) return;
    std::vector<Monomial> lms;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) lms.push_back(polys_[k].lt().m);
    unsigned maxdeg = 0;
    bool any = false;
    enumerate_staircase(bound, lms, [&](const Monomial& m) {
      any = true;
      maxdeg = std::max(maxdeg, m.degree());
    });
    set_corner(any ? maxdeg + 1 : 0);
  }

  void set_corner(unsigned d) {
    if (truncated_ && d >= corner_) return;
    truncated_ = true;
    corner_ = d;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      if (polys_[k].lt().m.degree() >= corner_) {
        active_[k] = false;
        continue;
      }
      truncate(polys_[k]);
      refresh(polys_[k]);
    }
    std::erase_if(reducers_, [&](IPoly& g) {
      if (g.lt().m.degree() >= corner_) return true;
      truncate(g);
      refresh(g);
      return false;
    });
  }

  void append_corner_monomials(std::vector<IPoly>& out) {
    std::vector<Monomial> lms;
    for (const auto& p : out) lms.push_back(p.lt().m);
    std::vector<unsigned> e(nvars_, 0);
    // Every monomial of degree exactly corner_ not already in the leading ideal.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
      if (v + 1 == nvars_) {
        e[v] = left;
        Monomial m(std::span<const unsigned>(e.data(), e.size()));
        bool covered = std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
        if (!covered) {
          IPoly p;
          p.t.push_back({m, 0, BigInt(1)});
          p.sugar = m.degree();
          refresh(p);
          out.push_back(std::move(p));
        }
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        e[v] = k;
        rec(v + 1, left - k);
      }
      e[v] = 0;
    };
    if (nvars_ > 0) rec(0, corner_);
  }

 public:
  template <typename Fn>
  static void enumerate_staircase(const std::vector<unsigned>& bound, const std::vector<Monomial>& lms, Fn&& fn) {
    std::size_t n = bound.size();
    std::vector<unsigned> e(n, 0);
    while (true) {
      Monomial m(std::span<const unsigned>(e.data(), n));
      bool covered = std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
      if (!covered) fn(m);
      std::size_t v = 0;
      while (v < n) {
        if (++e[v] < bound[v]) break;
        e[v] = 0;
        ++v;
      }
      if (v == n) break;
    }
  }

 private:
  Cmp cmp_;
  std::size_t nvars_;
  std::vector<IPoly> polys_;
  std::vector<bool> active_;
  std::vector<IPoly> reducers_;
  std::vector<Pair> pairs_;
  std::size_t serial_ = 0;
  bool truncated_ = false;
  unsigned corner_ = 0;
};

Polynomial to_polynomial(const IPoly& p, const RingPtr& ring, std::uint32_t comp) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : p.t) {
    if (t.comp == comp) terms.push_back({t.m, BigRational(t.c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<IPoly> compute_basis(const std::vector<Polynomial>& gens, const TermOrder& order, std::size_t nvars) {
  Cmp cmp(order, false);
  Engine engine(cmp, nvars);
  std::vector<IPoly> in;
  for (const auto& g : gens)
    if (!g.is_zero()) in.push_back(to_ipoly(g, 0, cmp));
  std::sort(in.begin(), in.end(), [&](const IPoly& a, const IPoly& b) { return cmp(a.lt(), b.lt()) < 0; });
  for (auto& p : in) engine.add_generator(std::move(p));
  engine.run();
  return engine.result();
}

std::vector<unsigned> pure_power_bounds(const std::vector<Polynomial>& basis, const TermOrder& order,
                                        std::size_t nvars, bool& unit) {
  std::vector<unsigned> bound(nvars, 0);
  unit = false;
  for (const auto& g : basis) {
    Monomial m = g.leading_term(order).mono;
    std::uint32_t s = m.support();
    if (s == 0) unit = true;
    if (s && (s & (s - 1)) == 0) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctz(s));
      if (bound[v] == 0 || m[v] < bound[v]) bound[v] = m[v];
    }
  }
  return bound;
}

QuotientDimension quotient_from_basis(const std::vector<Polynomial>& basis, const TermOrder& order,
                                      std::size_t nvars) {
  bool unit = false;
  auto bound = pure_power_bounds(basis, order, nvars, unit);
  QuotientDimension q;
  if (unit) {
    q.finite = true;
    return q;
  }
  for (auto b : bound)
    if (b == 0) return QuotientDimension::infinite();
  std::vector<Monomial> lms;
  for (const auto& g : basis) lms.push_back(g.leading_term(order).mono);
  q.finite = true;
  Engine::enumerate_staircase(bound, lms, [&](const Monomial& m) { q.standard_monomials.push_back(m); });
  std::sort(q.standard_monomials.begin(), q.standard_monomials.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return b < a;
  });
  q.value = q.standard_monomials.size();
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------

struct IdealPresentation::Cache {
  std::once_flag once;
  std::vector<Polynomial> basis;
};

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators, TermOrder order)
    : ring_(std::move(ring)), generators_(std::move(generators)), order_(std::move(order)),
      cache_(std::make_shared<Cache>()) {
  if (order_.nvars() != ring_->size()) throw InvalidArgument("term order does not match the ring");
  for (const auto& g : generators_) {
    if (!g.ring()->same_as(*ring_)) throw RingMismatch("generator from another ring");
  }
  std::erase_if(generators_, [](const Polynomial& g) { return g.is_zero(); });
}

const std::vector<Polynomial>& IdealPresentation::standard_basis() const {
  std::call_once(cache_->once, [&] {
    std::vector<Polynomial> out;
    for (const auto& p : compute_basis(generators_, order_, ring_->size())) {
      out.push_back(to_polynomial(p, ring_, 0).normalized());
    }
    cache_->basis = std::move(out);
  });
  return cache_->basis;
}

Polynomial IdealPresentation::normal_form(const Polynomial& p) const {
  if (!p.ring()->same_as(*ring_)) throw RingMismatch("normal form across rings");
  if (p.is_zero()) return p;
  Cmp cmp(order_, false);
  Engine engine(cmp, ring_->size());
  for (const auto& g : standard_basis()) engine.add_generator(to_ipoly(g, 0, cmp));
  IPoly r = engine.reduce(to_ipoly(p, 0, cmp));
  return to_polynomial(r, ring_, 0) * (1 / r.scale);
}

bool IdealPresentation::contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

bool IdealPresentation::is_unit_ideal() const {
  for (const auto& g : standard_basis()) {
    if (g.leading_term(order_).mono.is_one()) return true;
  }
  return false;
}

std::vector<Polynomial> standard_basis(const IdealPresentation& ideal) { return ideal.standard_basis(); }

namespace {

// Eliminates through the homogenized ideal: with h^k g^h in the homogenized
// ideal for every g in the elimination ideal, setting h = 1 in the
// h-extended elimination ideal recovers exactly the elimination ideal.
// Inhomogeneous inputs behave far better this way under block orders.
IdealPresentation eliminate_homogenized(const IdealPresentation& ideal, const std::vector<std::size_t>& front) {
  const RingPtr& ring = ideal.ring();
  std::size_t n = ring->size();
  std::vector<std::string> names = ring->names();
  std::string h = "h";
  while (ring->index_of(h)) h += "'";
  names.push_back(h);
  RingPtr R = Ring::make(names);
  std::vector<unsigned> e(n + 1);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    unsigned d = static_cast<unsigned>(g.total_degree());
    std::vector<Polynomial::Term> terms;
    for (const auto& t : g.terms()) {
      for (std::size_t v = 0; v < n; ++v) e[v] = t.mono[v];
      e[n] = d - t.mono.degree();
      terms.push_back({Monomial(std::span<const unsigned>(e.data(), e.size())), t.coeff});
    }
    gens.push_back(Polynomial::from_terms(R, std::move(terms)));
  }
  IdealPresentation work(R, gens, TermOrder::elimination(n + 1, front));
  std::vector<Polynomial> kept;
  for (const auto& g : work.standard_basis()) {
    if (std::any_of(front.begin(), front.end(), [&](std::size_t v) { return g.involves(v); })) continue;
    std::vector<Polynomial::Term> terms;
    for (const auto& t : g.terms()) {
      for (std::size_t v = 0; v < n; ++v) e[v] = t.mono[v];
      terms.push_back({Monomial(std::span<const unsigned>(e.data(), n)), t.coeff});
    }
    Polynomial p = Polynomial::from_terms(ring, std::move(terms));
    if (!p.is_zero()) kept.push_back(p.normalized());
  }
  std::sort(kept.begin(), kept.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.to_string() < b.to_string();
  });
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return IdealPresentation(ring, std::move(kept), TermOrder::degrevlex(n));
}

}  // namespace

IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<std::string>& front_vars) {
  const RingPtr& ring = ideal.ring();
  std::vector<std::size_t> front;
  for (const auto& v : front_vars) front.push_back(ring->require_index(v));
  std::size_t n = ring->size();
  if (front.empty()) return IdealPresentation(ring, ideal.generators(), TermOrder::degrevlex(n));
  bool homogeneous = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                 [](const Polynomial& g) { return g.is_homogeneous(); });
  if (!homogeneous) return eliminate_homogenized(ideal, front);
  IdealPresentation work(ring, ideal.generators(), TermOrder::elimination(n, front));
  std::vector<Polynomial> kept;
  for (const auto& g : work.standard_basis()) {
    bool free = std::none_of(front.begin(), front.end(), [&](std::size_t v) { return g.involves(v); });
    if (free) kept.push_back(g);
  }
  return IdealPresentation(ring, std::move(kept), TermOrder::degrevlex(n));
}

QuotientDimension local_quotient_dim(const IdealPresentation& ideal) {
  if (ideal.order().is_global()) throw InvalidArgument("local_quotient_dim needs the local order");
  return quotient_from_basis(ideal.standard_basis(), ideal.order(), ideal.ring()->size());
}

QuotientDimension global_quotient_dim(const IdealPresentation& ideal) {
  if (!ideal.order().is_global()) throw InvalidArgument("global_quotient_dim needs a global order");
  return quotient_from_basis(ideal.standard_basis(), ideal.order(), ideal.ring()->size());
}

namespace {

QuotientDimension jacobian_dim(const Polynomial& g) {
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < g.ring()->size(); ++v) gens.push_back(g.derivative(v));
  IdealPresentation jac(g.ring(), std::move(gens), TermOrder::local(g.ring()->size()));
  return local_quotient_dim(jac);
}

}  // namespace

QuotientDimension milnor_number(const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("Milnor number of the zero polynomial");
  if (g.constant_term() != 0) throw InvalidArgument("Milnor number needs g(0) = 0");
  unsigned deg = static_cast<unsigned>(g.total_degree());
  // A germ with Milnor number mu is (mu+1)-determined, so a jet whose Milnor
  // number is below its truncation degree already has the answer.
  unsigned n = std::max(2 * g.order_at_origin() + 2, 8u);
  while (n < deg) {
    QuotientDimension q = jacobian_dim(g.truncated(n + 1));
    if (q.finite && q.value + 1 <= n) return q;
    n *= 2;
  }
  return jacobian_dim(g);
}

std::vector<ModuleElement> module_standard_basis(const RingPtr& ring, const std::vector<ModuleElement>& generators,
                                                 const TermOrder& base) {
  if (!base.is_global()) throw InvalidArgument("module bases need a global order");
  Cmp cmp(base, true);
  std::size_t rank = 0;
  for (const auto& g : generators) rank = std::max(rank, g.size());
  std::vector<IPoly> in;
  for (const auto& g : generators) {
    IPoly p;
    BigInt den = 1;
    for (const auto& comp : g)
      for (const auto& t : comp.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    unsigned sugar = 0;
    for (std::size_t c = 0; c < g.size(); ++c) {
      for (const auto& t : g[c].terms()) {
        BigRational v = t.coeff * den;
        p.t.push_back({t.mono, static_cast<std::uint32_t>(c), v.get_num()});
        sugar = std::max(sugar, t.mono.degree());
      }
    }
    if (p.t.empty()) continue;
    sort_terms(p, cmp);
    make_primitive(p);
    p.sugar = sugar;
    refresh(p);
    in.push_back(std::move(p));
  }
  Engine engine(cmp, ring->size());
  std::sort(in.begin(), in.end(), [&](const IPoly& a, const IPoly& b) { return cmp(a.lt(), b.lt()) < 0; });
  for (auto& p : in) engine.add_generator(std::move(p));
  engine.run();
  std::vector<ModuleElement> out;
  for (const auto& p : engine.result()) {
    ModuleElement e;
    for (std::size_t c = 0; c < rank; ++c) e.push_back(to_polynomial(p, ring, static_cast<std::uint32_t>(c)));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace germinv
