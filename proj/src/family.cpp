#include "germinv/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "germinv/fitting.hpp"

namespace germinv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

std::vector<BigRational> default_t_samples() { return {1, -1, BigRational(1, 2), 3}; }

namespace {

std::vector<BigRational> ordered_samples(const std::vector<BigRational>& t_samples) {
  if (std::find(t_samples.begin(), t_samples.end(), BigRational(0)) == t_samples.end()) {
    throw InvalidArgument("the parameter samples must include t = 0");
  }
  std::vector<BigRational> out{0};
  for (const auto& t : t_samples) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  if (out.size() < 2) throw InvalidArgument("at least one nonzero parameter sample is needed");
  return out;
}

long field_value(const InvariantReport& r, const std::string& name) {
  for (const auto& f : r.fields())
    if (name == f.name) return f.value;
  throw InvalidArgument("unknown invariant " + name);
}

bool constant(const std::vector<FamilySample>& s, const std::string& name) {
  long v0 = field_value(*s.front().report, name);
  return std::all_of(s.begin(), s.end(), [&](const FamilySample& x) { return field_value(*x.report, name) == v0; });
}

CriterionResult evaluate(const std::vector<FamilySample>& s, std::string name, std::vector<std::string> invariants) {
  CriterionResult c{std::move(name), std::move(invariants), Verdict::kYes};
  for (const auto& inv : c.invariants)
    if (!constant(s, inv)) c.verdict = Verdict::kNo;
  return c;
}

std::string change_line(const std::vector<FamilySample>& s, const std::string& name) {
  std::string out = name + ": " + std::to_string(field_value(*s.front().report, name)) + " ->";
  std::vector<long> seen;
  for (std::size_t i = 1; i < s.size(); ++i) {
    long v = field_value(*s[i].report, name);
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
    out += (seen.empty() ? " " : ", ") + std::to_string(v);
    seen.push_back(v);
  }
  return out;
}

}  // namespace

FamilyVerdict analyze_family(const Unfolding& F, const std::vector<BigRational>& t_samples, std::uint64_t seed,
                             unsigned plane_samples, const Limits& limits) {
  if (!F.origin_preserving()) throw InvalidArgument("the unfolding does not preserve the origin");
  FamilyVerdict v;
  v.unfolding = F.to_string();
  auto ts = ordered_samples(t_samples);
  v.caveat = "constancy is checked at " + std::to_string(ts.size()) +
             " parameter values only; it is not certified for every t";

  bool complete = true;
  for (const auto& t : ts) {
    FamilySample s;
    s.t = t;
    MapGerm g = specialize(F, t);
    s.germ = g.to_string();
    try {
      LimitScope scope(limits);
      s.report = invariant_report(g, seed, plane_samples);
    } catch (const IntegrityError&) {
      throw;
    } catch (const Error& e) {
      s.failure_code = e.code();
      s.failure = e.what();
      complete = false;
      v.notes.push_back("t = " + to_string(t) + ": " + e.what());
    }
    v.samples.push_back(std::move(s));
  }
  if (!complete) return v;

  const auto& s = v.samples;
  const auto& r0 = *s.front().report;

  // Near t = 0 these invariants can only drop, so a larger value marks a
  // special parameter value elsewhere on the line. It says nothing about the
  // germ of the family at 0, and the verdicts are left open.
  bool special = false;
  for (const char* name : {"mu_D", "C", "T", "mu1", "m0_fD"}) {
    long v0 = field_value(r0, name);
    for (std::size_t i = 1; i < s.size(); ++i) {
      long vi = field_value(*s[i].report, name);
      if (vi > v0) {
        special = true;
        v.notes.push_back("t = " + to_string(s[i].t) + ": " + name + " = " + std::to_string(vi) +
                          " exceeds its value " + std::to_string(v0) +
                          " at t = 0, so t is a special parameter value; resample without it");
      }
    }
  }
  if (special) return v;
  for (const auto& f : r0.fields()) {
    if (!constant(s, f.name)) v.changes.push_back(change_line(s, f.name));
  }

  CriterionResult mu = evaluate(s, "mu(D) constancy (topological triviality)", {"mu_D"});
  v.topologically_trivial = mu.verdict;
  v.criteria_fired.push_back(mu);
  if (mu.verdict == Verdict::kYes && !(constant(s, "C") && constant(s, "T"))) {
    throw IntegrityError("mu(D) is constant but C or T is not");
  }

  CriterionResult two = evaluate(s, "mu(D) and mu1 constancy (Whitney)", {"mu_D", "mu1"});
  v.whitney = two.verdict;
  v.criteria_fired.push_back(two);
  std::vector<CriterionResult> others{
      evaluate(s, "mu(D), m1 and m0(f(D)) constancy (Whitney)", {"mu_D", "m1_image", "m0_fD"})};

  MapGerm f0 = specialize(F, 0);
  if (corank(f0) == 1) {
    others.push_back(evaluate(s, "corank 1: C, J and T constancy (Whitney)", {"C", "J", "T"}));
    others.push_back(evaluate(s, "corank 1: mu(D) and m0(f(D)) constancy (Whitney)", {"mu_D", "m0_fD"}));
  }
  for (auto& c : others) {
    if (c.verdict != v.whitney) {
      throw IntegrityError("Whitney criteria disagree: '" + two.name + "' gives " + to_string(v.whitney) + ", '" +
                           c.name + "' gives " + to_string(c.verdict));
    }
    v.criteria_fired.push_back(std::move(c));
  }

  if (auto nm = homogeneous_corank1_degrees(f0); nm && std::gcd(nm->first, nm->second) != 2 &&
                                                  v.topologically_trivial == Verdict::kYes) {
    CriterionResult fast{"homogeneous corank 1 with gcd(n, m) != 2, mu(D) constant (Whitney)",
                         {"mu_D"},
                         Verdict::kYes};
    if (v.whitney != Verdict::kYes) {
      throw IntegrityError("the homogeneous corank-1 rule predicts Whitney equisingularity, the invariants do not");
    }
    v.criteria_fired.push_back(std::move(fast));
  }

  v.counterexample_to_conjecture = v.topologically_trivial == Verdict::kYes && v.whitney == Verdict::kNo;
  if (v.topologically_trivial == Verdict::kYes) {
    v.notes.push_back("excellent unfolding: mu(D)-constant unfoldings are excellent");
  }
  return v;
}

std::vector<Table1Row> table1_rows() {
  const std::pair<const char*, std::array<long, 4>> data[] = {
      {"(x, y^4, x^5*y + x*y^5 + y^6 + t*y^7)", {0, 0, 9, 8}},
      {"(x, y^4, x^9*y + x*y^9 + y^10 + t*y^11)", {0, 0, 15, 14}},
      {"(x, y^4, x^13*y + x*y^13 + y^14 + t*y^15)", {0, 0, 21, 20}},
      {"(x, y^4, x^17*y + x*y^17 + y^18 + t*y^19)", {0, 0, 27, 26}},
      {"(x, y^6, x^7*y + x*y^7 + y^8 + t*y^9)", {0, 0, 20, 18}},
      {"(x, y^6, x^13*y + x*y^13 + y^14 + t*y^15)", {0, 0, 35, 33}},
      {"(x^2 + t*x*y, x^2*y + x*y^2 + y^3, x^5 + y^5)", {2, 1, 22, 22}},
      {"(x^3, y^5, x^2 - x*y + y^2 + t*x^2)", {1, 1, 23, 22}},
      {"(x^2 + t*y^2, y^3, (x + y)^5)", {2, 1, 22, 22}},
  };
  std::vector<Table1Row> out;
  for (const auto& [family, expected] : data) {
    Table1Row row;
    row.family = family;
    row.expected = expected;
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// (mu(Ytilde), m0(f(D))) of one germ from its image equation and plane
// sections.
std::pair<long, long> plane_quantities(const MapGerm& g, std::uint64_t seed, unsigned plane_samples) {
  Polynomial image = image_equation(g);
  PlaneSections p = generic_plane_sections(g, image, seed, plane_samples);
  long diff = static_cast<long>(p.mu1) - static_cast<long>(p.mu_Ytilde);
  if (diff % 2 != 0) throw IntegrityError("mu1 - mu(Ytilde) is odd");
  return {static_cast<long>(p.mu_Ytilde), diff / 2};
}

}  // namespace

void compute_table1_row(Table1Row& row, const std::vector<BigRational>& nonzero_t, std::uint64_t seed,
                        unsigned plane_samples, const Limits& limits) {
  row.computed.reset();
  row.failure_code.reset();
  row.failure.clear();
  row.notes.clear();
  try {
    LimitScope scope(limits);
    Unfolding F = Unfolding::parse(row.family);
    auto [y0, m0] = plane_quantities(specialize(F, 0), seed, plane_samples);
    // Both quantities are upper semicontinuous in t, so their generic value is
    // the minimum over nonzero samples; special parameter values only raise
    // them. The minimum must be attained twice.
    std::vector<std::pair<long, long>> values;
    for (const auto& t : nonzero_t) {
      if (t == 0) continue;
      try {
        auto q = plane_quantities(specialize(F, t), seed, plane_samples);
        values.push_back(q);
        row.notes.push_back("t = " + to_string(t) + ": mu(Ytilde) = " + std::to_string(q.first) +
                            ", m0(f(D)) = " + std::to_string(q.second));
      } catch (const ResourceCapExceeded&) {
        throw;
      } catch (const Error& e) {
        row.notes.push_back("t = " + to_string(t) + ": skipped, " + e.what());
      }
    }
    auto generic = [&](long std::pair<long, long>::*field) -> long {
      if (values.empty()) throw GenericityUnresolved("no usable nonzero parameter sample");
      long best = values.front().*field;
      for (const auto& v : values) best = std::min(best, v.*field);
      auto hits = std::count_if(values.begin(), values.end(), [&](const auto& v) { return v.*field == best; });
      if (hits < 2) throw GenericityUnresolved("the minimum over nonzero parameter samples is attained only once");
      return best;
    };
    long yt = generic(&std::pair<long, long>::first);
    long mt = generic(&std::pair<long, long>::second);
    row.computed = std::array<long, 4>{y0, yt, m0, mt};
  } catch (const Error& e) {
    row.failure_code = e.code();
    row.failure = e.what();
  }
}

}  // namespace germinv
