#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germinv/errors.hpp"
#include "germinv/groebner.hpp"
#include "germinv/invariants.hpp"

namespace germinv {

enum class Verdict { kYes, kNo, kUndetermined };
std::string to_string(Verdict v);

struct FamilySample {
  BigRational t;
  std::string germ;
  std::optional<InvariantReport> report;
  /// Why the report is missing (not finitely determined, cap hit, ...).
  std::optional<ErrorCode> failure_code;
  std::string failure;
};

/// One equisingularity criterion evaluated over the samples.
struct CriterionResult {
  std::string name;
  /// Invariants whose constancy the criterion requires.
  std::vector<std::string> invariants;
  Verdict verdict = Verdict::kUndetermined;
};

struct FamilyVerdict {
  std::string unfolding;
  std::vector<FamilySample> samples;  // samples[0] is t = 0
  Verdict topologically_trivial = Verdict::kUndetermined;
  Verdict whitney = Verdict::kUndetermined;
  std::vector<CriterionResult> criteria_fired;
  bool counterexample_to_conjecture = false;
  /// Invariants that change, as "name: v0 -> v1[, v2...]".
  std::vector<std::string> changes;
  std::vector<std::string> notes;
  std::string caveat;
};

/// The nonzero parameter values used when none are given.
std::vector<BigRational> default_t_samples();

/// Computes an invariant report at every sample (t = 0 must be present) and
/// applies the constancy criteria. A sample whose germ is not finitely
/// determined, or whose computation exceeds a cap, leaves the verdicts
/// undetermined and is named in the sample list. So does a sample where one
/// of mu_D, C, T, mu1, m0_fD exceeds its value at t = 0: such a t is a special
/// parameter value away from the origin, and a note names it. Criteria that
/// disagree and mu-constancy without C and T constancy raise IntegrityError.
/// `limits` applies to each sample separately.
FamilyVerdict analyze_family(const Unfolding& F, const std::vector<BigRational>& t_samples, std::uint64_t seed = 1,
                             unsigned plane_samples = 5, const Limits& limits = {});

/// Plane-section quantities of one unfolding at t = 0 and at nonzero t.
struct Table1Row {
  std::string family;
  std::array<long, 4> expected{};  // mu(Ytilde_0), mu(Ytilde_t), m0(f(D)), m0(f_t(D))
  std::optional<std::array<long, 4>> computed;
  std::optional<ErrorCode> failure_code;
  std::string failure;
  /// Per-sample values and skipped samples.
  std::vector<std::string> notes;
  bool matched() const { return computed && *computed == expected; }
};

/// Table of counterexample families with their expected plane quantities.
std::vector<Table1Row> table1_rows();

/// Computes one row at t = 0 and at the nonzero samples. The value at generic
/// t is the minimum over nonzero samples, attained at least twice; samples
/// whose computation fails for a reason other than a cap are skipped. Caps
/// and other errors are recorded in the row. `limits` applies to the whole
/// row.
void compute_table1_row(Table1Row& row, const std::vector<BigRational>& nonzero_t, std::uint64_t seed = 1,
                        unsigned plane_samples = 5, const Limits& limits = {});

}  // namespace germinv
