#include "germinv.h"

#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "germinv/family.hpp"
#include "germinv/groebner.hpp"
#include "germinv/invariants.hpp"
#include "germinv/serialize.hpp"

struct gi_report {
  germinv::InvariantReport report;
  std::string rendered;
};

struct gi_family {
  germinv::FamilyVerdict verdict;
  gi_status status = GI_OK;
  std::string rendered;
};

struct gi_table {
  std::vector<germinv::Table1Row> rows;
  std::string rendered;
};

namespace {

thread_local std::string g_last_error;

gi_status status_of(germinv::ErrorCode code) {
  using germinv::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return GI_PARSE_ERROR;
    case ErrorCode::kResourceCap: return GI_RESOURCE_CAP;
    case ErrorCode::kNotFinitelyDetermined: return GI_NOT_FINITELY_DETERMINED;
    case ErrorCode::kIntegrity: return GI_INTEGRITY_ERROR;
    case ErrorCode::kGenericityUnresolved: return GI_GENERICITY_UNRESOLVED;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kUndetermined: return GI_INVALID_ARGUMENT;
    case ErrorCode::kRingMismatch:
    case ErrorCode::kInexactDivision:
    case ErrorCode::kShapeMismatch: return GI_INTERNAL_ERROR;
  }
  return GI_INTERNAL_ERROR;
}

// Runs `body`, translating exceptions into a status and the thread's last
// error message.
template <class F>
gi_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const germinv::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GI_RESOURCE_CAP;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GI_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown exception";
    return GI_INTERNAL_ERROR;
  }
}

gi_options resolve(const gi_options* options) {
  gi_options o;
  gi_options_default(&o);
  if (options) o = *options;
  if (o.plane_samples == 0) o.plane_samples = 5;
  return o;
}

germinv::Limits limits_of(const gi_options& o) {
  return {o.max_spairs, o.max_terms, o.time_budget_seconds};
}

std::vector<germinv::BigRational> parse_samples(const char* text, const char* fallback) {
  std::string s = text ? text : fallback;
  std::vector<germinv::BigRational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    try {
      out.push_back(germinv::parse_rational(item));
    } catch (const germinv::Error&) {
      throw germinv::ParseError("bad parameter sample '" + item + "'", start);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

bool require(const void* p, const char* what) {
  if (p) return true;
  g_last_error = std::string(what) + " is NULL";
  return false;
}

}  // namespace

extern "C" {

void gi_options_default(gi_options* options) {
  if (!options) return;
  options->seed = 1;
  options->plane_samples = 5;
  options->max_spairs = 0;
  options->max_terms = 0;
  options->time_budget_seconds = 0;
}

const char* gi_status_name(gi_status status) {
  switch (status) {
    case GI_OK: return "ok";
    case GI_TABLE_MISMATCH: return "table_mismatch";
    case GI_NOT_FINITELY_DETERMINED: return "not_finitely_determined";
    case GI_PARSE_ERROR: return "parse_error";
    case GI_RESOURCE_CAP: return "resource_cap_exceeded";
    case GI_INTEGRITY_ERROR: return "integrity_error";
    case GI_GENERICITY_UNRESOLVED: return "genericity_unresolved";
    case GI_INVALID_ARGUMENT: return "invalid_argument";
    case GI_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* gi_last_error(void) { return g_last_error.c_str(); }

gi_status gi_invariants(const char* germ, const gi_options* options, gi_report** out) {
  if (!require(germ, "germ") || !require(out, "out")) return GI_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    gi_options o = resolve(options);
    germinv::MapGerm f = germinv::MapGerm::parse(germ);
    germinv::LimitScope scope(limits_of(o));
    auto* r = new gi_report{germinv::invariant_report(f, o.seed, o.plane_samples), {}};
    *out = r;
    return GI_OK;
  });
}

gi_status gi_report_field(const gi_report* report, const char* name, long* value) {
  if (!require(report, "report") || !require(name, "name") || !require(value, "value")) return GI_INVALID_ARGUMENT;
  for (const auto& f : report->report.fields()) {
    if (std::string(name) == f.name) {
      *value = f.value;
      return GI_OK;
    }
  }
  g_last_error = std::string("unknown invariant ") + name;
  return GI_INVALID_ARGUMENT;
}

const char* gi_report_lambda(const gi_report* report) {
  if (!report) return nullptr;
  thread_local std::string s;
  s = report->report.lambda.to_string();
  return s.c_str();
}

const char* gi_report_image(const gi_report* report) {
  if (!report) return nullptr;
  thread_local std::string s;
  s = report->report.image.to_string();
  return s.c_str();
}

const char* gi_report_render(gi_report* report, gi_format format) {
  if (!report) return nullptr;
  report->rendered = format == GI_JSON ? germinv::report_json(report->report) : germinv::report_text(report->report);
  return report->rendered.c_str();
}

void gi_report_free(gi_report* report) { delete report; }

gi_status gi_family_analyze(const char* unfolding, const char* t_samples, const gi_options* options,
                            gi_family** out) {
  if (!require(unfolding, "unfolding") || !require(out, "out")) return GI_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    gi_options o = resolve(options);
    auto ts = parse_samples(t_samples, "0,1,-1,1/2,3");
    ts.insert(ts.begin(), germinv::BigRational(0));
    germinv::Unfolding F = germinv::Unfolding::parse(unfolding);
    auto* fam = new gi_family;
    try {
      fam->verdict = germinv::analyze_family(F, ts, o.seed, o.plane_samples, limits_of(o));
    } catch (...) {
      delete fam;
      throw;
    }
    for (const auto& s : fam->verdict.samples) {
      if (s.failure_code) {
        fam->status = status_of(*s.failure_code);
        break;
      }
    }
    // Every sample computed but the verdict is open: a special parameter value.
    if (fam->status == GI_OK && fam->verdict.topologically_trivial == germinv::Verdict::kUndetermined) {
      fam->status = GI_GENERICITY_UNRESOLVED;
    }
    *out = fam;
    return GI_OK;
  });
}

gi_status gi_family_status(const gi_family* family) { return family ? family->status : GI_INVALID_ARGUMENT; }

namespace {
gi_verdict verdict_of(germinv::Verdict v) {
  switch (v) {
    case germinv::Verdict::kYes: return GI_YES;
    case germinv::Verdict::kNo: return GI_NO;
    case germinv::Verdict::kUndetermined: return GI_UNDETERMINED;
  }
  return GI_UNDETERMINED;
}
}  // namespace

gi_verdict gi_family_topologically_trivial(const gi_family* family) {
  return family ? verdict_of(family->verdict.topologically_trivial) : GI_UNDETERMINED;
}

gi_verdict gi_family_whitney(const gi_family* family) {
  return family ? verdict_of(family->verdict.whitney) : GI_UNDETERMINED;
}

int gi_family_counterexample(const gi_family* family) {
  return family && family->verdict.counterexample_to_conjecture ? 1 : 0;
}

size_t gi_family_sample_count(const gi_family* family) { return family ? family->verdict.samples.size() : 0; }

gi_status gi_family_sample_field(const gi_family* family, size_t i, const char* name, long* value) {
  if (!require(family, "family")) return GI_INVALID_ARGUMENT;
  if (i >= family->verdict.samples.size()) {
    g_last_error = "sample index out of range";
    return GI_INVALID_ARGUMENT;
  }
  const auto& s = family->verdict.samples[i];
  if (!s.report) {
    g_last_error = s.failure;
    return status_of(*s.failure_code);
  }
  gi_report tmp{*s.report, {}};
  return gi_report_field(&tmp, name, value);
}

const char* gi_family_render(gi_family* family, gi_format format) {
  if (!family) return nullptr;
  family->rendered = format == GI_JSON ? germinv::family_json(family->verdict) : germinv::family_text(family->verdict);
  return family->rendered.c_str();
}

void gi_family_free(gi_family* family) { delete family; }

gi_status gi_table1(const char* t_samples, const gi_options* options, gi_table** out) {
  if (!require(out, "out")) return GI_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    gi_options o = resolve(options);
    std::vector<germinv::BigRational> ts;
    for (auto& t : parse_samples(t_samples, "1,-1,1/2,3"))
      if (t != 0) ts.push_back(t);
    auto* table = new gi_table{germinv::table1_rows(), {}};
    for (auto& row : table->rows) germinv::compute_table1_row(row, ts, o.seed, o.plane_samples, limits_of(o));
    *out = table;
    gi_status status = GI_OK;
    for (const auto& row : table->rows) {
      if (row.failure_code) {
        g_last_error = row.family + ": " + row.failure;
        return status_of(*row.failure_code);
      }
      if (!row.matched()) status = GI_TABLE_MISMATCH;
    }
    return status;
  });
}

size_t gi_table_row_count(const gi_table* table) { return table ? table->rows.size() : 0; }

const char* gi_table_row_family(const gi_table* table, size_t i) {
  if (!table || i >= table->rows.size()) return nullptr;
  return table->rows[i].family.c_str();
}

int gi_table_row_matched(const gi_table* table, size_t i, gi_status* status) {
  if (!table || i >= table->rows.size()) {
    if (status) *status = GI_INVALID_ARGUMENT;
    return 0;
  }
  const auto& row = table->rows[i];
  if (status) *status = row.failure_code ? status_of(*row.failure_code) : GI_OK;
  return row.matched() ? 1 : 0;
}

const char* gi_table_render(gi_table* table, gi_format format) {
  if (!table) return nullptr;
  table->rendered = format == GI_JSON ? germinv::table1_json(table->rows) : germinv::table1_text(table->rows);
  return table->rendered.c_str();
}

void gi_table_free(gi_table* table) { delete table; }

}  // extern "C"
