#include "germinv/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace germinv {

using Json = nlohmann::ordered_json;

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kRingMismatch: return "ring_mismatch";
    case ErrorCode::kInexactDivision: return "inexact_division";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kResourceCap: return "resource_cap_exceeded";
    case ErrorCode::kNotFinitelyDetermined: return "not_finitely_determined";
    case ErrorCode::kUndetermined: return "undetermined";
    case ErrorCode::kIntegrity: return "integrity_error";
    case ErrorCode::kGenericityUnresolved: return "genericity_unresolved";
    case ErrorCode::kShapeMismatch: return "shape_mismatch";
  }
  return "unknown";
}

namespace {

Json invariants_object(const InvariantReport& r) {
  Json j = Json::object();
  for (const auto& f : r.fields()) j[f.name] = f.value;
  return j;
}

Json provenance_object(const InvariantReport& r) {
  Json j = Json::object();
  for (const auto& f : r.fields()) j[f.name] = to_string(f.provenance);
  return j;
}

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json planes_array(const InvariantReport& r) {
  Json a = Json::array();
  for (const auto& p : r.planes) {
    Json c = Json::array();
    for (const auto& q : p.coefficients) c.push_back(to_string(q));
    a.push_back(Json{{"coefficients", c}, {"mu_Ytilde", optional_size(p.mu_Ytilde)}, {"mu1", optional_size(p.mu_Y)}});
  }
  return a;
}

Json report_object(const InvariantReport& r) {
  return Json{{"germ", r.germ},
              {"invariants", invariants_object(r)},
              {"provenance", provenance_object(r)},
              {"lambda", r.lambda.to_string()},
              {"image", r.image.to_string()},
              {"planes", planes_array(r)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void invariant_lines(std::ostringstream& out, const InvariantReport& r, const std::string& indent) {
  for (const auto& f : r.fields()) {
    out << indent << std::left << std::setw(14) << f.name << std::right << std::setw(8) << f.value << "  "
        << to_string(f.provenance) << "\n";
  }
}

Json quad(const std::array<long, 4>& v) {
  return Json{{"mu_Ytilde_0", v[0]}, {"mu_Ytilde_t", v[1]}, {"m0_fD_0", v[2]}, {"m0_fD_t", v[3]}};
}

std::string quad_text(const std::array<long, 4>& v) {
  return "(" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + ", " +
         std::to_string(v[3]) + ")";
}

}  // namespace

std::string report_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "germ    " << r.germ << "\n";
  out << "lambda  " << r.lambda.to_string() << "\n\n";
  invariant_lines(out, r, "");
  return out.str();
}

std::string report_json(const InvariantReport& r) { return dump(report_object(r)); }

std::string family_text(const FamilyVerdict& v) {
  std::ostringstream out;
  out << "unfolding  " << v.unfolding << "\n";
  for (const auto& s : v.samples) {
    out << "\nt = " << to_string(s.t) << "   " << s.germ << "\n";
    if (s.report) {
      invariant_lines(out, *s.report, "  ");
    } else {
      out << "  failed (" << error_name(*s.failure_code) << "): " << s.failure << "\n";
    }
  }
  out << "\ntopologically trivial: " << to_string(v.topologically_trivial) << "; Whitney: " << to_string(v.whitney)
      << "; counterexample to conjecture: " << (v.counterexample_to_conjecture ? "YES" : "no") << "\n";
  for (const auto& c : v.criteria_fired) out << "  criterion  " << c.name << ": " << to_string(c.verdict) << "\n";
  for (const auto& c : v.changes) out << "  changes    " << c << "\n";
  for (const auto& n : v.notes) out << "  note       " << n << "\n";
  out << "  caveat     " << v.caveat << "\n";
  return out.str();
}

std::string family_json(const FamilyVerdict& v) {
  Json samples = Json::array();
  for (const auto& s : v.samples) {
    Json j{{"t", to_string(s.t)}, {"germ", s.germ}};
    if (s.report) {
      j["invariants"] = invariants_object(*s.report);
      j["lambda"] = s.report->lambda.to_string();
    } else {
      j["failure"] = Json{{"code", error_name(*s.failure_code)}, {"message", s.failure}};
    }
    samples.push_back(std::move(j));
  }
  Json criteria = Json::array();
  for (const auto& c : v.criteria_fired) {
    criteria.push_back(Json{{"name", c.name}, {"invariants", c.invariants}, {"verdict", to_string(c.verdict)}});
  }
  Json verdict{{"topologically_trivial", to_string(v.topologically_trivial)},
               {"whitney", to_string(v.whitney)},
               {"counterexample_to_conjecture", v.counterexample_to_conjecture},
               {"criteria_fired", criteria},
               {"changes", v.changes},
               {"notes", v.notes},
               {"caveat", v.caveat}};
  return dump(Json{{"unfolding", v.unfolding}, {"samples", samples}, {"verdict", verdict}});
}

std::string table1_text(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "(mu(Ytilde_0), mu(Ytilde_t), m0(f(D)), m0(f_t(D)))\n";
  for (const auto& r : rows) {
    out << "\n" << r.family << "\n  expected  " << quad_text(r.expected) << "\n";
    if (r.computed) {
      out << "  computed  " << quad_text(*r.computed) << "  " << (r.matched() ? "match" : "MISMATCH") << "\n";
    } else {
      out << "  failed (" << error_name(*r.failure_code) << "): " << r.failure << "\n";
    }
    for (const auto& n : r.notes) out << "  " << n << "\n";
  }
  return out.str();
}

std::string table1_json(const std::vector<Table1Row>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json j{{"family", r.family},
           {"expected", quad(r.expected)},
           {"computed", r.computed ? quad(*r.computed) : Json(nullptr)},
           {"match", r.matched()}};
    if (r.failure_code) j["failure"] = Json{{"code", error_name(*r.failure_code)}, {"message", r.failure}};
    j["notes"] = r.notes;
    a.push_back(std::move(j));
  }
  return dump(a);
}

}  // namespace germinv
