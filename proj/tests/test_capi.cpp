#include <string>

#include "doctest.h"
#include "germinv.h"
#include "json.hpp"

namespace {

const char* kCrossCap = "(x, y^2, x*y)";
const char* kEx54Family = "(x, y^4, x^5*y - 5*x^3*y^3 + 4*x*y^5 + y^6 + t*y^7)";

long field(const gi_report* r, const char* name) {
  long v = -1;
  REQUIRE(gi_report_field(r, name, &v) == GI_OK);
  return v;
}

}  // namespace

TEST_CASE("status names are stable") {
  CHECK(std::string(gi_status_name(GI_OK)) == "ok");
  CHECK(std::string(gi_status_name(GI_NOT_FINITELY_DETERMINED)) == "not_finitely_determined");
  CHECK(std::string(gi_status_name(GI_RESOURCE_CAP)) == "resource_cap_exceeded");
  CHECK(std::string(gi_status_name(GI_PARSE_ERROR)) == "parse_error");
}

TEST_CASE("invariants through the C interface") {
  gi_report* r = nullptr;
  REQUIRE(gi_invariants(kCrossCap, nullptr, &r) == GI_OK);
  REQUIRE(r != nullptr);
  CHECK(field(r, "C") == 1);
  CHECK(field(r, "mu_D") == 0);
  CHECK(field(r, "m0_image") == 2);
  long v = 0;
  CHECK(gi_report_field(r, "nope", &v) == GI_INVALID_ARGUMENT);
  CHECK(std::string(gi_last_error()).find("nope") != std::string::npos);
  CHECK(std::string(gi_report_lambda(r)) == "x");
  CHECK_FALSE(std::string(gi_report_image(r)).empty());

  auto j = nlohmann::json::parse(gi_report_render(r, GI_JSON));
  CHECK(j["invariants"]["C"] == 1);
  CHECK(j["provenance"]["J"] == "identity");
  CHECK(j.contains("planes"));
  CHECK(std::string(gi_report_render(r, GI_TEXT)).find("mu_D") != std::string::npos);
  gi_report_free(r);
}

TEST_CASE("errors map to statuses and leave no handle") {
  gi_report* r = reinterpret_cast<gi_report*>(1);
  CHECK(gi_invariants("(x, y^2, 0)", nullptr, &r) == GI_NOT_FINITELY_DETERMINED);
  CHECK(r == nullptr);
  CHECK(gi_invariants("(x, q, y)", nullptr, &r) == GI_PARSE_ERROR);
  CHECK_FALSE(std::string(gi_last_error()).empty());
  CHECK(gi_invariants("(x, y, 0)", nullptr, &r) == GI_INVALID_ARGUMENT);
  CHECK(gi_invariants(nullptr, nullptr, &r) == GI_INVALID_ARGUMENT);
  CHECK(gi_invariants(kCrossCap, nullptr, nullptr) == GI_INVALID_ARGUMENT);

  gi_options o;
  gi_options_default(&o);
  o.max_spairs = 5;
  CHECK(gi_invariants("(x, y^4, x^5*y - 5*x^3*y^3 + 4*x*y^5 + y^6)", &o, &r) == GI_RESOURCE_CAP);
  CHECK(r == nullptr);
}

TEST_CASE("options: defaults and the seed") {
  gi_options o;
  gi_options_default(&o);
  CHECK(o.seed == 1);
  CHECK(o.plane_samples == 5);
  CHECK(o.max_spairs == 0);
  gi_report *a = nullptr, *b = nullptr;
  o.seed = 99;
  REQUIRE(gi_invariants(kCrossCap, &o, &a) == GI_OK);
  REQUIRE(gi_invariants(kCrossCap, &o, &b) == GI_OK);
  CHECK(std::string(gi_report_render(a, GI_JSON)) == std::string(gi_report_render(b, GI_JSON)));
  gi_report_free(a);
  gi_report_free(b);
}

TEST_CASE("family analysis through the C interface") {
  gi_family* f = nullptr;
  REQUIRE(gi_family_analyze(kEx54Family, "1,1/2", nullptr, &f) == GI_OK);
  CHECK(gi_family_status(f) == GI_OK);
  CHECK(gi_family_sample_count(f) == 3);
  CHECK(gi_family_topologically_trivial(f) == GI_YES);
  CHECK(gi_family_whitney(f) == GI_NO);
  CHECK(gi_family_counterexample(f) == 1);
  long j0 = 0, j1 = 0;
  REQUIRE(gi_family_sample_field(f, 0, "J", &j0) == GI_OK);
  REQUIRE(gi_family_sample_field(f, 1, "J", &j1) == GI_OK);
  CHECK(j0 == 39);
  CHECK(j1 == 38);
  CHECK(gi_family_sample_field(f, 7, "J", &j0) == GI_INVALID_ARGUMENT);
  auto js = nlohmann::json::parse(gi_family_render(f, GI_JSON));
  CHECK(js["verdict"]["topologically_trivial"] == "yes");
  CHECK(js["verdict"]["whitney"] == "no");
  CHECK(js["verdict"]["counterexample_to_conjecture"] == true);
  CHECK(js["samples"].size() == 3);
  gi_family_free(f);
}

TEST_CASE("a failing family sample is reported through the family status") {
  gi_family* f = nullptr;
  REQUIRE(gi_family_analyze("(x^2 + t*x*y, x^2*y + x*y^2 + y^3, x^5 + y^5)", "0,1", nullptr, &f) == GI_OK);
  CHECK(gi_family_status(f) == GI_NOT_FINITELY_DETERMINED);
  CHECK(gi_family_whitney(f) == GI_UNDETERMINED);
  long v = 0;
  CHECK(gi_family_sample_field(f, 1, "mu_D", &v) == GI_NOT_FINITELY_DETERMINED);
  auto js = nlohmann::json::parse(gi_family_render(f, GI_JSON));
  CHECK(js["samples"][1]["failure"]["code"] == "not_finitely_determined");
  gi_family_free(f);

  CHECK(gi_family_analyze(kEx54Family, "1,abc", nullptr, &f) == GI_PARSE_ERROR);
  CHECK(f == nullptr);
}

TEST_CASE("table with a cap reports the capped rows") {
  gi_options o;
  gi_options_default(&o);
  o.max_spairs = 50;
  gi_table* t = nullptr;
  CHECK(gi_table1("1,2", &o, &t) == GI_RESOURCE_CAP);
  REQUIRE(t != nullptr);
  CHECK(gi_table_row_count(t) == 9);
  CHECK(std::string(gi_table_row_family(t, 0)).find("y^4") != std::string::npos);
  bool any_capped = false;
  for (size_t i = 0; i < gi_table_row_count(t); ++i) {
    gi_status s = GI_OK;
    if (!gi_table_row_matched(t, i, &s) && s == GI_RESOURCE_CAP) any_capped = true;
  }
  CHECK(any_capped);
  auto js = nlohmann::json::parse(gi_table_render(t, GI_JSON));
  CHECK(js.size() == 9);
  gi_table_free(t);
}

TEST_CASE("a special parameter value gives a genericity status") {
  gi_family* f = nullptr;
  REQUIRE(gi_family_analyze("(x^2 + t*y^2, y^3, (x + y)^5)", "1/2,3", nullptr, &f) == GI_OK);
  CHECK(gi_family_status(f) == GI_GENERICITY_UNRESOLVED);
  CHECK(gi_family_whitney(f) == GI_UNDETERMINED);
  gi_family_free(f);
}
