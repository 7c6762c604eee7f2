#pragma once

#include <string>
#include <vector>

#include "germinv/errors.hpp"
#include "germinv/family.hpp"
#include "germinv/invariants.hpp"

namespace germinv {

/// Stable lowercase name of an error code ("not_finitely_determined", ...).
const char* error_name(ErrorCode code);

/// Reports, verdicts and tables as text or JSON. Output depends only on the
/// values, so equal inputs give identical bytes. JSON objects keep a fixed key
/// order; the invariant record uses exactly the names of
/// InvariantReport::fields().
std::string report_text(const InvariantReport& r);
std::string report_json(const InvariantReport& r);

std::string family_text(const FamilyVerdict& v);
std::string family_json(const FamilyVerdict& v);

std::string table1_text(const std::vector<Table1Row>& rows);
std::string table1_json(const std::vector<Table1Row>& rows);

}  // namespace germinv
