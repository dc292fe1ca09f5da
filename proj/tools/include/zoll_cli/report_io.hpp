#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zoll/report.hpp"

namespace zoll::cli {

std::string status_name(CheckStatus s);

/// Report object with "schema": 1.
nlohmann::json to_json(const VerdictReport& report);

/// One line per check, then totals.
std::string format_text(const VerdictReport& report);

/// The bundled JSON Schema for verify --json output.
const nlohmann::json& report_schema();

/// Validates `instance` against `schema`. Understands the keywords the
/// bundled schema uses: type, const, enum, required, properties,
/// additionalProperties (boolean), items, minimum, minLength. Returns one
/// message per violation, each prefixed with a JSON pointer.
std::vector<std::string> validate_json(const nlohmann::json& instance, const nlohmann::json& schema);

}  // namespace zoll::cli
