#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "symbreak/verify.hpp"

namespace symbreak::verify {

enum class ReportFormat { kJson, kCsv, kTable };

/// "json", "csv" or "table". Throws kBadParams.
ReportFormat parse_report_format(std::string_view name);

std::string_view to_string(Status status);

nlohmann::json record_to_json(const Record& record);
Record record_from_json(const nlohmann::json& j);

// {"config": {...}, "seed": int|null, "records": [...], "summary": {...}}.
// jobs is left out of the config so output does not depend on it.
nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

// Fixed columns: family, params, n_vertices, aut_order, formula_kind,
// formula_D, formula_Dprime, oracle_D, oracle_Dprime, status, reason.
std::string report_to_csv(const Report& report);
std::string report_to_table(const Report& report);

std::string format_report(const Report& report, ReportFormat format);

}  // namespace symbreak::verify
