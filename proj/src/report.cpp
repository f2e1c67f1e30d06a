#include "symbreak/report.hpp"

#include <iomanip>
#include <sstream>

#include "symbreak/error.hpp"
#include "symbreak/spec_json.hpp"

namespace symbreak::verify {

namespace {

using nlohmann::json;

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

Status parse_status(const std::string& s) {
  if (s == "match") return Status::kMatch;
  if (s == "mismatch") return Status::kMismatch;
  if (s == "skipped") return Status::kSkipped;
  throw Error(ErrorCode::kParseError, "unknown status '" + s + "'");
}

std::string params_text(const std::vector<std::int64_t>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(params[i]);
  }
  return out;
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else {
    return std::to_string(*v);
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> rows(const Report& report) {
  std::vector<std::vector<std::string>> out;
  out.push_back({"family", "params", "n_vertices", "aut_order", "formula_kind", "formula_D",
                 "formula_Dprime", "oracle_D", "oracle_Dprime", "status", "reason"});
  for (const auto& r : report.records) {
    out.push_back({r.family, params_text(r.params), std::to_string(r.n_vertices), cell(r.aut_order),
                   r.formula_kind, cell(r.formula_D), cell(r.formula_Dprime), cell(r.oracle_D),
                   cell(r.oracle_Dprime), std::string(to_string(r.status)), r.reason});
  }
  return out;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "table") return ReportFormat::kTable;
  throw Error(ErrorCode::kBadParams, "unknown report format '" + std::string(name) + "'");
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kMatch: return "match";
    case Status::kMismatch: return "mismatch";
    case Status::kSkipped: return "skipped";
  }
  return "?";
}

json record_to_json(const Record& r) {
  json j;
  j["family"] = r.family;
  j["params"] = r.params;
  j["spec"] = gen::spec_to_json(r.spec);
  j["n_vertices"] = r.n_vertices;
  j["n_edges"] = r.n_edges;
  j["formula_kind"] = r.formula_kind;
  j["formula_D"] = opt(r.formula_D);
  j["formula_Dprime"] = opt(r.formula_Dprime);
  j["oracle_D"] = opt(r.oracle_D);
  j["oracle_Dprime"] = opt(r.oracle_Dprime);
  j["formula_aut_order"] = opt(r.formula_aut_order);
  j["aut_order"] = opt(r.aut_order);
  j["D_witness"] = r.D_witness;
  j["Dprime_witness"] = r.Dprime_witness;
  j["D_checked_below"] = r.D_checked_below;
  j["Dprime_checked_below"] = r.Dprime_checked_below;
  j["kernel_nontrivial"] = r.kernel_nontrivial;
  j["match"] = r.status == Status::kMatch;
  j["status"] = to_string(r.status);
  j["reason"] = r.reason;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

Record record_from_json(const json& j) {
  try {
    Record r;
    r.family = j.at("family").get<std::string>();
    r.params = j.at("params").get<std::vector<std::int64_t>>();
    r.spec = gen::spec_from_json(j.at("spec"));
    r.n_vertices = j.value("n_vertices", std::size_t{0});
    r.n_edges = j.value("n_edges", std::size_t{0});
    r.formula_kind = j.value("formula_kind", std::string());
    r.formula_D = get_opt<std::uint64_t>(j, "formula_D");
    r.formula_Dprime = get_opt<std::uint64_t>(j, "formula_Dprime");
    r.oracle_D = get_opt<std::uint64_t>(j, "oracle_D");
    r.oracle_Dprime = get_opt<std::uint64_t>(j, "oracle_Dprime");
    r.formula_aut_order = get_opt<std::string>(j, "formula_aut_order");
    r.aut_order = get_opt<std::uint64_t>(j, "aut_order");
    r.D_witness = j.value("D_witness", std::vector<Label>{});
    r.Dprime_witness = j.value("Dprime_witness", std::vector<Label>{});
    r.D_checked_below = j.value("D_checked_below", false);
    r.Dprime_checked_below = j.value("Dprime_checked_below", false);
    r.kernel_nontrivial = j.value("kernel_nontrivial", false);
    r.status = parse_status(j.at("status").get<std::string>());
    r.reason = j.value("reason", std::string());
    r.elapsed_ms = get_opt<double>(j, "elapsed_ms");
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad record: ") + e.what());
  }
}

json report_to_json(const Report& report) {
  json j;
  const auto& c = report.config;
  j["config"] = {{"aut_cap", c.aut_cap},
                 {"max_vertices", c.max_vertices},
                 {"max_edges", c.max_edges},
                 {"max_labels", opt(c.max_labels)},
                 {"time_budget_ms", c.time_budget_ms},
                 {"timing", c.timing}};
  j["seed"] = opt(report.seed);
  j["records"] = json::array();
  for (const auto& r : report.records) j["records"].push_back(record_to_json(r));
  const auto& s = report.summary;
  j["summary"] = {{"total", s.total},
                  {"matched", s.matched},
                  {"mismatched", s.mismatched},
                  {"skipped_too_large", s.skipped_too_large},
                  {"dprime_unchecked", s.dprime_unchecked}};
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report report;
    const auto& c = j.at("config");
    report.config.aut_cap = c.value("aut_cap", kDefaultAutCap);
    report.config.max_vertices = c.value("max_vertices", report.config.max_vertices);
    report.config.max_edges = c.value("max_edges", report.config.max_edges);
    report.config.max_labels = get_opt<Label>(c, "max_labels");
    report.config.time_budget_ms = c.value("time_budget_ms", std::uint64_t{0});
    report.config.timing = c.value("timing", false);
    report.seed = get_opt<std::uint64_t>(j, "seed");
    for (const auto& r : j.at("records")) report.records.push_back(record_from_json(r));
    report.summary = summarize(report.records);
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad report: ") + e.what());
  }
}

std::string report_to_csv(const Report& report) {
  std::string out;
  for (const auto& row : rows(report)) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string report_to_table(const Report& report) {
  const auto table = rows(report);
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& row : table)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i + 1 == row.size()) {
        os << row[i];
      } else {
        os << std::left << std::setw(static_cast<int>(width[i] + 2)) << row[i];
      }
    }
    os << '\n';
  }
  const auto& s = report.summary;
  os << "total " << s.total << ", matched " << s.matched << ", mismatched " << s.mismatched
     << ", skipped " << s.skipped_too_large << ", D' unchecked " << s.dprime_unchecked << '\n';
  return os.str();
}

std::string format_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return report_to_json(report).dump(2) + "\n";
    case ReportFormat::kCsv: return report_to_csv(report);
    case ReportFormat::kTable: return report_to_table(report);
  }
  return {};
}

}  // namespace symbreak::verify
