#include "zoll_cli/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "report_schema_text.hpp"

namespace zoll::cli {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skip:
      return "skip";
  }
  return "fail";
}

namespace {

std::uint64_t total_instances(const VerdictReport& r) {
  std::uint64_t n = 0;
  for (const auto& c : r.checks) n += c.instances;
  return n;
}

}  // namespace

nlohmann::json to_json(const VerdictReport& report) {
  using nlohmann::json;
  json out = json::object();
  out["schema"] = 1;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  json bounds = json::array();
  for (const auto& [k, v] : report.bounds) bounds.push_back({{"name", k}, {"value", v}});
  out["bounds"] = std::move(bounds);
  json checks = json::array();
  for (const auto& c : report.checks) {
    json j = {{"id", c.id}, {"parameters", c.parameters}, {"status", status_name(c.status)}, {"instances", c.instances}};
    if (c.status == CheckStatus::fail) j["counterexample"] = c.counterexample.empty() ? "(none recorded)" : c.counterexample;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["totals"] = {{"checks", report.checks.size()},
                   {"pass", report.count(CheckStatus::pass)},
                   {"fail", report.count(CheckStatus::fail)},
                   {"skip", report.count(CheckStatus::skip)},
                   {"instances", total_instances(report)}};
  out["seconds"] = report.seconds;
  out["ok"] = report.ok();
  return out;
}

std::string format_text(const VerdictReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << "  seed " << report.seed << "\n";
  if (!report.bounds.empty()) {
    os << "bounds";
    for (const auto& [k, v] : report.bounds) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const auto& c : report.checks) {
    std::string tag = status_name(c.status);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << tag << "  " << c.id << " [" << c.parameters << "] instances=" << c.instances << "\n";
    if (c.status == CheckStatus::fail) os << "      counterexample: " << c.counterexample << "\n";
    if (!c.note.empty()) os << "      note: " << c.note << "\n";
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", report.seconds);
  os << report.checks.size() << " checks: " << report.count(CheckStatus::pass) << " pass, "
     << report.count(CheckStatus::fail) << " fail, " << report.count(CheckStatus::skip) << " skip; "
     << total_instances(report) << " instances; " << secs << " s\n";
  os << (report.ok() ? "RESULT pass" : "RESULT FAIL") << "\n";
  return os.str();
}

const nlohmann::json& report_schema() {
  static const nlohmann::json schema = nlohmann::json::parse(detail::kReportSchemaText);
  return schema;
}

namespace {

bool has_type(const nlohmann::json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

void check(const nlohmann::json& v, const nlohmann::json& s, const std::string& ptr, std::vector<std::string>& errs) {
  const std::string where = ptr.empty() ? "/" : ptr;
  if (s.contains("type") && !has_type(v, s["type"].get<std::string>()))
    errs.push_back(where + ": expected " + s["type"].get<std::string>());
  if (s.contains("const") && v != s["const"]) errs.push_back(where + ": expected constant " + s["const"].dump());
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) errs.push_back(where + ": value " + v.dump() + " not in " + s["enum"].dump());
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
    errs.push_back(where + ": below minimum " + s["minimum"].dump());
  if (s.contains("minLength") && v.is_string() && v.get<std::string>().size() < s["minLength"].get<std::size_t>())
    errs.push_back(where + ": string shorter than " + s["minLength"].dump());
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& k : s["required"])
        if (!v.contains(k.get<std::string>())) errs.push_back(where + ": missing property " + k.get<std::string>());
    const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
    for (const auto& [k, sub] : v.items()) {
      if (s.contains("properties") && s["properties"].contains(k))
        check(sub, s["properties"][k], ptr + "/" + k, errs);
      else if (closed)
        errs.push_back(where + ": unexpected property " + k);
    }
  }
  if (v.is_array() && s.contains("items"))
    for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], ptr + "/" + std::to_string(i), errs);
}

}  // namespace

std::vector<std::string> validate_json(const nlohmann::json& instance, const nlohmann::json& schema) {
  std::vector<std::string> errs;
  check(instance, schema, "", errs);
  return errs;
}

}  // namespace zoll::cli
