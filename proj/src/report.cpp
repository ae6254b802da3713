#include "volterra/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "volterra/errors.hpp"

namespace volterra {

bool ReportDoc::overall() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

void add_input(ReportDoc& doc, const std::string& key, const std::string& value) {
  doc.inputs.emplace_back(key, value);
}

void add_result(ReportDoc& doc, const std::string& label, double value) {
  doc.results.push_back({label, value});
}

void add_abs_check(ReportDoc& doc, const std::string& name, double expected,
                   double actual, double tol) {
  doc.checks.push_back({name, expected, actual, tol,
                        std::abs(actual - expected) <= tol});
}

void add_rel_check(ReportDoc& doc, const std::string& name, double expected,
                   double actual, double tol) {
  const double scale = std::max(std::abs(expected), std::abs(actual));
  doc.checks.push_back({name, expected, actual, tol,
                        std::abs(actual - expected) <= tol * scale});
}

void add_lower_check(ReportDoc& doc, const std::string& name, double bound,
                     double actual, double tol) {
  doc.checks.push_back({name, bound, actual, tol, actual >= bound - tol});
}

void add_upper_check(ReportDoc& doc, const std::string& name, double bound,
                     double actual, double tol) {
  doc.checks.push_back({name, bound, actual, tol, actual <= bound + tol});
}

void validate_report(const ReportDoc& doc) {
  for (const auto& r : doc.results) {
    if (!std::isfinite(r.value))
      throw InternalError("report: non-finite result value for " + r.label);
  }
  for (const auto& c : doc.checks) {
    if (!std::isfinite(c.expected) || !std::isfinite(c.actual) || !std::isfinite(c.tol))
      throw InternalError("report: non-finite check field for " + c.name);
  }
}

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::size_t max_width(const ReportDoc& doc) {
  std::size_t w = 0;
  for (const auto& [k, v] : doc.inputs) w = std::max(w, k.size());
  for (const auto& r : doc.results) w = std::max(w, r.label.size());
  return w;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - s.size(), ' ');
}

// Minimal CSV quoting: wrap when the field holds a separator, quote, or
// newline, doubling embedded quotes.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_table(const ReportDoc& doc) {
  validate_report(doc);
  std::ostringstream out;
  out << "command: " << doc.command << "\n";
  const std::size_t w = max_width(doc);
  if (!doc.inputs.empty()) {
    out << "\ninputs:\n";
    for (const auto& [k, v] : doc.inputs) out << "  " << pad(k, w) << "  " << v << "\n";
  }
  if (!doc.results.empty()) {
    out << "\nresults:\n";
    for (const auto& r : doc.results)
      out << "  " << pad(r.label, w) << "  " << format_sig12(r.value) << "\n";
  }
  if (!doc.checks.empty()) {
    out << "\nchecks:\n";
    for (const auto& c : doc.checks) {
      out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
          << "  expected " << format_sig12(c.expected) << "  actual "
          << format_sig12(c.actual) << "  tol " << format_sig12(c.tol) << "\n";
    }
    out << "\nstatus: " << (doc.overall() ? "PASS" : "FAIL") << "\n";
  }
  return out.str();
}

std::string render_csv(const ReportDoc& doc) {
  validate_report(doc);
  std::ostringstream out;
  out << "section,name,value,expected,tol,pass\n";
  for (const auto& [k, v] : doc.inputs)
    out << "input," << csv_field(k) << "," << csv_field(v) << ",,,\n";
  for (const auto& r : doc.results)
    out << "result," << csv_field(r.label) << "," << format_sig12(r.value) << ",,,\n";
  for (const auto& c : doc.checks) {
    out << "check," << csv_field(c.name) << "," << format_sig12(c.actual) << ","
        << format_sig12(c.expected) << "," << format_sig12(c.tol) << ","
        << (c.pass ? "true" : "false") << "\n";
  }
  if (!doc.checks.empty())
    out << "status,overall,,,," << (doc.overall() ? "true" : "false") << "\n";
  return out.str();
}

std::string render_json(const ReportDoc& doc) {
  validate_report(doc);
  nlohmann::json j;
  j["command"] = doc.command;
  j["inputs"] = nlohmann::json::array();
  for (const auto& [k, v] : doc.inputs)
    j["inputs"].push_back({{"key", k}, {"value", v}});
  j["results"] = nlohmann::json::array();
  for (const auto& r : doc.results)
    j["results"].push_back({{"label", r.label}, {"value", r.value}});
  j["checks"] = nlohmann::json::array();
  for (const auto& c : doc.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"tol", c.tol},
                           {"pass", c.pass}});
  }
  j["status"] = doc.overall();
  return j.dump(2) + "\n";
}

ReportDoc parse_json_report(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ReportDoc doc;
  doc.command = j.at("command").get<std::string>();
  for (const auto& e : j.at("inputs"))
    doc.inputs.emplace_back(e.at("key").get<std::string>(),
                            e.at("value").get<std::string>());
  for (const auto& e : j.at("results"))
    doc.results.push_back(
        {e.at("label").get<std::string>(), e.at("value").get<double>()});
  for (const auto& e : j.at("checks"))
    doc.checks.push_back({e.at("name").get<std::string>(),
                          e.at("expected").get<double>(),
                          e.at("actual").get<double>(),
                          e.at("tol").get<double>(), e.at("pass").get<bool>()});
  return doc;
}

}  // namespace volterra
