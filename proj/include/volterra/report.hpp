#pragma once

#include <string>
#include <utility>
#include <vector>

namespace volterra {

// One labeled number in a report's results section.
struct NumericRecord {
  std::string label;
  double value;
  bool operator==(const NumericRecord&) const = default;
};

// One verification row. pass is stored rather than derived: different
// checks use different acceptance rules (absolute, relative, one-sided),
// so the producer decides and the record keeps the evidence.
struct CheckRecord {
  std::string name;
  double expected;
  double actual;
  double tol;
  bool pass;
  bool operator==(const CheckRecord&) const = default;
};

// Self-contained outcome of one command: what ran, with which inputs, the
// numbers it produced, and any pass/fail evidence. Input order is kept as
// inserted; renderers never reorder anything, so identical docs render to
// identical bytes.
struct ReportDoc {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<NumericRecord> results;
  std::vector<CheckRecord> checks;
  bool operator==(const ReportDoc&) const = default;

  // AND of the pass flags; true when there are no checks.
  bool overall() const;
};

void add_input(ReportDoc& doc, const std::string& key, const std::string& value);
void add_result(ReportDoc& doc, const std::string& label, double value);

// pass iff |actual - expected| <= tol.
void add_abs_check(ReportDoc& doc, const std::string& name, double expected,
                   double actual, double tol);

// pass iff |actual - expected| <= tol * max(|expected|, |actual|).
void add_rel_check(ReportDoc& doc, const std::string& name, double expected,
                   double actual, double tol);

// One-sided checks against a bound stored in the expected field:
// pass iff actual >= bound - tol, respectively actual <= bound + tol.
void add_lower_check(ReportDoc& doc, const std::string& name, double bound,
                     double actual, double tol);
void add_upper_check(ReportDoc& doc, const std::string& name, double bound,
                     double actual, double tol);

// Throws InternalError if any numeric field is non-finite (tolerances must
// be finite by contract, and no pipeline here produces non-finite values).
// Every renderer validates first.
void validate_report(const ReportDoc& doc);

// 12 significant digits, the precision of the table and CSV renderers.
std::string format_sig12(double v);

std::string render_table(const ReportDoc& doc);
std::string render_csv(const ReportDoc& doc);

// Full-precision JSON (doubles round-trip exactly through the emitted
// text); parse_json_report inverts it, ignoring the derived status field.
std::string render_json(const ReportDoc& doc);
ReportDoc parse_json_report(const std::string& text);

}  // namespace volterra
