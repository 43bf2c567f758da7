#pragma once

// Check records, constant traces and their CSV / text renderings.

#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl {

enum class Outcome { Pass, Fail, Info };

std::string to_string(Outcome o);
Outcome parse_outcome(const std::string& s);

struct CheckRecord {
  std::string suite;
  std::string name;
  /// The identity or inequality being checked.
  std::string statement;
  std::string parameters;
  double value = 0.0;
  /// Tolerance or bound; NaN for informational records.
  double bound = 0.0;
  Outcome outcome = Outcome::Info;
};

/// One point of a refinement trace.
struct ConstantRecord {
  std::string suite;
  std::string name;
  std::string parameters;
  int grid_size = 0;
  int radius_count = 0;
  double value = 0.0;
};

struct RunReport {
  std::vector<CheckRecord> checks;
  std::vector<ConstantRecord> constants;

  /// Records a hard check: pass iff value <= bound (NaN fails).
  void check(std::string suite, std::string name, std::string statement, std::string parameters, double value,
             double bound);
  void info(std::string suite, std::string name, std::string statement, std::string parameters, double value);
  void constant(std::string suite, std::string name, std::string parameters, int grid_size, int radius_count,
                double value);

  bool passed() const;
  std::vector<const CheckRecord*> failures() const;
};

/// Numbers use %.10g so that identical runs give identical bytes.
std::string format_number(double x);

void write_checks_csv(std::ostream& os, const RunReport& r);
void write_constants_csv(std::ostream& os, const RunReport& r);
/// header: free text placed above the table (resolved parameters).
void write_summary(std::ostream& os, const RunReport& r, const std::string& header);

RunReport read_checks_csv(std::istream& is);
std::vector<ConstantRecord> read_constants_csv(std::istream& is);

/// Writes summary.txt, checks.csv and constants.csv into dir (created).
void write_report_dir(const std::string& dir, const RunReport& r, const std::string& header);
/// Reads checks.csv and constants.csv back from dir.
RunReport read_report_dir(const std::string& dir);

}  // namespace dunkl
