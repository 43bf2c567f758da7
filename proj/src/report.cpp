#include "dunkl/report.hpp"

#include <algorithm>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// RFC 4180 fields of one line.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// One CSV record; quoted fields may span lines.
bool read_record(std::istream& is, std::string& record) {
  if (!std::getline(is, record)) return false;
  std::string more;
  while (std::count(record.begin(), record.end(), '"') % 2 == 1 && std::getline(is, more)) record += '\n' + more;
  return true;
}

double parse_number(const std::string& s) {
  if (s == "-" || s == "nan") return std::numeric_limits<double>::quiet_NaN();
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("report: bad number '" + s + "'");
  }
}

const char* kChecksHeader = "suite,check,statement,parameters,value,bound,outcome";
const char* kConstantsHeader = "suite,constant,parameters,grid_size,radius_count,value";

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Info: return "INFO";
  }
  return "INFO";
}

Outcome parse_outcome(const std::string& s) {
  if (s == "PASS") return Outcome::Pass;
  if (s == "FAIL") return Outcome::Fail;
  if (s == "INFO") return Outcome::Info;
  throw std::runtime_error("report: bad outcome '" + s + "'");
}

void RunReport::check(std::string suite, std::string name, std::string statement, std::string parameters,
                      double value, double bound) {
  const bool ok = value <= bound;  // false for NaN
  checks.push_back({std::move(suite), std::move(name), std::move(statement), std::move(parameters), value, bound,
                    ok ? Outcome::Pass : Outcome::Fail});
}

void RunReport::info(std::string suite, std::string name, std::string statement, std::string parameters,
                     double value) {
  checks.push_back({std::move(suite), std::move(name), std::move(statement), std::move(parameters), value,
                    std::numeric_limits<double>::quiet_NaN(), Outcome::Info});
}

void RunReport::constant(std::string suite, std::string name, std::string parameters, int grid_size,
                         int radius_count, double value) {
  constants.push_back({std::move(suite), std::move(name), std::move(parameters), grid_size, radius_count, value});
}

bool RunReport::passed() const { return failures().empty(); }

std::vector<const CheckRecord*> RunReport::failures() const {
  std::vector<const CheckRecord*> out;
  for (const auto& c : checks) {
    if (c.outcome == Outcome::Fail) out.push_back(&c);
  }
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void write_checks_csv(std::ostream& os, const RunReport& r) {
  os << kChecksHeader << '\n';
  for (const auto& c : r.checks) {
    os << quote(c.suite) << ',' << quote(c.name) << ',' << quote(c.statement) << ',' << quote(c.parameters) << ','
       << format_number(c.value) << ',' << format_number(c.bound) << ',' << to_string(c.outcome) << '\n';
  }
}

void write_constants_csv(std::ostream& os, const RunReport& r) {
  os << kConstantsHeader << '\n';
  for (const auto& c : r.constants) {
    os << quote(c.suite) << ',' << quote(c.name) << ',' << quote(c.parameters) << ',' << c.grid_size << ','
       << c.radius_count << ',' << format_number(c.value) << '\n';
  }
}

void write_summary(std::ostream& os, const RunReport& r, const std::string& header) {
  os << header;
  if (!header.empty() && header.back() != '\n') os << '\n';
  os << '\n';
  std::map<std::string, std::array<int, 3>> per_suite;
  std::vector<std::string> order;
  for (const auto& c : r.checks) {
    if (!per_suite.count(c.suite)) order.push_back(c.suite);
    ++per_suite[c.suite][static_cast<std::size_t>(c.outcome)];
  }
  for (const auto& s : order) {
    const auto& n = per_suite[s];
    os << std::left << std::setw(18) << s << " pass " << n[0] << "  fail " << n[1] << "  info " << n[2] << '\n';
  }
  os << '\n';
  for (const auto& c : r.checks) {
    os << '[' << to_string(c.outcome) << "] " << c.suite << " / " << c.name << "  (" << c.parameters
       << ")\n    " << c.statement << "\n    value " << format_number(c.value);
    if (c.outcome != Outcome::Info) os << "  bound " << format_number(c.bound);
    os << '\n';
  }
  const auto fails = r.failures();
  os << '\n' << (fails.empty() ? "RESULT: PASS" : "RESULT: FAIL") << " (" << r.checks.size() << " records, "
     << fails.size() << " failed)\n";
  for (const auto* f : fails) os << "  failed: " << f->suite << " / " << f->name << " (" << f->parameters << ")\n";
}

RunReport read_checks_csv(std::istream& is) {
  RunReport r;
  std::string line;
  if (!std::getline(is, line) || line != kChecksHeader) throw std::runtime_error("checks.csv: bad header");
  while (read_record(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 7) throw std::runtime_error("checks.csv: expected 7 fields");
    r.checks.push_back({f[0], f[1], f[2], f[3], parse_number(f[4]), parse_number(f[5]), parse_outcome(f[6])});
  }
  return r;
}

std::vector<ConstantRecord> read_constants_csv(std::istream& is) {
  std::vector<ConstantRecord> out;
  std::string line;
  if (!std::getline(is, line) || line != kConstantsHeader) throw std::runtime_error("constants.csv: bad header");
  while (read_record(is, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 6) throw std::runtime_error("constants.csv: expected 6 fields");
    out.push_back({f[0], f[1], f[2], static_cast<int>(parse_number(f[3])), static_cast<int>(parse_number(f[4])),
                   parse_number(f[5])});
  }
  return out;
}

void write_report_dir(const std::string& dir, const RunReport& r, const std::string& header) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path p(dir);
  auto open = [&](const char* name) {
    std::ofstream os(p / name);
    if (!os) throw std::runtime_error(std::string("cannot write ") + (p / name).string());
    return os;
  };
  {
    auto os = open("checks.csv");
    write_checks_csv(os, r);
  }
  {
    auto os = open("constants.csv");
    write_constants_csv(os, r);
  }
  auto os = open("summary.txt");
  write_summary(os, r, header);
}

RunReport read_report_dir(const std::string& dir) {
  const std::filesystem::path p(dir);
  std::ifstream checks(p / "checks.csv");
  if (!checks) throw std::runtime_error("no checks.csv in " + dir);
  RunReport r = read_checks_csv(checks);
  std::ifstream constants(p / "constants.csv");
  if (constants) r.constants = read_constants_csv(constants);
  return r;
}

}  // namespace dunkl
