#pragma once

// Named verification suites run from a RunConfig.

#include <iosfwd>
#include <string>
#include <vector>

#include "dunkl/config.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

struct SuiteInfo {
  std::string name;
  std::string summary;
  /// The identities and inequalities the suite checks.
  std::vector<std::string> statements;
};

/// Every suite, in run order.
const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo& suite_info(const std::string& name);

/// Resolved parameters and the selected suites with their statements; no
/// computation. Validates cfg first.
void describe(std::ostream& os, const RunConfig& cfg);

/// Appends the records of one suite to rep.
void run_suite(const std::string& name, const RunConfig& cfg, RunReport& rep);

/// Validates cfg, then runs the selected suites in order. progress (if set)
/// gets one line per suite.
RunReport run_suites(const RunConfig& cfg, std::ostream* progress = nullptr);

}  // namespace dunkl
