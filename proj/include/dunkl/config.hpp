#pragma once

// Run configuration for the verification suites. JSON on disk; every field
// optional, unknown keys rejected.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dunkl/measure.hpp"

namespace dunkl {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  /// One entry (broadcast to every axis) or one per axis; all >= 0.
  std::vector<double> kappa{0.5};
  int dim = 1;                       // 1..3
  int grid_size = 256;               // points per axis, even, 16..1024
  double half_width = 12.0;          // L > 0
  int quadrature_order = 400;        // Gauss-Jacobi nodes, 16..4000
  int radius_count = 128;            // 2..1024
  double radius_min = 0.0;           // 0: h/2
  double radius_max = 0.0;           // 0: 4L
  double mollify_t = 1e-4;           // (0, 1]
  std::vector<std::string> suites;   // empty: all
  std::string output_dir = "dunkl-report";
  std::uint64_t seed = 1;
  int workers = 1;                   // 1..256

  Multiplicity multiplicity() const;
  /// Suites in catalogue order.
  std::vector<std::string> selected_suites() const;
};

/// Names of every suite, in run order.
const std::vector<std::string>& suite_names();

/// Throws ConfigError naming the first offending field.
void validate(const RunConfig& cfg);

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);
std::string to_json(const RunConfig& cfg);

/// Resolved parameters, one "key = value" per line.
void print_config(std::ostream& os, const RunConfig& cfg);

}  // namespace dunkl
