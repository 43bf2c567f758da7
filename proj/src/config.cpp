#include "dunkl/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace dunkl {

namespace {

using nlohmann::json;

const std::set<std::string> kKeys = {"kappa",        "dim",        "grid_size",  "half_width", "quadrature_order",
                                     "radius_count", "radius_min", "radius_max", "mollify_t",  "suites",
                                     "output_dir",   "seed",       "workers"};

template <class T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(10);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kernel",      "product-formula", "transform",      "translation",
                                                 "maximal",     "covering",        "fefferman-stein"};
  return names;
}

Multiplicity RunConfig::multiplicity() const {
  if (kappa.size() == 1) return Multiplicity(std::vector<double>(static_cast<std::size_t>(dim), kappa[0]));
  return Multiplicity(kappa);
}

std::vector<std::string> RunConfig::selected_suites() const {
  if (suites.empty()) return suite_names();
  std::vector<std::string> out;
  for (const auto& s : suite_names()) {
    if (std::find(suites.begin(), suites.end(), s) != suites.end()) out.push_back(s);
  }
  return out;
}

void validate(const RunConfig& c) {
  auto fail = [](const std::string& m) { throw ConfigError(m); };
  if (c.dim < 1 || c.dim > 3) fail("dim must be 1, 2 or 3");
  if (c.kappa.empty()) fail("kappa must not be empty");
  if (c.kappa.size() != 1 && c.kappa.size() != static_cast<std::size_t>(c.dim)) {
    fail("kappa needs 1 or dim entries");
  }
  for (double k : c.kappa) {
    if (!std::isfinite(k) || k < 0.0) fail("kappa entries must be finite and >= 0");
  }
  if (c.grid_size < 16 || c.grid_size > 1024 || c.grid_size % 2 != 0) fail("grid_size must be even, in [16, 1024]");
  if (!std::isfinite(c.half_width) || !(c.half_width > 0.0)) fail("half_width must be positive");
  if (c.quadrature_order < 16 || c.quadrature_order > 4000) fail("quadrature_order must be in [16, 4000]");
  if (c.radius_count < 2 || c.radius_count > 1024) fail("radius_count must be in [2, 1024]");
  if (!std::isfinite(c.radius_min) || c.radius_min < 0.0) fail("radius_min must be >= 0");
  if (!std::isfinite(c.radius_max) || c.radius_max < 0.0) fail("radius_max must be >= 0");
  const double h = 2.0 * c.half_width / c.grid_size;
  const double lo = c.radius_min > 0.0 ? c.radius_min : 0.5 * h;
  const double hi = c.radius_max > 0.0 ? c.radius_max : 4.0 * c.half_width;
  if (!(hi > lo)) fail("radius_max must exceed radius_min");
  if (!(c.mollify_t > 0.0) || c.mollify_t > 1.0) fail("mollify_t must be in (0, 1]");
  if (c.workers < 1 || c.workers > 256) fail("workers must be in [1, 256]");
  if (c.output_dir.empty()) fail("output_dir must not be empty");
  for (const auto& s : c.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      fail("unknown suite '" + s + "'");
    }
  }
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.count(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  RunConfig c;
  if (j.contains("kappa") && j["kappa"].is_number()) {
    c.kappa = {j["kappa"].get<double>()};
  } else {
    read(j, "kappa", c.kappa);
  }
  read(j, "dim", c.dim);
  read(j, "grid_size", c.grid_size);
  read(j, "half_width", c.half_width);
  read(j, "quadrature_order", c.quadrature_order);
  read(j, "radius_count", c.radius_count);
  read(j, "radius_min", c.radius_min);
  read(j, "radius_max", c.radius_max);
  read(j, "mollify_t", c.mollify_t);
  read(j, "suites", c.suites);
  read(j, "output_dir", c.output_dir);
  read(j, "seed", c.seed);
  read(j, "workers", c.workers);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string to_json(const RunConfig& c) {
  json j;
  j["kappa"] = c.kappa;
  j["dim"] = c.dim;
  j["grid_size"] = c.grid_size;
  j["half_width"] = c.half_width;
  j["quadrature_order"] = c.quadrature_order;
  j["radius_count"] = c.radius_count;
  j["radius_min"] = c.radius_min;
  j["radius_max"] = c.radius_max;
  j["mollify_t"] = c.mollify_t;
  j["suites"] = c.suites;
  j["output_dir"] = c.output_dir;
  j["seed"] = c.seed;
  j["workers"] = c.workers;
  return j.dump(2);
}

void print_config(std::ostream& os, const RunConfig& c) {
  const double h = 2.0 * c.half_width / c.grid_size;
  os << "kappa            = " << join(c.kappa) << (c.kappa.size() == 1 && c.dim > 1 ? " (all axes)" : "") << '\n'
     << "dim              = " << c.dim << '\n'
     << "grid_size        = " << c.grid_size << '\n'
     << "half_width       = " << c.half_width << '\n'
     << "quadrature_order = " << c.quadrature_order << '\n'
     << "radius_count     = " << c.radius_count << '\n'
     << "radius_min       = " << (c.radius_min > 0.0 ? c.radius_min : 0.5 * h) << '\n'
     << "radius_max       = " << (c.radius_max > 0.0 ? c.radius_max : 4.0 * c.half_width) << '\n'
     << "mollify_t        = " << c.mollify_t << '\n'
     << "seed             = " << c.seed << '\n'
     << "workers          = " << c.workers << '\n'
     << "output_dir       = " << c.output_dir << '\n';
}

}  // namespace dunkl
