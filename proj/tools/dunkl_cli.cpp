// dunkl: describe, run and re-render the verification suites.
//
// Exit status: 0 all hard checks passed, 1 usage or configuration error,
// 2 a hard check failed or the computation aborted.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dunkl/config.hpp"
#include "dunkl/report.hpp"
#include "dunkl/suites.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kFailure = 2;

// Flags that override fields of the config file.
struct Overrides {
  std::string config_path;
  std::vector<double> kappa;
  std::optional<int> dim, grid_size, quadrature_order, radius_count, workers;
  std::optional<double> half_width, radius_min, radius_max, mollify_t;
  std::vector<std::string> suites;
  std::optional<std::string> output_dir;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* app) {
    app->add_option("-c,--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    app->add_option("--kappa", kappa, "multiplicity: one value (all axes) or one per axis")->delimiter(',');
    app->add_option("--dim", dim, "dimension d (1..3)");
    app->add_option("-n,--grid-size", grid_size, "grid points per axis (even)");
    app->add_option("-L,--half-width", half_width, "domain half-width");
    app->add_option("--quadrature-order", quadrature_order, "Gauss-Jacobi order");
    app->add_option("--radius-count", radius_count, "radii in the geometric schedule");
    app->add_option("--radius-min", radius_min, "smallest radius (default h/2)");
    app->add_option("--radius-max", radius_max, "largest radius (default 4L)");
    app->add_option("--mollify-t", mollify_t, "heat mollification of the ball indicator");
    app->add_option("-s,--suite", suites, "suite to run (repeatable; default all)")->delimiter(',');
    app->add_option("-o,--output-dir", output_dir, "report directory");
    app->add_option("--seed", seed, "random seed");
    app->add_option("-j,--workers", workers, "worker threads for intra-suite sweeps");
  }

  dunkl::RunConfig resolve() const {
    dunkl::RunConfig c = config_path.empty() ? dunkl::RunConfig{} : dunkl::load_config(config_path);
    if (!kappa.empty()) c.kappa = kappa;
    if (dim) c.dim = *dim;
    if (grid_size) c.grid_size = *grid_size;
    if (half_width) c.half_width = *half_width;
    if (quadrature_order) c.quadrature_order = *quadrature_order;
    if (radius_count) c.radius_count = *radius_count;
    if (radius_min) c.radius_min = *radius_min;
    if (radius_max) c.radius_max = *radius_max;
    if (mollify_t) c.mollify_t = *mollify_t;
    if (!suites.empty()) c.suites = suites;
    if (output_dir) c.output_dir = *output_dir;
    if (seed) c.seed = *seed;
    if (workers) c.workers = *workers;
    dunkl::validate(c);
    return c;
  }
};

std::string header_for(const dunkl::RunConfig& cfg) {
  std::ostringstream os;
  os << "Dunkl verification run\n\n";
  dunkl::print_config(os, cfg);
  os << "suites           =";
  for (const auto& s : cfg.selected_suites()) os << ' ' << s;
  os << '\n';
  return os.str();
}

int cmd_run(const dunkl::RunConfig& cfg) {
  const dunkl::RunReport rep = dunkl::run_suites(cfg, &std::cerr);
  dunkl::write_report_dir(cfg.output_dir, rep, header_for(cfg));
  {
    std::ofstream os(std::filesystem::path(cfg.output_dir) / "config.json");
    os << dunkl::to_json(cfg) << '\n';
  }
  dunkl::write_summary(std::cout, rep, header_for(cfg));
  for (const auto* f : rep.failures()) {
    std::cerr << "hard check failed: " << f->suite << " / " << f->name << " (" << f->parameters << ") value "
              << dunkl::format_number(f->value) << " bound " << dunkl::format_number(f->bound) << '\n';
  }
  return rep.passed() ? 0 : kFailure;
}

int cmd_report(const std::string& dir, bool rewrite) {
  const dunkl::RunReport rep = dunkl::read_report_dir(dir);
  std::string header = "Dunkl verification run (re-rendered)\n";
  const auto cfg_path = std::filesystem::path(dir) / "config.json";
  if (std::filesystem::exists(cfg_path)) header = header_for(dunkl::load_config(cfg_path.string()));
  dunkl::write_summary(std::cout, rep, header);
  if (rewrite) {
    std::ofstream os(std::filesystem::path(dir) / "summary.txt");
    dunkl::write_summary(os, rep, header);
  }
  return rep.passed() ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z_2^d Dunkl analysis: verification suites"};
  app.require_subcommand(1);

  Overrides describe_opts;
  CLI::App* describe = app.add_subcommand("describe", "print the resolved plan without computing");
  describe_opts.attach(describe);

  Overrides run_opts;
  CLI::App* run = app.add_subcommand("run", "run the selected suites and write the report");
  run_opts.attach(run);

  std::string report_dir;
  bool rewrite = false;
  CLI::App* report = app.add_subcommand("report", "re-render the summary of a previous run");
  report->add_option("dir", report_dir, "report directory")->required()->check(CLI::ExistingDirectory);
  report->add_flag("--rewrite", rewrite, "also rewrite summary.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  dunkl::RunConfig cfg;
  try {
    if (*describe) cfg = describe_opts.resolve();
    if (*run) cfg = run_opts.resolve();
  } catch (const dunkl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*describe) {
      dunkl::describe(std::cout, cfg);
      return 0;
    }
    if (*run) return cmd_run(cfg);
    return cmd_report(report_dir, rewrite);
  } catch (const dunkl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "aborted: " << e.what() << '\n';
    return kFailure;
  }
}
