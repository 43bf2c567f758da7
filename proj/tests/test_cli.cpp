#include <doctest.h>

#include <limits>
#include <sstream>

#include "dunkl/config.hpp"
#include "dunkl/report.hpp"
#include "dunkl/suites.hpp"

using namespace dunkl;

TEST_CASE("config parsing and defaults") {
  const RunConfig d = parse_config("{}");
  CHECK(d.kappa == std::vector<double>{0.5});
  CHECK(d.grid_size == 256);
  CHECK(d.radius_count == 128);
  CHECK(d.selected_suites().size() == 7);
  const RunConfig c = parse_config(R"({"kappa": [0.5, 1.0], "dim": 2, "grid_size": 64, "suites": ["covering", "kernel"]})");
  CHECK(c.multiplicity() == Multiplicity({0.5, 1.0}));
  // Catalogue order, not input order.
  CHECK(c.selected_suites() == std::vector<std::string>{"kernel", "covering"});
  CHECK(parse_config(R"({"kappa": 2.5, "dim": 3})").multiplicity() == Multiplicity::uniform(3, 2.5));
  const RunConfig back = parse_config(to_json(c));
  CHECK(back.kappa == c.kappa);
  CHECK(back.suites == c.suites);
  CHECK(back.grid_size == 64);
}

TEST_CASE("config rejection happens before computation") {
  CHECK_THROWS_AS(parse_config("{\"bogus\": 1}"), ConfigError);
  CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"grid_size\": \"many\"}"), ConfigError);
  CHECK_THROWS_AS(parse_config("{nope"), ConfigError);
  RunConfig c;
  c.kappa = {-0.5};
  c.suites = {"maximal"};
  CHECK_THROWS_AS(validate(c), ConfigError);
  CHECK_THROWS_AS(run_suites(c), ConfigError);
  c = RunConfig{};
  c.suites = {"maximl"};
  try {
    validate(c);
    FAIL("unknown suite accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("maximl") != std::string::npos);
  }
  c = RunConfig{};
  c.grid_size = 101;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.kappa = {0.5, 1.0, 2.0};
  c.dim = 2;
  CHECK_THROWS_AS(validate(c), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("describe lists the selected suites") {
  RunConfig c;
  std::ostringstream all;
  describe(all, c);
  for (const auto& s : suite_names()) CHECK(all.str().find(s) != std::string::npos);
  CHECK(suite_catalog().size() == 7);
  c.suites = {"covering"};
  std::ostringstream one;
  describe(one, c);
  CHECK(one.str().find("covering") != std::string::npos);
  CHECK(one.str().find("fefferman-stein") == std::string::npos);
}

TEST_CASE("report CSV round trip with awkward strings") {
  RunReport r;
  r.check("s", "a,b", "say \"hi\", twice", "k=0.5; N=8", 1.25e-9, 1e-8);
  r.check("s", "bad", "x <= y", "", 3.0, 1.0);
  r.info("s", "info", "multi\nline", "p", 0.1);
  r.check("s", "nan", "nan fails", "", std::numeric_limits<double>::quiet_NaN(), 1.0);
  r.constant("s", "c", "p,q", 64, 128, 1.5);
  CHECK_FALSE(r.passed());
  CHECK(r.failures().size() == 2);
  std::stringstream ss;
  write_checks_csv(ss, r);
  const RunReport back = read_checks_csv(ss);
  REQUIRE(back.checks.size() == r.checks.size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    CHECK(back.checks[i].name == r.checks[i].name);
    CHECK(back.checks[i].statement == r.checks[i].statement);
    CHECK(back.checks[i].parameters == r.checks[i].parameters);
    CHECK(back.checks[i].outcome == r.checks[i].outcome);
  }
  std::stringstream cs;
  write_constants_csv(cs, r);
  const auto consts = read_constants_csv(cs);
  REQUIRE(consts.size() == 1);
  CHECK(consts[0].parameters == "p,q");
  CHECK(consts[0].radius_count == 128);
  CHECK(consts[0].value == 1.5);
  CHECK(format_number(0.1) == "0.1");
  std::ostringstream sum;
  write_summary(sum, r, "header");
  CHECK(sum.str().find("RESULT: FAIL") != std::string::npos);
}

TEST_CASE("a small kernel and covering run passes and is deterministic") {
  RunConfig c;
  c.grid_size = 64;
  c.half_width = 10.0;
  c.quadrature_order = 120;
  c.suites = {"kernel", "covering"};
  const RunReport a = run_suites(c);
  const RunReport b = run_suites(c);
  CHECK(a.passed());
  std::ostringstream sa;
  std::ostringstream sb;
  write_checks_csv(sa, a);
  write_constants_csv(sa, a);
  write_checks_csv(sb, b);
  write_constants_csv(sb, b);
  CHECK(sa.str() == sb.str());
}
