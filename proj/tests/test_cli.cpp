#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "lubanski/cli/runner.hpp"

using namespace lubanski;
using namespace lubanski::cli;

namespace {

struct Captured {
  int status = -1;
  std::string out;
};

Captured run_tool(const std::string& args) {
  Captured c;
  std::string cmd = std::string(LUBANSKI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, n);
  int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("lubanski_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

SuiteConfig config_for(std::vector<std::string> suites) {
  json j{{"suites", suites}};
  return config_from_json(j);
}

} // namespace

TEST(Config, KeyValueAndJsonAgree) {
  SuiteConfig a = parse_config("suites = structure, helicity\n# comment\nhelicity_candidates = -1/2, 1\noutput = text\nfail_fast = true\n");
  SuiteConfig b = parse_config(R"({"suites": ["helicity", "structure"], "helicity_candidates": ["-1/2", "1"], "output": "text", "fail_fast": true})");
  EXPECT_EQ(a.suites, b.suites);
  EXPECT_EQ(a.suites, (std::vector<std::string>{"structure", "helicity"}));
  EXPECT_EQ(a.helicity_candidates, b.helicity_candidates);
  EXPECT_EQ(a.helicity_candidates.front(), Rational(-1, 2));
  EXPECT_EQ(a.output, OutputFormat::text);
  EXPECT_TRUE(b.fail_fast);
}

TEST(Config, AllAndEmptySelectEverySuite) {
  EXPECT_EQ(parse_config("suites = all").suites, suite_names());
  EXPECT_EQ(parse_config("").suites, suite_names());
  EXPECT_EQ(suite_names().size(), 10u);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config("suites = structure, bogus"), ConfigError);
  EXPECT_THROW(parse_config("colour = blue"), ConfigError);
  EXPECT_THROW(parse_config("output = yaml"), ConfigError);
  EXPECT_THROW(parse_config("fail_fast = maybe"), ConfigError);
  EXPECT_THROW(parse_config("helicity_candidates = 1/0"), ConfigError);
  EXPECT_THROW(parse_config("no equals sign"), ConfigError);
  EXPECT_THROW(parse_config("{\"suites\": 3}"), ConfigError);
  EXPECT_THROW(parse_config("{broken"), ConfigError);
  EXPECT_THROW(parse_config("digits = 99"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config"), ConfigError);
}

TEST(Fixtures, OverridesSortByShell) {
  json j = json::parse(R"([
    {"components": ["3", "1", "2", "0"], "mass_squared": "4"},
    {"components": ["3/2", "1/2", "1", "1"], "mass_squared": "0"},
    {"components": ["1", "1", "1", "0"], "offshell": true}
  ])");
  FixtureSet f = parse_fixtures(j);
  ASSERT_EQ(f.massive.size(), 1u);
  ASSERT_EQ(f.massless.size(), 1u);
  ASSERT_EQ(f.offshell.size(), 1u);
  EXPECT_EQ(f.offshell.front().mass_squared(), Rational(-1));
}

TEST(Fixtures, RejectsInconsistentEntries) {
  EXPECT_THROW(parse_fixtures(json::parse(R"([{"components": ["3","1","2","0"], "mass_squared": "5"}])")), ConfigError);
  EXPECT_THROW(parse_fixtures(json::parse(R"([{"components": ["3","1","2"], "mass_squared": "4"}])")), ConfigError);
  EXPECT_THROW(parse_fixtures(json::parse(R"([{"components": ["2","1","0","0"], "mass_squared": "3"}])")), ConfigError);
  EXPECT_THROW(parse_fixtures(json::parse("[]")), ConfigError);
  EXPECT_THROW(parse_fixtures(json::parse(R"([{"components": ["a","1","2","0"], "mass_squared": "4"}])")), ConfigError);
}

TEST(Fixtures, DefaultsFillMissingClasses) {
  std::string path = temp_file("fixtures.json", R"([{"components": ["5","3","0","0"], "mass_squared": "16"}])");
  FixtureSet f = load_fixtures(path);
  ASSERT_EQ(f.massive.size(), 1u);
  EXPECT_EQ(f.massive.front().mass_squared(), Rational(16));
  EXPECT_EQ(f.massless.size(), massless_fixtures().size());
  EXPECT_EQ(f.offshell.size(), offshell_fixtures().size());
}

TEST(Runner, StructureSuitePasses) {
  ReportDocument d = run(config_for({"structure"}));
  EXPECT_EQ(d.records.size(), 7u);
  EXPECT_EQ(d.failures(), 0u);
  EXPECT_EQ(exit_status(d), exit_pass);
}

TEST(Runner, HelicityWithSingleCandidate) {
  SuiteConfig c = parse_config("suites = helicity\nhelicity_candidates = -1/2");
  ReportDocument d = run(c);
  bool seen = false;
  for (const auto& r : d.records)
    if (r.check_id == "weyl.helicity_scan") {
      EXPECT_EQ(r.witness.at("kernel_dims").at("-1/2"), "1");
      seen = true;
    }
  EXPECT_TRUE(seen);
  EXPECT_EQ(exit_status(d), exit_pass);
}

// Property: records are ordered by suite rank, then check id.
TEST(Runner, DeterministicOrderingAndOutput) {
  SuiteConfig c = config_for({"helicity", "structure", "einstein"});
  ReportDocument a = run(c), b = run(c);
  EXPECT_EQ(render_json(a), render_json(b));
  EXPECT_EQ(render_text(a, 4), render_text(b, 4));
  auto rank = [](const std::string& s) { return std::find(suite_names().begin(), suite_names().end(), s) - suite_names().begin(); };
  for (std::size_t k = 1; k < a.records.size(); ++k) {
    const auto &x = a.records[k - 1], &y = a.records[k];
    EXPECT_TRUE(rank(x.suite) < rank(y.suite) || (x.suite == y.suite && x.check_id <= y.check_id));
  }
}

// Property: parsing the emitted document and re-serializing is byte-identical.
TEST(Runner, JsonRoundTrip) {
  std::string out = render_json(run(config_for({"helicity", "gauge"})));
  EXPECT_EQ(json::parse(out).dump(2) + "\n", out);
  json j = json::parse(out);
  EXPECT_EQ(j.at("tool_version"), tool_version);
  EXPECT_EQ(j.at("conventions").at("metric"), conventions().at("metric"));
  EXPECT_EQ(j.at("summary").at("records").get<std::size_t>(), j.at("records").size());
}

// Property: exit status is a function of the verdict set alone.
TEST(Runner, ExitStatusFromVerdicts) {
  ReportDocument d;
  EXPECT_EQ(exit_status(d), exit_pass);
  d.records.push_back({"structure", "x", "", json::object(), true, json::object()});
  EXPECT_EQ(exit_status(d), exit_pass);
  d.records.push_back({"structure", "y", "", json::object(), false, json::object()});
  EXPECT_EQ(exit_status(d), exit_failures);
  d.config_error = "bad";
  EXPECT_EQ(exit_status(d), exit_config_error);
}

TEST(Runner, EinsteinSuiteReportsTheLiteralGaugeRestrictionFailure) {
  ReportDocument d = run(config_for({"einstein"}));
  std::size_t failed = 0;
  for (const auto& r : d.records) {
    if (r.passed) continue;
    ++failed;
    EXPECT_EQ(r.check_id, "einstein.fierz_pauli_comparison");
    EXPECT_EQ(r.witness.at("gauge_restricted_kernels_equal").at("verdict"), "fail");
    EXPECT_EQ(r.witness.at("traceless_reduction_equal").at("verdict"), "pass");
  }
  EXPECT_EQ(failed, massless_fixtures().size());
  EXPECT_EQ(exit_status(d), exit_failures);
}

TEST(Runner, FailFastStopsAfterFirstFailingCheck) {
  SuiteConfig c = config_for({"einstein"});
  c.fail_fast = true;
  ReportDocument d = run(c);
  ASSERT_FALSE(d.records.empty());
  EXPECT_FALSE(d.records.back().passed);
  EXPECT_EQ(d.records.back().check_id, "einstein.fierz_pauli_comparison");
}

TEST(Explain, KnownAndUnknownIds) {
  std::string s = explain("dirac.sigma_equivalence");
  EXPECT_NE(s.find("16x4"), std::string::npos);
  EXPECT_NE(s.find("anchor:"), std::string::npos);
  EXPECT_NE(explain("weyl.helicity_scan").find("-1/2"), std::string::npos);
  EXPECT_THROW(explain("bogus.id"), ConfigError);
  for (const auto& d : registry()) EXPECT_NO_THROW(explain(d.check_id)) << d.check_id;
  EXPECT_NE(list_suites().find("einstein.offshell_gauge_kernel"), std::string::npos);
}

TEST(Tool, ExitStatuses) {
  Captured ok = run_tool("verify --suite structure");
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(json::parse(ok.out).at("summary").at("failed"), 0);

  Captured bad = run_tool("verify --suite bogus");
  EXPECT_EQ(bad.status, 2);
  json j = json::parse(bad.out);
  EXPECT_TRUE(j.at("records").empty());
  EXPECT_TRUE(j.contains("config_error"));

  EXPECT_EQ(run_tool("verify --suite einstein --output text").status, 1);
  EXPECT_EQ(run_tool("explain bogus.id").status, 2);
  EXPECT_EQ(run_tool("explain weyl.helicity_scan").status, 0);
  EXPECT_EQ(run_tool("list-suites").status, 0);
}

TEST(Tool, ConfigFileAndFixtureOverrides) {
  std::string fixtures = temp_file("tool_fixtures.json", R"([{"components": ["5","3","0","0"], "mass_squared": "16"}])");
  std::string config = temp_file("tool_config.txt", "suites = spectra\nmomentum_overrides = " + fixtures + "\n");
  Captured c = run_tool("verify --config " + config);
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("(5,3,0,0)"), std::string::npos);
  Captured broken = run_tool("verify --suite spectra --fixtures " + temp_file("broken.json", "[{\"components\": [1]}]"));
  EXPECT_EQ(broken.status, 2);
}

TEST(Tool, OutputIsByteIdenticalAcrossRuns) {
  Captured a = run_tool("verify --suite helicity --suite gauge"), b = run_tool("verify --suite helicity --suite gauge");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
