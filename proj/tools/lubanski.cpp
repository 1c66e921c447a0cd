#include <iostream>

#include "CLI11.hpp"
#include "lubanski/cli/runner.hpp"

namespace lc = lubanski::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of relativistic wave equations from Poincare-group representations"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  std::string config_path, output, overrides;
  std::vector<std::string> candidates;
  bool fail_fast = false;
  int digits = -1;
  verify->add_option("--suite", suites, "suite name, repeatable; 'all' selects every suite");
  verify->add_option("--config", config_path, "config file (JSON or key = value lines)");
  verify->add_option("--output", output, "json or text");
  verify->add_option("--fixtures", overrides, "momentum override file");
  verify->add_option("--helicity", candidates, "helicity candidate as a rational, repeatable");
  verify->add_flag("--fail-fast", fail_fast, "stop after the first failing check");
  verify->add_option("--digits", digits, "decimal digits appended to rationals in text output");

  auto* explain = app.add_subcommand("explain", "describe one check");
  std::string check_id;
  explain->add_option("check_id", check_id)->required();

  auto* list = app.add_subcommand("list-suites", "list suites and their checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : lc::exit_config_error;
  }

  if (*list) {
    std::cout << lc::list_suites();
    return lc::exit_pass;
  }
  if (*explain) {
    try {
      std::cout << lc::explain(check_id);
      return lc::exit_pass;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return lc::exit_config_error;
    }
  }

  lc::ReportDocument doc;
  try {
    doc.config = config_path.empty() ? lc::SuiteConfig{} : lc::load_config(config_path);
    if (!suites.empty()) doc.config.suites = suites;
    doc.config.suites = lc::normalize_suites(doc.config.suites);
    if (!output.empty()) doc.config.output = lc::output_from_string(output);
    if (!overrides.empty()) doc.config.momentum_overrides = overrides;
    if (fail_fast) doc.config.fail_fast = true;
    if (digits >= 0) doc.config.digits = digits;
    if (!candidates.empty()) {
      doc.config.helicity_candidates.clear();
      for (const auto& c : candidates) doc.config.helicity_candidates.push_back(lc::rational_field(lc::json(c), "--helicity"));
    }
    doc = lc::run(doc.config);
  } catch (const lc::ConfigError& e) {
    doc.records.clear();
    doc.config_error = e.what();
    std::cerr << "config error: " << e.what() << "\n";
  }
  std::cout << (doc.config.output == lc::OutputFormat::json ? lc::render_json(doc) : lc::render_text(doc, doc.config.digits));
  return lc::exit_status(doc);
}
