#pragma once

#include <algorithm>
#include <atomic>
#include <thread>

#include "lubanski/cli/registry.hpp"

namespace lubanski::cli {

enum ExitStatus { exit_pass = 0, exit_failures = 1, exit_config_error = 2 };

namespace detail {

inline std::vector<Record> run_one(const CheckDescriptor& d, const Context& c) {
  try {
    return d.run(c);
  } catch (const std::exception& e) {
    Record r{d.suite, d.check_id, d.anchor, json::object(), false, json::object()};
    r.witness["error"] = json{{"verdict", "fail"}, {"detail", e.what()}};
    return {r};
  }
}

} // namespace detail

// Checks run on a small worker pool; results are gathered per descriptor and ordered by (suite, check_id).
inline ReportDocument run(const SuiteConfig& config, const Context& context, unsigned workers = 0) {
  ReportDocument doc{config, {}, {}};
  std::vector<const CheckDescriptor*> selected;
  for (const auto& d : registry())
    if (std::find(config.suites.begin(), config.suites.end(), d.suite) != config.suites.end()) selected.push_back(&d);
  std::vector<std::vector<Record>> results(selected.size());

  if (config.fail_fast) {
    for (std::size_t k = 0; k < selected.size(); ++k) {
      results[k] = detail::run_one(*selected[k], context);
      if (std::any_of(results[k].begin(), results[k].end(), [](const Record& r) { return !r.passed; })) break;
    }
  } else {
    if (workers == 0) workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < selected.size();) results[k] = detail::run_one(*selected[k], context);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
  }

  std::vector<std::size_t> order(selected.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  auto suite_rank = [](const std::string& s) { return std::find(suite_names().begin(), suite_names().end(), s) - suite_names().begin(); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ra = suite_rank(selected[a]->suite), rb = suite_rank(selected[b]->suite);
    if (ra != rb) return ra < rb;
    return selected[a]->check_id < selected[b]->check_id;
  });
  for (std::size_t k : order) doc.records.insert(doc.records.end(), results[k].begin(), results[k].end());
  return doc;
}

inline ReportDocument run(const SuiteConfig& config) {
  Context c{load_fixtures(config.momentum_overrides),
            config.helicity_candidates.empty() ? default_helicity_candidates() : config.helicity_candidates};
  return run(config, c);
}

inline int exit_status(const ReportDocument& d) {
  if (!d.config_error.empty()) return exit_config_error;
  return d.failures() == 0 ? exit_pass : exit_failures;
}

inline std::string explain(const std::string& check_id) {
  const CheckDescriptor* d = find_check(check_id);
  if (!d) throw ConfigError("unknown check id '" + check_id + "'");
  std::ostringstream os;
  os << check_id << " (suite " << d->suite << ")\n";
  os << "  anchor: " << d->anchor << "\n";
  Context c = default_context();
  os << "  assembled at the first default fixture:\n";
  for (const auto& s : d->shapes(c)) os << "    " << s << "\n";
  os << "  conventions:\n";
  const json conv = conventions();
  for (const auto& [k, v] : conv.items()) os << "    " << k << ": " << v.get<std::string>() << "\n";
  return os.str();
}

inline std::string list_suites() {
  std::ostringstream os;
  for (const auto& s : suite_names()) {
    std::size_t n = 0;
    for (const auto& d : registry())
      if (d.suite == s) ++n;
    os << s << " (" << n << " checks)\n";
    for (const auto& d : registry())
      if (d.suite == s) os << "  " << d.check_id << "\n";
  }
  return os.str();
}

} // namespace lubanski::cli
