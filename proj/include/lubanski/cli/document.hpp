#pragma once

#include <string>
#include <vector>

#include "lubanski/cli/config.hpp"
#include "lubanski/report.hpp"
#include "lubanski/wave_systems.hpp"

namespace lubanski::cli {

inline constexpr const char* tool_version = "0.1.0";

struct Record {
  std::string suite;
  std::string check_id;
  std::string anchor;
  json inputs = json::object();
  bool passed = false;
  json witness = json::object();  // exact values rendered as strings
};

inline json conventions() {
  return json{{"metric", "diag(+1,-1,-1,-1)"},
              {"levi_civita", "e_{0123} = +1, e^{0123} = -1"},
              {"plane_wave", plane_wave_convention},
              {"spin_factor", "S^{ab} = -i M^{ab}"}};
}

// Report entries become witness fields {"entry": {"verdict", "detail"}}.
inline void add_report(json& witness, const Report& r, const std::string& prefix = {}) {
  for (const auto& e : r.entries())
    witness[prefix + e.name] = json{{"verdict", e.passed ? "pass" : "fail"}, {"detail", e.detail}};
}

inline bool witness_passed(const json& witness) {
  for (const auto& [_, v] : witness.items())
    if (v.is_object() && v.contains("verdict") && v.at("verdict") != "pass") return false;
  return true;
}

inline json record_to_json(const Record& r) {
  return json{{"suite", r.suite},   {"check_id", r.check_id},           {"anchor", r.anchor},
              {"inputs", r.inputs}, {"verdict", r.passed ? "pass" : "fail"}, {"witness", r.witness}};
}

struct ReportDocument {
  SuiteConfig config;
  std::vector<Record> records;
  std::string config_error;  // nonempty only for exit status 2

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : records)
      if (!r.passed) ++n;
    return n;
  }
};

inline json document_to_json(const ReportDocument& d) {
  json j;
  j["tool_version"] = tool_version;
  j["conventions"] = conventions();
  if (!d.config_error.empty()) {
    j["config_error"] = d.config_error;
  } else {
    json cands = json::array();
    for (const auto& c : d.config.helicity_candidates) cands.push_back(rational_string(c));
    j["config"] = json{{"suites", d.config.suites},
                       {"momentum_overrides", d.config.momentum_overrides},
                       {"helicity_candidates", cands},
                       {"fail_fast", d.config.fail_fast}};
  }
  json recs = json::array();
  for (const auto& r : d.records) recs.push_back(record_to_json(r));
  j["records"] = recs;
  j["summary"] = json{{"records", d.records.size()}, {"passed", d.records.size() - d.failures()}, {"failed", d.failures()}};
  return j;
}

inline std::string render_json(const ReportDocument& d) { return document_to_json(d).dump(2) + "\n"; }

namespace detail {

// Exact value, followed by a decimal rendering when requested and the value is a non-integer rational.
inline std::string render_value(const std::string& s, int digits) {
  if (digits <= 0 || s.empty()) return s;
  try {
    Rational r = parse_rational(s);
    if (r.get_den() == 1) return s;
    return s + " (~" + decimal_string(r, digits) + ")";
  } catch (const std::exception&) {
    return s;
  }
}

inline std::string flatten(const json& j, int digits) {
  if (j.is_string()) return render_value(j.get<std::string>(), digits);
  return j.dump();
}

} // namespace detail

inline std::string render_text(const ReportDocument& d, int digits = 0) {
  std::ostringstream os;
  os << "lubanski " << tool_version << "\n";
  const json conv = conventions();
  for (const auto& [k, v] : conv.items()) os << "  " << k << ": " << v.get<std::string>() << "\n";
  if (!d.config_error.empty()) {
    os << "config error: " << d.config_error << "\n";
    return os.str();
  }
  for (const auto& r : d.records) {
    os << (r.passed ? "PASS " : "FAIL ") << r.suite << " " << r.check_id;
    for (const auto& [k, v] : r.inputs.items()) os << " " << k << "=" << detail::flatten(v, digits);
    os << "\n";
    for (const auto& [k, v] : r.witness.items()) {
      if (v.is_object() && v.contains("verdict")) {
        if (v.at("verdict") == "pass" && r.passed) continue;
        os << "    " << v.at("verdict").get<std::string>() << " " << k << ": " << v.at("detail").get<std::string>() << "\n";
      } else if (!r.passed || !v.is_object()) {
        os << "    " << k << " = " << detail::flatten(v, digits) << "\n";
      }
    }
  }
  os << d.records.size() - d.failures() << "/" << d.records.size() << " records passed\n";
  return os.str();
}

} // namespace lubanski::cli
