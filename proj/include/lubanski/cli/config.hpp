#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lubanski/minkowski.hpp"

namespace lubanski::cli {

using json = nlohmann::ordered_json;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"structure", "covariance", "pauli_lubanski", "spectra",   "helicity",
                                                 "systems",   "equivalences", "gauge",        "einstein", "identities"};
  return names;
}

// Any malformed input: unknown suite, unreadable file, bad rational, fixture off its declared shell.
class ConfigError : public Error {
public:
  using Error::Error;
};

enum class OutputFormat { json, text };

struct FixtureSet {
  std::vector<MomentumSample> massive;
  std::vector<MomentumSample> massless;
  std::vector<MomentumSample> offshell;
};

struct SuiteConfig {
  std::vector<std::string> suites;
  std::string momentum_overrides;
  std::vector<Rational> helicity_candidates;
  OutputFormat output = OutputFormat::json;
  bool fail_fast = false;
  int digits = 0;  // text output only: 0 keeps exact rationals alone
};

inline Rational rational_field(const json& v, const std::string& what) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::exception& e) {
    throw ConfigError(what + ": " + e.what());
  }
  throw ConfigError(what + ": expected a rational string like \"-1/2\" or an integer");
}

// Resolves "all", rejects unknown names, keeps the canonical order, drops duplicates.
inline std::vector<std::string> normalize_suites(const std::vector<std::string>& requested) {
  if (requested.empty()) return suite_names();
  std::vector<bool> on(suite_names().size(), false);
  for (const auto& s : requested) {
    if (s == "all") {
      on.assign(on.size(), true);
      continue;
    }
    bool found = false;
    for (std::size_t k = 0; k < suite_names().size(); ++k)
      if (suite_names()[k] == s) on[k] = found = true;
    if (!found) throw ConfigError("unknown suite '" + s + "'");
  }
  std::vector<std::string> out;
  for (std::size_t k = 0; k < on.size(); ++k)
    if (on[k]) out.push_back(suite_names()[k]);
  return out;
}

inline OutputFormat output_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "text") return OutputFormat::text;
  throw ConfigError("output must be json or text, got '" + s + "'");
}

inline std::string to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "text"; }

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (auto t = trim(item); !t.empty()) out.push_back(t);
  return out;
}

// key = value lines, '#' comments, comma-separated lists.
inline json key_value_to_json(const std::string& text) {
  json j = json::object();
  std::stringstream ss(text);
  std::string line;
  int n = 0;
  while (std::getline(ss, line)) {
    ++n;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(n) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "suites" || key == "helicity_candidates") {
      j[key] = split_list(value);
    } else if (key == "fail_fast") {
      if (value != "true" && value != "false") throw ConfigError("fail_fast must be true or false");
      j[key] = value == "true";
    } else if (key == "digits") {
      try {
        j[key] = std::stoi(value);
      } catch (const std::exception&) {
        throw ConfigError("digits must be an integer");
      }
    } else {
      j[key] = value;
    }
  }
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace detail

inline SuiteConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be an object");
  static const std::vector<std::string> known = {"suites", "momentum_overrides", "helicity_candidates", "output", "fail_fast",
                                                 "digits"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown config key '" + key + "'");
  SuiteConfig c;
  try {
    if (j.contains("suites")) c.suites = j.at("suites").get<std::vector<std::string>>();
    if (j.contains("momentum_overrides")) c.momentum_overrides = j.at("momentum_overrides").get<std::string>();
    if (j.contains("output")) c.output = output_from_string(j.at("output").get<std::string>());
    if (j.contains("fail_fast")) c.fail_fast = j.at("fail_fast").get<bool>();
    if (j.contains("digits")) c.digits = j.at("digits").get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field type: ") + e.what());
  }
  if (j.contains("helicity_candidates")) {
    if (!j.at("helicity_candidates").is_array()) throw ConfigError("helicity_candidates must be a list");
    for (const auto& v : j.at("helicity_candidates")) c.helicity_candidates.push_back(rational_field(v, "helicity candidate"));
  }
  if (c.digits < 0 || c.digits > 60) throw ConfigError("digits must lie in 0..60");
  c.suites = normalize_suites(c.suites);
  return c;
}

// JSON when the text starts with '{', key = value lines otherwise.
inline SuiteConfig parse_config(const std::string& text) {
  std::string t = detail::trim(text);
  if (!t.empty() && t.front() == '{') {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("config JSON: ") + e.what());
    }
    return config_from_json(j);
  }
  return config_from_json(detail::key_value_to_json(t));
}

inline SuiteConfig load_config(const std::string& path) { return parse_config(detail::read_file(path)); }

inline FixtureSet default_fixtures() { return {massive_fixtures(Rational(4)), massless_fixtures(), offshell_fixtures()}; }

// Override file: [{"components": ["num/den" x4], "mass_squared": "r"}, ...]. Entries sort into
// massive (m^2 > 0 with a rational mass), massless (m^2 = 0) and off-shell ({"offshell": true}).
inline FixtureSet parse_fixtures(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("fixture overrides must be a nonempty list");
  FixtureSet out;
  std::size_t n = 0;
  for (const auto& e : j) {
    std::string where = "fixture " + std::to_string(n++);
    if (!e.is_object() || !e.contains("components") || !e.at("components").is_array() || e.at("components").size() != 4)
      throw ConfigError(where + ": needs four components");
    std::array<Rational, 4> c;
    for (std::size_t mu = 0; mu < 4; ++mu) c[mu] = rational_field(e.at("components")[mu], where);
    bool off = e.contains("offshell") && e.at("offshell").is_boolean() && e.at("offshell").get<bool>();
    if (off) {
      out.offshell.push_back(MomentumSample::of(c));
      continue;
    }
    if (!e.contains("mass_squared")) throw ConfigError(where + ": missing mass_squared");
    Rational m2 = rational_field(e.at("mass_squared"), where);
    try {
      MomentumSample s(c, m2);
      Rational m;
      if (m2 < 0 || !lubanski::detail::rational_sqrt(m2, m)) throw ConfigError(where + ": mass_squared needs a rational square root");
      (m2 == 0 ? out.massless : out.massive).push_back(s);
    } catch (const DomainError& err) {
      throw ConfigError(where + ": " + err.what());
    }
  }
  return out;
}

// Defaults fill any class the override file leaves empty.
inline FixtureSet load_fixtures(const std::string& path) {
  FixtureSet d = default_fixtures();
  if (path.empty()) return d;
  json j;
  try {
    j = json::parse(detail::read_file(path));
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("fixture JSON: ") + e.what());
  }
  FixtureSet f = parse_fixtures(j);
  if (f.massive.empty()) f.massive = d.massive;
  if (f.massless.empty()) f.massless = d.massless;
  if (f.offshell.empty()) f.offshell = d.offshell;
  return f;
}

} // namespace lubanski::cli
