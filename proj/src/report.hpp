#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "poly.hpp"

namespace narayana {

using ordered_json = nlohmann::ordered_json;

// Parsed invocation of one CLI command. Rational parameters stay strings
// until the command runs so configs echo back exactly as given.
struct RunConfig {
  std::string command;  // gen | roots | interlace | recur | logconcave | suite

  std::optional<std::string> family;
  std::optional<long> n, m, t;
  std::optional<std::string> alpha, beta;

  // Second polynomial for interlace pair mode.
  std::optional<std::string> family2;
  std::optional<long> n2, m2, t2;
  std::optional<std::string> alpha2, beta2;
  bool chain = false;

  std::optional<long> max_n, max_t;
  int folds = 5;
  std::optional<std::string> identity;  // f | overline | underline
  bool q_probe = false;
  bool q_decompose = false;
  bool certify = false;

  std::string format = "json";  // json | csv | text
  std::optional<std::string> out;
  long jobs = 0;        // 0 = NARAYANA_JOBS env or hardware
  long refine_cap = -1; // -1 = per-operation default

  ordered_json to_json() const;
  static RunConfig from_json(const ordered_json& j);
};

struct ReportDocument {
  int schema_version;
  std::string tool_version;
  ordered_json config;
  std::vector<ordered_json> records;
  ordered_json summary;
  double duration_seconds = 0.0;

  ordered_json to_json() const;
  static ReportDocument from_json(const ordered_json& j);

  std::string to_csv() const;   // coefficient tables (gen) only
  std::string to_text() const;
};

// Runs the configured command and assembles the document. Domain and usage
// problems throw std::domain_error / std::invalid_argument.
ReportDocument run_command(const RunConfig& cfg);

// 0 when every record whose severity is not "conjecture-probe" reports ok.
int exit_code_for(const ReportDocument& doc);

// Coefficients as canonical rational strings, constant term first.
std::vector<std::string> coeff_strings(const Poly& p);

}  // namespace narayana
