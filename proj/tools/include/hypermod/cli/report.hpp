#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "hypermod/real.hpp"

namespace hypermod::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitProvedFailure = 1,
  kExitUsage = 2,
  kExitNumeric = 3,
  kExitData = 4,
};

enum class Format { kText, kJson, kCsv };
Format parse_format(const std::string& name);

/// Rows keep insertion order; every number is stored as a decimal string.
struct Report {
  std::string command;
  std::vector<nlohmann::ordered_json> rows;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
  int exit_code = kExitOk;
};

/// Fixed-width scientific rendering used for every real in a report.
std::string decimal(const Real& x, int digits = 30);
std::string decimal(long x);

std::string render(const Report& report, Format format);
std::string render_json(const Report& report);
std::string render_text(const Report& report);
std::string render_csv(const Report& report);

}  // namespace hypermod::cli
