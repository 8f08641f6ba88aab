#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hypermod/cli/config.hpp"
#include "hypermod/etaforms.hpp"

namespace hypermod::cli {

class FetchNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FetchParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FetchResult {
  std::string label;
  QExpansion expansion;
  std::string source;  ///< "network", "cache" or "fixture"
  std::vector<std::string> warnings;
};

/// Accepts `N.k.c.x` with c numeric (mapped to the letter orbit) or alphabetic; throws
/// std::invalid_argument on malformed labels.
std::string newform_label(const std::string& label);
/// Parses a `{"data": [{"label": ..., "traces": [...]}]}` response; an empty data list is
/// FetchNotFound, anything else malformed is FetchParseError.
QExpansion parse_coefficient_response(const std::string& body, const std::string& label);

/// Network first (unless offline), then the cache, then recorded fixtures. Successful network
/// responses are written to `<cache_dir>/<label>.csv`.
FetchResult fetch_external_coefficients(const std::string& label, const RunConfig& cfg);

}  // namespace hypermod::cli
