#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace hypermod::cli {

/// Environment variable naming the configuration file; --config takes precedence.
inline constexpr const char* kConfigEnv = "HYPERMOD_CONFIG";

struct RunConfig {
  long precision_bits = 256;
  long max_prime = 100;
  long max_terms = 20000;
  std::filesystem::path cache_dir = ".hypermod-cache";
  bool offline = false;
  /// Agreement thresholds are 10^−tolerance_exponent.
  long tolerance_exponent = 20;
  long max_denominator = 1000000;
  /// Recorded responses `<label>.json` used when the network is unavailable.
  std::filesystem::path fixture_dir;
  std::string fetch_url =
      "https://www.lmfdb.org/api/mf_newforms/?label={label}&_format=json&_fields=label,traces";

  /// Throws std::invalid_argument when an invariant fails.
  void validate() const;
  /// Sets one key from a `key=value` pair; unknown keys throw std::invalid_argument.
  void set(const std::string& key, const std::string& value);
};

/// Flat `key=value` text with `#` comments and blank lines.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});
/// The explicit path, else $HYPERMOD_CONFIG, else nothing.
std::optional<std::filesystem::path> resolve_config_path(const std::optional<std::string>& flag);

}  // namespace hypermod::cli
