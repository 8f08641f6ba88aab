#include "hypermod/cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hypermod::cli {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& value) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    throw std::invalid_argument("config key '" + key + "' expects an integer, got '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("config key '" + key + "' expects true/false, got '" + value + "'");
}

}  // namespace

void RunConfig::validate() const {
  if (precision_bits < 64) throw std::invalid_argument("precision_bits must be at least 64");
  if (max_prime < 3) throw std::invalid_argument("max_prime must be at least 3");
  if (max_terms < 100) throw std::invalid_argument("max_terms must be at least 100");
  if (tolerance_exponent < 1) throw std::invalid_argument("tolerance_exponent must be positive");
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "precision_bits") {
    precision_bits = parse_long(key, value);
  } else if (key == "max_prime") {
    max_prime = parse_long(key, value);
  } else if (key == "max_terms") {
    max_terms = parse_long(key, value);
  } else if (key == "cache_dir") {
    cache_dir = value;
  } else if (key == "offline") {
    offline = parse_bool(key, value);
  } else if (key == "tolerance_exponent") {
    tolerance_exponent = parse_long(key, value);
  } else if (key == "max_denominator") {
    max_denominator = parse_long(key, value);
  } else if (key == "fixture_dir") {
    fixture_dir = value;
  } else if (key == "fetch_url") {
    fetch_url = value;
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + " lacks '='");
    }
    base.set(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
  base.validate();
  return base;
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::optional<std::filesystem::path> resolve_config_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(kConfigEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace hypermod::cli
