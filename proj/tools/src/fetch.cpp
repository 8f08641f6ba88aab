#include "hypermod/cli/fetch.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

namespace hypermod::cli {

namespace {

std::filesystem::path cache_file(const RunConfig& cfg, const std::string& label) {
  return cfg.cache_dir / (label + ".csv");
}

std::optional<std::string> http_get(const std::string& url, std::string* error) {
  static const std::regex re(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, re)) {
    *error = "malformed URL " + url;
    return std::nullopt;
  }
  httplib::Client client(m[1].str());
  client.set_connection_timeout(5);
  client.set_read_timeout(10);
  auto res = client.Get(m[2].matched ? m[2].str() : "/");
  if (!res) {
    *error = "request to " + m[1].str() + " failed: " + httplib::to_string(res.error());
    return std::nullopt;
  }
  if (res->status == 404) return std::string(R"({"data": []})");
  if (res->status != 200) {
    *error = "HTTP status " + std::to_string(res->status);
    return std::nullopt;
  }
  return res->body;
}

std::string expand_url(std::string templ, const std::string& label) {
  const std::string key = "{label}";
  for (size_t pos; (pos = templ.find(key)) != std::string::npos;) templ.replace(pos, key.size(), label);
  return templ;
}

}  // namespace

std::string newform_label(const std::string& label) {
  static const std::regex re(R"(^(\d+)\.(\d+)\.(\d+|[a-z]+)\.([a-z]+)$)");
  std::smatch m;
  if (!std::regex_match(label, m, re)) {
    throw std::invalid_argument("'" + label + "' is not a newform label of the form N.k.c.x");
  }
  std::string orbit = m[3].str();
  if (std::isdigit(static_cast<unsigned char>(orbit[0]))) {
    long c = std::stol(orbit);
    if (c < 1) throw std::invalid_argument("character orbit index must be positive");
    std::string letters;
    for (--c; c >= 0; c = c / 26 - 1) letters.insert(letters.begin(), static_cast<char>('a' + c % 26));
    orbit = letters;
  }
  return m[1].str() + "." + m[2].str() + "." + orbit + "." + m[4].str();
}

QExpansion parse_coefficient_response(const std::string& body, const std::string& label) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw FetchParseError("response for " + label + " is not JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("data") || !doc["data"].is_array()) {
    throw FetchParseError("response for " + label + " lacks a data array");
  }
  if (doc["data"].empty()) throw FetchNotFound("label " + label + " not found");
  const auto& entry = doc["data"][0];
  if (!entry.contains("traces") || !entry["traces"].is_array()) {
    throw FetchParseError("response for " + label + " lacks traces");
  }
  std::vector<BigRational> coeffs;
  for (const auto& v : entry["traces"]) {
    if (!v.is_number_integer()) throw FetchParseError("non-integer trace in response for " + label);
    coeffs.emplace_back(BigInt(std::to_string(v.get<long long>())));
  }
  // Some responses list a(0) = 0 ahead of a(1) = 1.
  if (coeffs.size() >= 2 && coeffs[0].is_zero() && coeffs[1] == BigRational(1)) {
    coeffs.erase(coeffs.begin());
  }
  if (coeffs.empty() || !(coeffs[0] == BigRational(1))) {
    throw FetchParseError("response for " + label + " is not a normalized newform");
  }
  return QExpansion(std::move(coeffs));
}

FetchResult fetch_external_coefficients(const std::string& label_in, const RunConfig& cfg) {
  FetchResult out;
  out.label = newform_label(label_in);
  std::filesystem::path cached = cache_file(cfg, out.label);
  if (!cfg.offline) {
    std::string error;
    if (auto body = http_get(expand_url(cfg.fetch_url, out.label), &error)) {
      out.expansion = parse_coefficient_response(*body, out.label);
      out.source = "network";
      std::filesystem::create_directories(cfg.cache_dir);
      write_qexpansion_csv(out.expansion, cached);
      return out;
    }
    out.warnings.push_back("network unavailable (" + error + "); falling back to local data");
  }
  if (std::filesystem::exists(cached)) {
    out.expansion = read_qexpansion_csv(cached);
    out.source = "cache";
    return out;
  }
  if (!cfg.fixture_dir.empty()) {
    std::filesystem::path fixture = cfg.fixture_dir / (out.label + ".json");
    if (std::ifstream in(fixture); in) {
      std::stringstream ss;
      ss << in.rdbuf();
      out.expansion = parse_coefficient_response(ss.str(), out.label);
      out.source = "fixture";
      return out;
    }
  }
  throw FetchNotFound("no data for " + out.label +
                      (cfg.offline ? " in offline mode" : " from network, cache or fixtures"));
}

}  // namespace hypermod::cli
