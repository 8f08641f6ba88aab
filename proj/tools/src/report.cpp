#include "hypermod/cli/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypermod::cli {

namespace {

std::string cell(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  return v.dump();
}

std::vector<std::string> columns_of(const std::vector<nlohmann::ordered_json>& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  }
  return cols;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw std::invalid_argument("unknown format '" + name + "' (text, json, csv)");
}

std::string decimal(const Real& x, int digits) {
  if (!x.is_finite()) return "nan";
  return x.to_string(digits);
}

std::string decimal(long x) { return std::to_string(x); }

std::string render_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["exit_code"] = std::to_string(report.exit_code);
  doc["summary"] = report.summary;
  doc["rows"] = report.rows;
  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  std::vector<std::string> cols = columns_of(report.rows);
  std::vector<size_t> width(cols.size());
  for (size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& row : report.rows) {
      if (row.contains(cols[i])) width[i] = std::max(width[i], cell(row[cols[i]]).size());
    }
  }
  std::ostringstream out;
  out << "# " << report.command << "\n";
  auto line = [&](auto get) {
    for (size_t i = 0; i < cols.size(); ++i) {
      std::string s = get(i);
      out << s;
      if (i + 1 < cols.size()) out << std::string(width[i] - s.size() + 2, ' ');
    }
    out << "\n";
  };
  if (!cols.empty()) {
    line([&](size_t i) { return cols[i]; });
    for (const auto& row : report.rows) {
      line([&](size_t i) { return row.contains(cols[i]) ? cell(row[cols[i]]) : std::string(); });
    }
  }
  for (const auto& [key, value] : report.summary.items()) {
    out << key << ": " << cell(value) << "\n";
  }
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string render_csv(const Report& report) {
  std::vector<std::string> cols = columns_of(report.rows);
  std::ostringstream out;
  for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cols[i]);
  out << "\n";
  for (const auto& row : report.rows) {
    for (size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "," : "") << csv_escape(row.contains(cols[i]) ? cell(row[cols[i]]) : "");
    }
    out << "\n";
  }
  return out.str();
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::kText: return render_text(report);
    case Format::kJson: return render_json(report);
    case Format::kCsv: return render_csv(report);
  }
  return {};
}

}  // namespace hypermod::cli
