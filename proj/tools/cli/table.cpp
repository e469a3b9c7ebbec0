#include "cli/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "cli/version.hpp"

namespace matchtime::cli {

std::string format_number(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 10);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) {
        return v;
      }
      std::string quoted = "\"";
      for (char c : v) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

Json json_value(const Cell& cell) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(std::int64_t v) const { return v; }
    Json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    Json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table, const Metadata& meta) {
  out << "# tool: " << kToolName << ' ' << kVersion << '\n';
  out << "# command: " << meta.command << '\n';
  out << "# seed: " << meta.seed << '\n';
  out << "# config: " << meta.config.dump() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table, const Metadata& meta) {
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["command"] = meta.command;
  doc["seed"] = meta.seed;
  doc["config"] = meta.config;
  doc["columns"] = table.columns;
  auto rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      obj[table.columns[i]] = json_value(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace matchtime::cli
