#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace matchtime::cli {

using Json = nlohmann::ordered_json;

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Provenance embedded in every output.
struct Metadata {
  std::string command;
  std::uint64_t seed = 0;
  Json config = Json::object();
};

// Decimal, 10 significant digits, locale-independent. NaN prints as "nan".
std::string format_number(double value);

// '#'-prefixed metadata lines, a header row, then one line per row.
void write_csv(std::ostream& out, const Table& table, const Metadata& meta);

// {"tool", "version", "command", "seed", "config", "columns", "rows": [{...}]}.
void write_json(std::ostream& out, const Table& table, const Metadata& meta);

}  // namespace matchtime::cli
