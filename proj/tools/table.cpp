#include "table.hpp"

#include <stdexcept>

#include "json.hpp"

namespace hsob::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

void Table::add(std::vector<std::string> row) {
  if (row.size() != header.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& os, const Table& t) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void write_json(std::ostream& os, const std::string& command, const Table& t, const std::string& status) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["columns"] = t.header;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json o;
    for (size_t i = 0; i < r.size(); ++i) o[t.header[i]] = r[i];
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  j["status"] = status;
  os << j.dump(2) << "\n";
}

}  // namespace hsob::cli
