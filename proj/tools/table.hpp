#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsob::cli {

/// Report rows of preformatted cells. JSON keeps every cell as a string so
/// both formats carry identical text (40-digit reals survive unchanged).
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
};

void write_csv(std::ostream& os, const Table& t);
/// {"command": ..., "columns": [...], "rows": [{col: value, ...}, ...], "status": ...}
void write_json(std::ostream& os, const std::string& command, const Table& t, const std::string& status);

}  // namespace hsob::cli
