#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace freudlab::cli {

/// A rectangular result: every cell is a decimal string or absent.
struct Table {
  std::vector<std::pair<std::string, std::optional<std::string>>> meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<std::string>>> rows;

  void add_row(std::vector<std::optional<std::string>> row) { rows.push_back(std::move(row)); }
};

/// Header row then one line per row; absent cells are empty. Cells holding
/// ',', '"' or a newline are quoted.
void write_csv(const Table& t, std::ostream& out);

/// {"meta": {...}, "rows": [{column: string or null}, ...]}.
void write_json(const Table& t, std::ostream& out);

}  // namespace freudlab::cli
