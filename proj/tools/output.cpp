#include "output.hpp"

#include <nlohmann/json.hpp>

namespace freudlab::cli {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) out << ',';
    out << csv_cell(t.header[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (row[i]) out << csv_cell(*row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& t, std::ostream& out) {
  // ordered_json keeps columns in header order so output is stable.
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) {
    if (v) {
      meta[k] = *v;
    } else {
      meta[k] = nullptr;
    }
  }
  doc["meta"] = meta;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      if (i < row.size() && row[i]) {
        r[t.header[i]] = *row[i];
      } else {
        r[t.header[i]] = nullptr;
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace freudlab::cli
