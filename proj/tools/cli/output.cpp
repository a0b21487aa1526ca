// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/output.hpp"

#include <charconv>
#include <stdexcept>

#include "zenohol/version.hpp"

namespace zenohol::cli {

namespace {

std::string cell_text(const Json& cell) {
  if (cell.is_number_float()) return number(cell.get<double>());
  if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
  if (cell.is_string()) {
    const auto s = cell.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return cell.dump();
}

}  // namespace

std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Metadata::Metadata(std::string command) {
  entries_.emplace_back("zenohol_version", Json(std::string(kVersion)));
  entries_.emplace_back("command", Json(std::move(command)));
}

Metadata& Metadata::add(const std::string& key, double v) {
  entries_.emplace_back(key, Json(v));
  return *this;
}

Metadata& Metadata::add(const std::string& key, long long v) {
  entries_.emplace_back(key, Json(v));
  return *this;
}

Metadata& Metadata::add(const std::string& key, const std::string& v) {
  entries_.emplace_back(key, Json(v));
  return *this;
}

std::string Metadata::csv_header() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : cell_text(value)) + "\n";
  }
  return out;
}

Json Metadata::json() const {
  Json j = Json::object();
  for (const auto& [key, value] : entries_) j[key] = value;
  return j;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Json> cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("table row width mismatch");
  rows_.push_back(std::move(cells));
}

std::string Table::csv(const Metadata& meta) const {
  std::string out = meta.csv_header();
  for (std::size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + columns_[i];
  out += "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell_text(row[i]);
    out += "\n";
  }
  return out;
}

Json Table::json() const {
  Json rows = Json::array();
  for (const auto& row : rows_) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  return Json{{"columns", columns_}, {"rows", std::move(rows)}};
}

std::string render_json(const Metadata& meta, const Json& data) {
  Json out = Json::object();
  out["meta"] = meta.json();
  for (const auto& [key, value] : data.items()) out[key] = value;
  return out.dump(2) + "\n";
}

}  // namespace zenohol::cli
