// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

// Tabular and JSON emission with a reproducibility header.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace zenohol::cli {

using Json = nlohmann::ordered_json;

/// Shortest decimal that parses back to the same double.
std::string number(double v);

/// Resolved run configuration, echoed in every output in insertion order.
class Metadata {
 public:
  Metadata(std::string command);

  Metadata& add(const std::string& key, double v);
  Metadata& add(const std::string& key, long long v);
  Metadata& add(const std::string& key, int v) { return add(key, static_cast<long long>(v)); }
  Metadata& add(const std::string& key, const std::string& v);
  Metadata& add(const std::string& key, const char* v) { return add(key, std::string(v)); }

  /// "# key: value" lines.
  std::string csv_header() const;
  Json json() const;

 private:
  std::vector<std::pair<std::string, Json>> entries_;
};

class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  /// Cells are numbers, integers or strings; count must match the header.
  void add_row(std::vector<Json> cells);
  std::size_t rows() const { return rows_.size(); }

  std::string csv(const Metadata& meta) const;
  Json json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Json>> rows_;
};

/// {"meta": ..., <data fields>}
std::string render_json(const Metadata& meta, const Json& data);

}  // namespace zenohol::cli
