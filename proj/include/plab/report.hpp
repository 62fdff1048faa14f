#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace plab::lab {

enum class Format { csv, json };

/// A report cell. Exact integers beyond int64 and all high-precision reals
/// are carried as decimal strings so nothing passes through a binary float.
class Cell {
 public:
  Cell() = default;
  Cell(std::int64_t v) : v_(v) {}
  Cell(int v) : v_(static_cast<std::int64_t>(v)) {}
  Cell(std::size_t v) : v_(static_cast<std::int64_t>(v)) {}
  Cell(bool v) : v_(v) {}
  Cell(std::string v) : v_(std::move(v)) {}
  Cell(const char* v) : v_(std::string(v)) {}

  bool is_null() const { return std::holds_alternative<std::monostate>(v_); }
  std::string text() const;
  const auto& raw() const { return v_; }

 private:
  std::variant<std::monostate, std::int64_t, bool, std::string> v_;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

using KeyValues = std::vector<std::pair<std::string, Cell>>;

struct Report {
  std::string command;
  KeyValues header;  // config, library version, precision
  std::vector<Table> tables;
  KeyValues summary;
  bool passed = true;

  Table& table(std::string name, std::vector<std::string> columns);
  void note(std::string key, Cell value) { summary.emplace_back(std::move(key), std::move(value)); }

  std::string render(Format format) const;
};

}  // namespace plab::lab
