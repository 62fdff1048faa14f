#include "plab/report.hpp"

#include <json.hpp>

#include <sstream>

namespace plab::lab {
namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return nullptr;
        else
          return v;
      },
      cell.raw());
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string Cell::text() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return "";
        else if constexpr (std::is_same_v<T, bool>)
          return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v);
        else
          return v;
      },
      v_);
}

Table& Report::table(std::string name, std::vector<std::string> columns) {
  tables.push_back(Table{std::move(name), std::move(columns), {}});
  return tables.back();
}

std::string Report::render(Format format) const {
  if (format == Format::json) {
    Json doc;
    doc["command"] = command;
    Json head = Json::object();
    for (const auto& [k, v] : header) head[k] = to_json(v);
    doc["header"] = head;
    Json tabs = Json::array();
    for (const auto& t : tables) {
      Json jt;
      jt["name"] = t.name;
      jt["columns"] = t.columns;
      Json rows = Json::array();
      for (const auto& row : t.rows) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(to_json(c));
        rows.push_back(std::move(r));
      }
      jt["rows"] = std::move(rows);
      tabs.push_back(std::move(jt));
    }
    doc["tables"] = std::move(tabs);
    Json summ = Json::object();
    for (const auto& [k, v] : summary) summ[k] = to_json(v);
    doc["summary"] = summ;
    doc["passed"] = passed;
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "# command=" << command << '\n';
  for (const auto& [k, v] : header) os << "# " << k << '=' << v.text() << '\n';
  for (const auto& t : tables) {
    os << "# table=" << t.name << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i].text());
      os << '\n';
    }
  }
  for (const auto& [k, v] : summary) os << "# summary " << k << '=' << v.text() << '\n';
  os << "# passed=" << (passed ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace plab::lab
