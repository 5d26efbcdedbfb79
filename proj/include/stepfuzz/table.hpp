#pragma once

// Reference tables: rows of (profile, named decimal values) used to replay a
// printed result table through the lattice code and to diff computed lattices
// against it. Values are stored as decimal strings in JSON ("0.062"), parsed
// as exact rationals; JSON numbers would lose the printed-decimal semantics.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stepfuzz/error.hpp"
#include "stepfuzz/ingest.hpp"
#include "stepfuzz/label_scale.hpp"
#include "stepfuzz/lattice.hpp"
#include "stepfuzz/rational.hpp"

namespace stepfuzz {

struct table_row {
  std::vector<std::string> labels;               // profile, one label name per step
  std::vector<std::pair<std::string, rational>> values;  // column -> exact decimal

  const rational* value(std::string_view column) const noexcept {
    for (const auto& [col, v] : values)
      if (col == column) return &v;
    return nullptr;
  }

  friend bool operator==(const table_row&, const table_row&) = default;
};

struct reference_table {
  std::string name;
  std::vector<std::string> scale_names;
  std::vector<std::string> columns;
  std::vector<table_row> rows;

  int step_count() const noexcept {
    return rows.empty() ? 0 : static_cast<int>(rows.front().labels.size());
  }

  friend bool operator==(const reference_table&, const reference_table&) = default;
};

inline reference_table parse_reference_table(std::string_view text) {
  detail::ordered_json doc;
  try {
    doc = detail::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw parse_error("JSON syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what(),
                      line, col);
  }
  if (!doc.is_object()) throw validation_error("table: top level must be an object");
  detail::check_keys(doc, {"name", "scale", "columns", "rows"}, {}, "table");
  reference_table t;
  t.name = detail::get_string(doc, "name", "table");
  t.scale_names = detail::get_scale_names(doc, "table");
  const auto& cols = doc.at("columns");
  if (!cols.is_array() || cols.empty())
    throw validation_error("table: \"columns\" must be a non-empty array");
  for (const auto& c : cols) {
    if (!c.is_string()) throw validation_error("table: column names must be strings");
    t.columns.push_back(c.get<std::string>());
  }
  const auto& rows = doc.at("rows");
  if (!rows.is_array() || rows.empty()) throw validation_error("table: no rows");
  for (const auto& r : rows) {
    const std::string where = "table row " + std::to_string(t.rows.size() + 1);
    if (!r.is_object()) throw validation_error(where + ": must be an object");
    std::vector<std::string> required = {"profile"};
    required.insert(required.end(), t.columns.begin(), t.columns.end());
    detail::check_keys(r, required, {}, where);
    table_row row;
    const auto& prof = r.at("profile");
    if (!prof.is_array() || prof.empty())
      throw validation_error(where + ": \"profile\" must be a non-empty array of labels");
    for (const auto& l : prof) {
      if (!l.is_string()) throw validation_error(where + ": profile labels must be strings");
      const auto name = l.get<std::string>();
      if (std::find(t.scale_names.begin(), t.scale_names.end(), name) == t.scale_names.end())
        throw validation_error(where + ": unknown label \"" + name + "\"");
      row.labels.push_back(name);
    }
    if (!t.rows.empty() && row.labels.size() != t.rows.front().labels.size())
      throw validation_error(where + ": inconsistent profile length");
    for (const auto& prev : t.rows)
      if (prev.labels == row.labels) {
        std::string joined;
        for (const auto& l : row.labels) joined += (joined.empty() ? "" : ",") + l;
        throw validation_error(where + ": duplicate profile (" + joined + ")");
      }
    for (const auto& col : t.columns) {
      const auto& v = r.at(col);
      if (!v.is_string())
        throw validation_error(where + ": value \"" + col +
                               "\" must be a decimal string like \"0.062\"");
      try {
        row.values.emplace_back(col, rational::from_decimal(v.get<std::string>()));
      } catch (const parse_error& e) {
        throw validation_error(where + ", column \"" + col + "\": " + e.what());
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::string to_json(const reference_table& t, int indent = 2) {
  detail::ordered_json doc;
  doc["name"] = t.name;
  doc["scale"] = t.scale_names;
  doc["columns"] = t.columns;
  auto rows = detail::ordered_json::array();
  for (const auto& row : t.rows) {
    detail::ordered_json r;
    r["profile"] = row.labels;
    for (const auto& [col, v] : row.values) r[col] = format_decimal_half_even(v, 3);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(indent) + "\n";
}

/// Rows of one column as (profile, value) pairs, ready for lattice injection.
inline std::vector<std::pair<profile, rational>> table_column(const reference_table& t,
                                                              const label_scale& scale,
                                                              std::string_view column) {
  if (t.scale_names != scale.names())
    throw validation_error("table \"" + t.name + "\" is over a different scale");
  std::vector<std::pair<profile, rational>> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    const rational* v = row.value(column);
    if (!v)
      throw validation_error("table \"" + t.name + "\" has no column \"" + std::string(column) +
                             "\"");
    std::vector<int> idx;
    idx.reserve(row.labels.size());
    for (const auto& name : row.labels) idx.push_back(scale.find(name)->index);
    out.emplace_back(profile(std::move(idx)), *v);
  }
  return out;
}

/// Replays a table's membership column through the normal lattice pipeline.
inline group_assessment assess_from_table(const reference_table& t, const label_scale& scale,
                                          std::string_view membership_column = "m") {
  const auto rows = table_column(t, scale, membership_column);
  return assess_from_memberships(t.name, scale, t.step_count(), rows);
}

}  // namespace stepfuzz
