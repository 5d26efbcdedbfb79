#pragma once

// Table rendering for assessments (markdown, CSV, JSON) with banker's-rounded
// display values, plus a diff harness that classifies mismatches against a
// reference table as rounding artifacts or real conflicts.

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stepfuzz/combine.hpp"
#include "stepfuzz/error.hpp"
#include "stepfuzz/lattice.hpp"
#include "stepfuzz/rational.hpp"
#include "stepfuzz/table.hpp"

namespace stepfuzz {

enum class report_format { markdown, csv, json };
enum class rounding_mode { half_even, exact };

struct report_config {
  report_format format = report_format::markdown;
  int decimals = 3;
  bool include_zero_rows = false;
  rounding_mode rounding = rounding_mode::half_even;
};

namespace detail {

inline std::vector<std::string> step_headers(std::span<const group_assessment> groups) {
  for (const auto& g : groups) {
    if (static_cast<int>(g.steps.size()) == g.step_count) {
      std::vector<std::string> names;
      for (const auto& s : g.steps) names.push_back(s.step_name);
      return names;
    }
  }
  std::vector<std::string> names;
  for (int i = 1; i <= groups.front().step_count; ++i) names.push_back("step-" + std::to_string(i));
  return names;
}

struct lattice_grid {
  std::vector<std::string> headers;                    // step names then value columns
  int step_count = 0;
  std::vector<std::vector<std::string>> label_cells;   // per kept row
  std::vector<std::vector<rational>> value_cells;      // per kept row
};

inline lattice_grid build_grid(std::span<const group_assessment> groups,
                               const combined_assessment* combined, bool include_zero_rows) {
  if (groups.empty()) throw domain_error("render_lattice: need at least one assessment");
  const auto& first = groups.front();
  for (const auto& g : groups) {
    if (g.scale != first.scale) throw domain_error("render_lattice: mixed scales");
    if (g.step_count != first.step_count) throw domain_error("render_lattice: mixed step counts");
  }
  if (combined && (combined->scale != first.scale || combined->step_count != first.step_count))
    throw domain_error("render_lattice: combined assessment does not match the groups");

  lattice_grid grid;
  grid.step_count = first.step_count;
  grid.headers = step_headers(groups);
  for (const auto& g : groups) {
    grid.headers.push_back("m(" + g.group_name + ")");
    grid.headers.push_back("r(" + g.group_name + ")");
  }
  if (combined) {
    grid.headers.push_back("f");
    grid.headers.push_back("r");
  }
  for (std::size_t rank = 0; rank < first.lattice_size; ++rank) {
    std::vector<rational> values;
    for (const auto& g : groups) {
      values.push_back(g.memberships[rank]);
      values.push_back(g.possibilities[rank]);
    }
    if (combined) {
      values.push_back(combined->pseudo_frequencies[rank]);
      values.push_back(combined->combined_possibilities[rank]);
    }
    if (!include_zero_rows) {
      bool any_nonzero = false;
      for (const auto& v : values) any_nonzero = any_nonzero || !v.is_zero();
      if (!any_nonzero) continue;
    }
    grid.label_cells.push_back(
        profile::from_rank(rank, first.scale.size(), first.step_count).names(first.scale));
    grid.value_cells.push_back(std::move(values));
  }
  return grid;
}

inline std::string format_value(const rational& v, const report_config& config) {
  return config.rounding == rounding_mode::exact ? v.to_string()
                                                 : format_decimal_half_even(v, config.decimals);
}

}  // namespace detail

/// One row per profile (zero rows filtered on exact values unless configured
/// otherwise), sorted in step-major lexicographic scale order. Markdown and CSV
/// show rounded values; JSON additionally carries exact num/den per cell.
inline std::string render_lattice(std::span<const group_assessment> groups,
                                  const combined_assessment* combined,
                                  const report_config& config) {
  if (config.decimals < 1) throw domain_error("render_lattice: decimals must be >= 1");
  const auto grid = detail::build_grid(groups, combined, config.include_zero_rows);
  std::string out;
  switch (config.format) {
    case report_format::markdown: {
      out = "|";
      for (const auto& h : grid.headers) out += " " + h + " |";
      out += "\n|";
      for (std::size_t i = 0; i < grid.headers.size(); ++i) out += " --- |";
      out += "\n";
      for (std::size_t r = 0; r < grid.label_cells.size(); ++r) {
        out += "|";
        for (const auto& l : grid.label_cells[r]) out += " " + l + " |";
        for (const auto& v : grid.value_cells[r]) out += " " + detail::format_value(v, config) + " |";
        out += "\n";
      }
      return out;
    }
    case report_format::csv: {
      for (std::size_t i = 0; i < grid.headers.size(); ++i)
        out += (i ? "," : "") + grid.headers[i];
      out += "\n";
      for (std::size_t r = 0; r < grid.label_cells.size(); ++r) {
        std::string line;
        for (const auto& l : grid.label_cells[r]) line += (line.empty() ? "" : ",") + l;
        for (const auto& v : grid.value_cells[r]) line += "," + detail::format_value(v, config);
        out += line + "\n";
      }
      return out;
    }
    case report_format::json: {
      detail::ordered_json doc;
      doc["scale"] = groups.front().scale.names();
      doc["steps"] = std::vector<std::string>(grid.headers.begin(),
                                              grid.headers.begin() + grid.step_count);
      std::vector<std::string> group_names;
      for (const auto& g : groups) group_names.push_back(g.group_name);
      doc["groups"] = group_names;
      doc["combined"] = combined != nullptr;
      doc["decimals"] = config.decimals;
      auto rows = detail::ordered_json::array();
      for (std::size_t r = 0; r < grid.label_cells.size(); ++r) {
        detail::ordered_json row;
        row["profile"] = grid.label_cells[r];
        detail::ordered_json values;
        for (std::size_t c = 0; c < grid.value_cells[r].size(); ++c) {
          const auto& v = grid.value_cells[r][c];
          detail::ordered_json cell;
          cell["num"] = v.num();
          cell["den"] = v.den();
          cell["rounded"] = format_decimal_half_even(v, config.decimals);
          values[grid.headers[static_cast<std::size_t>(grid.step_count) + c]] = std::move(cell);
        }
        row["values"] = std::move(values);
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      return doc.dump(2) + "\n";
    }
  }
  throw domain_error("render_lattice: unknown format");
}

enum class diff_kind { match, rounding, conflict };

struct cell_diff {
  std::vector<std::string> profile_labels;
  std::string column;
  rational computed;
  rational printed;
  double abs_difference = 0.0;
  diff_kind kind = diff_kind::match;
};

struct table_diff {
  std::vector<cell_diff> cells;
  std::size_t matches = 0;
  std::size_t roundings = 0;
  std::size_t conflicts = 0;

  std::vector<cell_diff> conflicts_in(std::string_view column) const {
    std::vector<cell_diff> out;
    for (const auto& c : cells)
      if (c.kind == diff_kind::conflict && c.column == column) out.push_back(c);
    return out;
  }
};

namespace detail {

/// match: identical at the fixture's displayed precision; rounding: within
/// tolerance of the exact value; conflict: everything else.
inline void classify(table_diff& diff, std::vector<std::string> labels, const std::string& column,
                     const rational& computed, const rational& printed, double tolerance,
                     int decimals) {
  cell_diff cell{std::move(labels), column, computed, printed};
  cell.abs_difference = std::fabs(computed.to_double() - printed.to_double());
  if (format_decimal_half_even(computed, decimals) == format_decimal_half_even(printed, decimals))
    cell.kind = diff_kind::match;
  else if (cell.abs_difference <= tolerance)
    cell.kind = diff_kind::rounding;
  else
    cell.kind = diff_kind::conflict;
  switch (cell.kind) {
    case diff_kind::match: ++diff.matches; break;
    case diff_kind::rounding: ++diff.roundings; break;
    case diff_kind::conflict: ++diff.conflicts; break;
  }
  diff.cells.push_back(std::move(cell));
}

}  // namespace detail

/// Compares a computed lattice against a reference table. Column "m" maps to
/// membership degrees, "r" to possibilities; only the fixture's rows are compared.
inline table_diff diff_against_fixture(const group_assessment& a, const reference_table& t,
                                       double tolerance = 0.01, int decimals = 3) {
  if (t.scale_names != a.scale.names())
    throw domain_error("diff_against_fixture: table \"" + t.name + "\" uses a different scale");
  table_diff diff;
  for (const auto& row : t.rows) {
    std::vector<int> idx;
    for (const auto& name : row.labels) idx.push_back(a.scale.find(name)->index);
    const profile p(std::move(idx));
    for (const auto& [column, printed] : row.values) {
      const rational* computed = nullptr;
      if (column == "m")
        computed = &a.membership(p);
      else if (column == "r")
        computed = &a.possibility(p);
      else
        continue;  // columns for other assessments (e.g. f) are not this lattice's
      detail::classify(diff, row.labels, column, *computed, printed, tolerance, decimals);
    }
  }
  return diff;
}

/// Combined-lattice variant: column "f" maps to pseudo-frequencies, "r" to
/// combined possibilities.
inline table_diff diff_against_fixture(const combined_assessment& c, const reference_table& t,
                                       double tolerance = 0.01, int decimals = 3) {
  if (t.scale_names != c.scale.names())
    throw domain_error("diff_against_fixture: table \"" + t.name + "\" uses a different scale");
  table_diff diff;
  for (const auto& row : t.rows) {
    std::vector<int> idx;
    for (const auto& name : row.labels) idx.push_back(c.scale.find(name)->index);
    const profile p(std::move(idx));
    for (const auto& [column, printed] : row.values) {
      const rational* computed = nullptr;
      if (column == "f")
        computed = &c.pseudo_frequency(p);
      else if (column == "r")
        computed = &c.possibility(p);
      else
        continue;
      detail::classify(diff, row.labels, column, *computed, printed, tolerance, decimals);
    }
  }
  return diff;
}

}  // namespace stepfuzz
