#pragma once

// Cohort data files -> step counts. Two shapes are accepted: pre-aggregated
// per-label count matrices, and raw per-solver records that get aggregated by
// mapping each solved-count onto the label scale. Both exist as JSON and CSV;
// the schemas are strict (unknown fields rejected, labels must belong to the
// declared scale) and errors carry the offending record or position.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stepfuzz/error.hpp"
#include "stepfuzz/label_scale.hpp"
#include "stepfuzz/membership.hpp"

namespace stepfuzz {

enum class dataset_kind { counts, per_solver };
enum class dataset_format { json, csv };

struct counts_row {
  std::string step_name;
  std::vector<std::int64_t> counts;  // by scale label index

  friend bool operator==(const counts_row&, const counts_row&) = default;
};

struct solver_record {
  std::string solver;
  std::string step;
  std::int64_t solved = 0;
  std::int64_t total = 0;

  friend bool operator==(const solver_record&, const solver_record&) = default;
};

struct cohort_dataset {
  std::string group_name;
  std::vector<std::string> scale_names;
  dataset_kind kind = dataset_kind::counts;
  std::string notes;  // optional free text, e.g. how derived counts were chosen

  // counts kind
  std::int64_t cohort_size = 0;
  std::vector<counts_row> rows;

  // per_solver kind
  std::vector<solver_record> records;

  friend bool operator==(const cohort_dataset&, const cohort_dataset&) = default;
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline void check_keys(const ordered_json& obj, const std::vector<std::string>& required,
                       const std::vector<std::string>& optional, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end())
      throw validation_error(where + ": unknown field \"" + key + "\"");
  }
  for (const auto& key : required)
    if (!obj.contains(key)) throw validation_error(where + ": missing field \"" + key + "\"");
}

inline std::string get_string(const ordered_json& obj, const std::string& key,
                              const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_string()) throw validation_error(where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

inline std::int64_t get_int(const ordered_json& obj, const std::string& key,
                            const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer())
    throw validation_error(where + ": field \"" + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

inline std::vector<std::string> get_scale_names(const ordered_json& obj, const std::string& where) {
  const auto& v = obj.at("scale");
  if (!v.is_array() || v.size() < 2)
    throw validation_error(where + ": \"scale\" must be an array of at least 2 label names");
  std::vector<std::string> names;
  for (const auto& n : v) {
    if (!n.is_string()) throw validation_error(where + ": scale entries must be strings");
    names.push_back(n.get<std::string>());
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j])
        throw validation_error(where + ": duplicate scale label \"" + names[i] + "\"");
  return names;
}

inline cohort_dataset parse_dataset_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw parse_error("JSON syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what(),
                      line, col);
  }
  if (!doc.is_object()) throw validation_error("dataset: top level must be an object");

  const bool is_counts = doc.contains("steps") || doc.contains("cohort_size");
  cohort_dataset d;
  if (is_counts) {
    check_keys(doc, {"group", "scale", "cohort_size", "steps"}, {"notes"}, "dataset");
    d.kind = dataset_kind::counts;
    d.group_name = get_string(doc, "group", "dataset");
    d.scale_names = get_scale_names(doc, "dataset");
    d.cohort_size = get_int(doc, "cohort_size", "dataset");
    if (d.cohort_size < 1) throw validation_error("dataset: cohort_size must be positive");
    if (doc.contains("notes")) d.notes = get_string(doc, "notes", "dataset");
    const auto& steps = doc.at("steps");
    if (!steps.is_array()) throw validation_error("dataset: \"steps\" must be an array");
    if (steps.empty()) throw validation_error("dataset: no records");
    for (const auto& s : steps) {
      const std::string where = "step " + std::to_string(d.rows.size() + 1);
      if (!s.is_object()) throw validation_error(where + ": must be an object");
      check_keys(s, {"name", "counts"}, {}, where);
      counts_row row;
      row.step_name = get_string(s, "name", where);
      for (const auto& r : d.rows)
        if (r.step_name == row.step_name)
          throw validation_error(where + ": duplicate step name \"" + row.step_name + "\"");
      const auto& counts = s.at("counts");
      if (!counts.is_object())
        throw validation_error(where + ": \"counts\" must map labels to integers");
      row.counts.assign(d.scale_names.size(), 0);
      std::set<std::string> seen;
      for (const auto& [labelname, value] : counts.items()) {
        auto it = std::find(d.scale_names.begin(), d.scale_names.end(), labelname);
        if (it == d.scale_names.end())
          throw validation_error("step \"" + row.step_name + "\": unknown label \"" + labelname +
                                 "\"");
        if (!value.is_number_integer())
          throw validation_error("step \"" + row.step_name + "\": count for \"" + labelname +
                                 "\" must be an integer");
        const auto c = value.get<std::int64_t>();
        if (c < 0)
          throw validation_error("step \"" + row.step_name + "\": negative count for \"" +
                                 labelname + "\"");
        row.counts[static_cast<std::size_t>(it - d.scale_names.begin())] = c;
        seen.insert(labelname);
      }
      for (const auto& name : d.scale_names)
        if (!seen.count(name))
          throw validation_error("step \"" + row.step_name + "\": missing count for label \"" +
                                 name + "\"");
      d.rows.push_back(std::move(row));
    }
  } else {
    check_keys(doc, {"group", "scale", "total_problems", "records"}, {"notes"}, "dataset");
    d.kind = dataset_kind::per_solver;
    d.group_name = get_string(doc, "group", "dataset");
    d.scale_names = get_scale_names(doc, "dataset");
    const auto total = get_int(doc, "total_problems", "dataset");
    if (total < 1) throw validation_error("dataset: total_problems must be positive");
    if (doc.contains("notes")) d.notes = get_string(doc, "notes", "dataset");
    const auto& records = doc.at("records");
    if (!records.is_array()) throw validation_error("dataset: \"records\" must be an array");
    if (records.empty()) throw validation_error("dataset: no records");
    for (const auto& r : records) {
      const std::string where = "record " + std::to_string(d.records.size() + 1);
      if (!r.is_object()) throw validation_error(where + ": must be an object");
      check_keys(r, {"solver", "step", "solved"}, {}, where);
      solver_record rec;
      rec.solver = get_string(r, "solver", where);
      rec.step = get_string(r, "step", where);
      rec.solved = get_int(r, "solved", where);
      rec.total = total;
      if (rec.solved < 0 || rec.solved > rec.total)
        throw validation_error(where + " (solver \"" + rec.solver + "\", step \"" + rec.step +
                               "\"): solved " + std::to_string(rec.solved) + " outside [0, " +
                               std::to_string(rec.total) + "]");
      for (const auto& prev : d.records)
        if (prev.solver == rec.solver && prev.step == rec.step)
          throw validation_error(where + ": duplicate record for solver \"" + rec.solver +
                                 "\", step \"" + rec.step + "\"");
      d.records.push_back(std::move(rec));
    }
  }
  return d;
}

inline std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else if (c == '"') {
      throw parse_error("line " + std::to_string(line_no) + ": quoted CSV fields not supported",
                        line_no, 0);
    } else {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

inline std::int64_t parse_csv_int(const std::string& field, std::size_t line_no) {
  if (field.empty()) throw parse_error("line " + std::to_string(line_no) + ": empty numeric field",
                                       line_no, 0);
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(field, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != field.size())
    throw parse_error("line " + std::to_string(line_no) + ": not an integer: \"" + field + "\"",
                      line_no, 0);
  return value;
}

inline cohort_dataset parse_dataset_csv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t line_no = 1;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      if (!current.empty()) lines.emplace_back(line_no, current);
      current.clear();
      ++line_no;
    } else {
      current += c;
    }
  }
  if (!current.empty() && current.back() == '\r') current.pop_back();
  if (!current.empty()) lines.emplace_back(line_no, current);
  if (lines.empty()) throw parse_error("empty CSV input", 1, 1);

  const auto header = split_csv_line(lines[0].second, lines[0].first);
  cohort_dataset d;
  if (header.size() >= 3 && header[0] == "step") {
    d.kind = dataset_kind::counts;
    d.scale_names.assign(header.begin() + 1, header.end());
    if (d.scale_names.size() < 2)
      throw parse_error("line 1: counts header needs at least 2 labels", 1, 0);
    for (std::size_t i = 0; i < d.scale_names.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (d.scale_names[i] == d.scale_names[j])
          throw validation_error("header: duplicate scale label \"" + d.scale_names[i] + "\"");
    if (lines.size() == 1) throw validation_error("dataset: no records");
    for (std::size_t li = 1; li < lines.size(); ++li) {
      const auto fields = split_csv_line(lines[li].second, lines[li].first);
      if (fields.size() != header.size())
        throw parse_error("line " + std::to_string(lines[li].first) + ": expected " +
                              std::to_string(header.size()) + " fields, got " +
                              std::to_string(fields.size()),
                          lines[li].first, 0);
      counts_row row;
      row.step_name = fields[0];
      for (const auto& r : d.rows)
        if (r.step_name == row.step_name)
          throw validation_error("line " + std::to_string(lines[li].first) +
                                 ": duplicate step name \"" + row.step_name + "\"");
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto c = parse_csv_int(fields[i], lines[li].first);
        if (c < 0)
          throw validation_error("step \"" + row.step_name + "\": negative count for \"" +
                                 d.scale_names[i - 1] + "\"");
        row.counts.push_back(c);
      }
      d.rows.push_back(std::move(row));
    }
    std::int64_t sum = 0;
    for (auto c : d.rows.front().counts) sum += c;
    d.cohort_size = sum;
    if (d.cohort_size < 1) throw validation_error("dataset: cohort size must be positive");
  } else if (header == std::vector<std::string>{"solver", "step", "solved", "total"}) {
    d.kind = dataset_kind::per_solver;
    if (lines.size() == 1) throw validation_error("dataset: no records");
    for (std::size_t li = 1; li < lines.size(); ++li) {
      const auto fields = split_csv_line(lines[li].second, lines[li].first);
      if (fields.size() != 4)
        throw parse_error("line " + std::to_string(lines[li].first) + ": expected 4 fields",
                          lines[li].first, 0);
      solver_record rec{fields[0], fields[1], parse_csv_int(fields[2], lines[li].first),
                        parse_csv_int(fields[3], lines[li].first)};
      if (rec.total < 1)
        throw validation_error("line " + std::to_string(lines[li].first) +
                               ": total must be positive");
      if (rec.solved < 0 || rec.solved > rec.total)
        throw validation_error("line " + std::to_string(lines[li].first) + " (solver \"" +
                               rec.solver + "\", step \"" + rec.step + "\"): solved " +
                               std::to_string(rec.solved) + " outside [0, " +
                               std::to_string(rec.total) + "]");
      for (const auto& prev : d.records)
        if (prev.solver == rec.solver && prev.step == rec.step)
          throw validation_error("line " + std::to_string(lines[li].first) +
                                 ": duplicate record for solver \"" + rec.solver + "\", step \"" +
                                 rec.step + "\"");
      d.records.push_back(std::move(rec));
    }
    for (const auto& rec : d.records)
      for (const auto& other : d.records)
        if (rec.step == other.step && rec.total != other.total)
          throw validation_error("step \"" + rec.step + "\": inconsistent totals " +
                                 std::to_string(rec.total) + " vs " + std::to_string(other.total));
    d.scale_names = default_scale().names();
  } else {
    throw parse_error("line 1: unrecognized CSV header (want \"step,<labels...>\" or "
                      "\"solver,step,solved,total\")",
                      1, 1);
  }
  return d;
}

}  // namespace detail

inline cohort_dataset parse_dataset(std::string_view text, dataset_format format) {
  return format == dataset_format::json ? detail::parse_dataset_json(text)
                                        : detail::parse_dataset_csv(text);
}

inline std::string to_json(const cohort_dataset& d, int indent = 2) {
  detail::ordered_json doc;
  doc["group"] = d.group_name;
  doc["scale"] = d.scale_names;
  if (d.kind == dataset_kind::counts) {
    doc["cohort_size"] = d.cohort_size;
    auto steps = detail::ordered_json::array();
    for (const auto& row : d.rows) {
      detail::ordered_json s;
      s["name"] = row.step_name;
      detail::ordered_json counts;
      for (std::size_t i = 0; i < d.scale_names.size(); ++i)
        counts[d.scale_names[i]] = i < row.counts.size() ? row.counts[i] : 0;
      s["counts"] = std::move(counts);
      steps.push_back(std::move(s));
    }
    doc["steps"] = std::move(steps);
  } else {
    std::int64_t total = d.records.empty() ? 1 : d.records.front().total;
    for (const auto& r : d.records)
      if (r.total != total)
        throw validation_error("to_json: per-solver records with mixed totals cannot be "
                               "serialized to the JSON schema");
    doc["total_problems"] = total;
    auto records = detail::ordered_json::array();
    for (const auto& r : d.records) {
      detail::ordered_json rec;
      rec["solver"] = r.solver;
      rec["step"] = r.step;
      rec["solved"] = r.solved;
      records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
  }
  if (!d.notes.empty()) doc["notes"] = d.notes;
  return doc.dump(indent) + "\n";
}

inline std::string to_csv(const cohort_dataset& d) {
  std::string out;
  if (d.kind == dataset_kind::counts) {
    out = "step";
    for (const auto& n : d.scale_names) out += "," + n;
    out += "\n";
    for (const auto& row : d.rows) {
      out += row.step_name;
      for (auto c : row.counts) out += "," + std::to_string(c);
      out += "\n";
    }
  } else {
    out = "solver,step,solved,total\n";
    for (const auto& r : d.records)
      out += r.solver + "," + r.step + "," + std::to_string(r.solved) + "," +
             std::to_string(r.total) + "\n";
  }
  return out;
}

/// Declared step order: counts rows as listed, per-solver steps in first-seen order.
inline std::vector<std::string> step_names_of(const cohort_dataset& d) {
  std::vector<std::string> names;
  if (d.kind == dataset_kind::counts) {
    for (const auto& row : d.rows) names.push_back(row.step_name);
  } else {
    for (const auto& r : d.records)
      if (std::find(names.begin(), names.end(), r.step) == names.end()) names.push_back(r.step);
  }
  return names;
}

/// Aggregates the dataset into one step_counts per step, in declared order.
/// Per-solver records are mapped through label_from_solved and tallied.
inline std::vector<step_counts> to_step_counts(const cohort_dataset& d, const label_scale& scale) {
  if (d.scale_names != scale.names())
    throw validation_error("dataset scale does not match the requested scale");
  std::vector<step_counts> out;
  if (d.kind == dataset_kind::counts) {
    if (d.rows.empty()) throw validation_error("dataset: no records");
    for (const auto& row : d.rows) {
      std::int64_t sum = 0;
      for (auto c : row.counts) sum += c;
      if (sum != d.cohort_size)
        throw validation_error("step \"" + row.step_name + "\": counts sum to " +
                               std::to_string(sum) + " but cohort size is " +
                               std::to_string(d.cohort_size));
      out.push_back({row.step_name, row.counts, d.cohort_size});
    }
    return out;
  }
  if (d.records.empty()) throw validation_error("dataset: no records");
  const auto steps = step_names_of(d);
  std::vector<std::string> solvers;
  for (const auto& r : d.records)
    if (std::find(solvers.begin(), solvers.end(), r.solver) == solvers.end())
      solvers.push_back(r.solver);
  for (const auto& step : steps) {
    step_counts sc{step, std::vector<std::int64_t>(static_cast<std::size_t>(scale.size()), 0),
                   static_cast<std::int64_t>(solvers.size())};
    std::set<std::string> seen;
    for (const auto& r : d.records) {
      if (r.step != step) continue;
      try {
        const label l = label_from_solved(r.solved, r.total, scale);
        ++sc.counts[static_cast<std::size_t>(l.index)];
      } catch (const domain_error& e) {
        throw validation_error("solver \"" + r.solver + "\", step \"" + step + "\": " + e.what());
      }
      seen.insert(r.solver);
    }
    for (const auto& solver : solvers)
      if (!seen.count(solver))
        throw validation_error("solver \"" + solver + "\" has no record for step \"" + step +
                               "\"");
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace stepfuzz
