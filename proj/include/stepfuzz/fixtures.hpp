#pragma once

// The bundled classroom experiment: two cohorts of 20 students assessed over
// three reasoning steps, plus the reference result table they were published
// with. The reference table is kept verbatim (decimal commas normalized to
// points), including its known quirks: its values were rounded to 3 decimals
// before deriving ratios, and its (c,c,b) row contradicts the published fuzzy
// step-sets in both membership columns.

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "stepfuzz/error.hpp"
#include "stepfuzz/ingest.hpp"
#include "stepfuzz/table.hpp"

namespace stepfuzz::fixtures {

inline constexpr std::string_view group1_json = R"({
  "group": "group-1",
  "scale": ["a", "b", "c", "d", "e"],
  "cohort_size": 20,
  "steps": [
    { "name": "search-retrieval", "counts": { "a": 0, "b": 0, "c": 9, "d": 6, "e": 5 } },
    { "name": "mapping", "counts": { "a": 2, "b": 2, "c": 10, "d": 6, "e": 0 } },
    { "name": "adaptation", "counts": { "a": 7, "b": 7, "c": 6, "d": 0, "e": 0 } }
  ],
  "notes": "Search-retrieval counts are the published ones (9, 6 and 5 students with intermediate, high and complete success). Only the fuzzy step-sets were published for mapping and adaptation; those counts are derived so each label lands in the published membership band, summing to the cohort size."
}
)";

inline constexpr std::string_view group2_json = R"({
  "group": "group-2",
  "scale": ["a", "b", "c", "d", "e"],
  "cohort_size": 20,
  "steps": [
    { "name": "search-retrieval", "counts": { "a": 0, "b": 5, "c": 10, "d": 5, "e": 0 } },
    { "name": "mapping", "counts": { "a": 5, "b": 5, "c": 10, "d": 0, "e": 0 } },
    { "name": "adaptation", "counts": { "a": 8, "b": 6, "c": 6, "d": 0, "e": 0 } }
  ],
  "notes": "Only the fuzzy step-sets were published for this group; all counts are derived so each label lands in the published membership band, summing to the cohort size."
}
)";

// columns: m = published membership degrees, r = published possibilities
inline constexpr std::string_view table1_group1_json = R"({
  "name": "table1-group1",
  "scale": ["a", "b", "c", "d", "e"],
  "columns": ["m", "r"],
  "rows": [
    { "profile": ["b", "b", "b"], "m": "0", "r": "0" },
    { "profile": ["b", "b", "a"], "m": "0", "r": "0" },
    { "profile": ["b", "a", "a"], "m": "0", "r": "0" },
    { "profile": ["c", "c", "c"], "m": "0.062", "r": "1" },
    { "profile": ["c", "c", "a"], "m": "0.062", "r": "1" },
    { "profile": ["c", "c", "b"], "m": "0", "r": "0" },
    { "profile": ["c", "a", "a"], "m": "0", "r": "0" },
    { "profile": ["c", "b", "a"], "m": "0", "r": "0" },
    { "profile": ["c", "b", "b"], "m": "0", "r": "0" },
    { "profile": ["d", "d", "a"], "m": "0.016", "r": "0.258" },
    { "profile": ["d", "d", "b"], "m": "0.016", "r": "0.258" },
    { "profile": ["d", "d", "c"], "m": "0.016", "r": "0.258" },
    { "profile": ["d", "a", "a"], "m": "0", "r": "0" },
    { "profile": ["d", "b", "a"], "m": "0", "r": "0" },
    { "profile": ["d", "b", "b"], "m": "0", "r": "0" },
    { "profile": ["d", "c", "a"], "m": "0.031", "r": "0.5" },
    { "profile": ["d", "c", "b"], "m": "0.031", "r": "0.5" },
    { "profile": ["d", "c", "c"], "m": "0.031", "r": "0.5" },
    { "profile": ["e", "c", "a"], "m": "0.031", "r": "0.5" },
    { "profile": ["e", "c", "b"], "m": "0.031", "r": "0.5" },
    { "profile": ["e", "c", "c"], "m": "0.031", "r": "0.5" },
    { "profile": ["e", "d", "a"], "m": "0.016", "r": "0.258" },
    { "profile": ["e", "d", "b"], "m": "0.016", "r": "0.258" },
    { "profile": ["e", "d", "c"], "m": "0.016", "r": "0.258" }
  ]
}
)";

inline constexpr std::string_view table1_group2_json = R"({
  "name": "table1-group2",
  "scale": ["a", "b", "c", "d", "e"],
  "columns": ["m", "r"],
  "rows": [
    { "profile": ["b", "b", "b"], "m": "0.016", "r": "0.258" },
    { "profile": ["b", "b", "a"], "m": "0.016", "r": "0.258" },
    { "profile": ["b", "a", "a"], "m": "0.016", "r": "0.258" },
    { "profile": ["c", "c", "c"], "m": "0.062", "r": "1" },
    { "profile": ["c", "c", "a"], "m": "0.062", "r": "1" },
    { "profile": ["c", "c", "b"], "m": "0.031", "r": "0.5" },
    { "profile": ["c", "a", "a"], "m": "0.031", "r": "0.5" },
    { "profile": ["c", "b", "a"], "m": "0.031", "r": "0.5" },
    { "profile": ["c", "b", "b"], "m": "0.031", "r": "0.5" },
    { "profile": ["d", "d", "a"], "m": "0", "r": "0" },
    { "profile": ["d", "d", "b"], "m": "0", "r": "0" },
    { "profile": ["d", "d", "c"], "m": "0", "r": "0" },
    { "profile": ["d", "a", "a"], "m": "0.016", "r": "0.258" },
    { "profile": ["d", "b", "a"], "m": "0.016", "r": "0.258" },
    { "profile": ["d", "b", "b"], "m": "0.016", "r": "0.258" },
    { "profile": ["d", "c", "a"], "m": "0.031", "r": "0.5" },
    { "profile": ["d", "c", "b"], "m": "0.031", "r": "0.5" },
    { "profile": ["d", "c", "c"], "m": "0.031", "r": "0.5" },
    { "profile": ["e", "c", "a"], "m": "0", "r": "0" },
    { "profile": ["e", "c", "b"], "m": "0", "r": "0" },
    { "profile": ["e", "c", "c"], "m": "0", "r": "0" },
    { "profile": ["e", "d", "a"], "m": "0", "r": "0" },
    { "profile": ["e", "d", "b"], "m": "0", "r": "0" },
    { "profile": ["e", "d", "c"], "m": "0", "r": "0" }
  ]
}
)";

// columns: f = published pseudo-frequencies, r = published combined possibilities
inline constexpr std::string_view table1_combined_json = R"({
  "name": "table1-combined",
  "scale": ["a", "b", "c", "d", "e"],
  "columns": ["f", "r"],
  "rows": [
    { "profile": ["b", "b", "b"], "f": "0.016", "r": "0.129" },
    { "profile": ["b", "b", "a"], "f": "0.016", "r": "0.129" },
    { "profile": ["b", "a", "a"], "f": "0.016", "r": "0.129" },
    { "profile": ["c", "c", "c"], "f": "0.124", "r": "1" },
    { "profile": ["c", "c", "a"], "f": "0.124", "r": "1" },
    { "profile": ["c", "c", "b"], "f": "0.031", "r": "0.25" },
    { "profile": ["c", "a", "a"], "f": "0.031", "r": "0.25" },
    { "profile": ["c", "b", "a"], "f": "0.031", "r": "0.25" },
    { "profile": ["c", "b", "b"], "f": "0.031", "r": "0.25" },
    { "profile": ["d", "d", "a"], "f": "0.016", "r": "0.129" },
    { "profile": ["d", "d", "b"], "f": "0.016", "r": "0.129" },
    { "profile": ["d", "d", "c"], "f": "0.016", "r": "0.129" },
    { "profile": ["d", "a", "a"], "f": "0.016", "r": "0.129" },
    { "profile": ["d", "b", "a"], "f": "0.016", "r": "0.129" },
    { "profile": ["d", "b", "b"], "f": "0.016", "r": "0.129" },
    { "profile": ["d", "c", "a"], "f": "0.062", "r": "0.5" },
    { "profile": ["d", "c", "b"], "f": "0.062", "r": "0.5" },
    { "profile": ["d", "c", "c"], "f": "0.062", "r": "0.5" },
    { "profile": ["e", "c", "a"], "f": "0.031", "r": "0.25" },
    { "profile": ["e", "c", "b"], "f": "0.031", "r": "0.25" },
    { "profile": ["e", "c", "c"], "f": "0.031", "r": "0.25" },
    { "profile": ["e", "d", "a"], "f": "0.016", "r": "0.129" },
    { "profile": ["e", "d", "b"], "f": "0.016", "r": "0.129" },
    { "profile": ["e", "d", "c"], "f": "0.016", "r": "0.129" }
  ]
}
)";

inline cohort_dataset group1() { return parse_dataset(group1_json, dataset_format::json); }
inline cohort_dataset group2() { return parse_dataset(group2_json, dataset_format::json); }
inline reference_table table1_group1() { return parse_reference_table(table1_group1_json); }
inline reference_table table1_group2() { return parse_reference_table(table1_group2_json); }
inline reference_table table1_combined() { return parse_reference_table(table1_combined_json); }

struct fixture_file {
  const char* filename;
  std::string_view content;
};

inline std::vector<fixture_file> files() {
  return {{"group1.json", group1_json},
          {"group2.json", group2_json},
          {"table1_g1.json", table1_group1_json},
          {"table1_g2.json", table1_group2_json},
          {"table1_combined.json", table1_combined_json}};
}

/// Writes the five fixture files into `dir`; overwrites, byte-identical each run.
inline std::vector<std::string> write_files(const std::filesystem::path& dir) {
  std::vector<std::string> written;
  for (const auto& f : files()) {
    const auto path = dir / f.filename;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw validation_error("cannot write " + path.string());
    out << f.content;
    if (!out.flush()) throw validation_error("cannot write " + path.string());
    written.push_back(path.string());
  }
  return written;
}

}  // namespace stepfuzz::fixtures
