#include <doctest.h>

#include "stepfuzz/fixtures.hpp"
#include "stepfuzz/ingest.hpp"

using namespace stepfuzz;

TEST_CASE("counts JSON: the group-1 fixture parses to the published counts") {
  const auto d = parse_dataset(fixtures::group1_json, dataset_format::json);
  CHECK(d.kind == dataset_kind::counts);
  CHECK(d.group_name == "group-1");
  CHECK(d.cohort_size == 20);
  REQUIRE(d.rows.size() == 3);
  CHECK(d.rows[0].step_name == "search-retrieval");
  CHECK(d.rows[0].counts == std::vector<std::int64_t>{0, 0, 9, 6, 5});
  CHECK_FALSE(d.notes.empty());
}

TEST_CASE("counts JSON: schema violations are rejected with names") {
  const char* missing_label = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "cohort_size": 1,
    "steps": [{ "name": "s1", "counts": { "a": 1, "b": 0, "c": 0, "d": 0 } }]
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(missing_label, dataset_format::json),
                       doctest::Contains("missing count for label \"e\""), validation_error);

  const char* unknown_label = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "cohort_size": 1,
    "steps": [{ "name": "s1", "counts": { "a": 1, "b": 0, "c": 0, "d": 0, "e": 0, "f": 0 } }]
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(unknown_label, dataset_format::json),
                       doctest::Contains("unknown label \"f\""), validation_error);

  const char* negative = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "cohort_size": 1,
    "steps": [{ "name": "s1", "counts": { "a": -1, "b": 2, "c": 0, "d": 0, "e": 0 } }]
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(negative, dataset_format::json),
                       doctest::Contains("negative count"), validation_error);

  const char* unknown_field = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "cohort_size": 1, "extra": true,
    "steps": [{ "name": "s1", "counts": { "a": 1, "b": 0, "c": 0, "d": 0, "e": 0 } }]
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(unknown_field, dataset_format::json),
                       doctest::Contains("unknown field \"extra\""), validation_error);

  const char* empty_steps = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "cohort_size": 1, "steps": []
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(empty_steps, dataset_format::json),
                       doctest::Contains("no records"), validation_error);
}

TEST_CASE("malformed JSON reports line and column") {
  const char* broken = "{\n  \"group\": \"g\",\n  \"scale\": [}\n";
  try {
    parse_dataset(broken, dataset_format::json);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("per-solver JSON: single record aggregates to one complete solver") {
  const char* text = R"({
    "group": "solo", "scale": ["a","b","c","d","e"], "total_problems": 4,
    "records": [{ "solver": "s1", "step": "only", "solved": 4 }]
  })";
  const auto d = parse_dataset(text, dataset_format::json);
  CHECK(d.kind == dataset_kind::per_solver);
  const auto steps = to_step_counts(d, default_scale());
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].cohort_size == 1);
  CHECK(steps[0].counts == std::vector<std::int64_t>{0, 0, 0, 0, 1});
}

TEST_CASE("per-solver JSON: duplicates and out-of-range are rejected") {
  const char* dup = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "total_problems": 4,
    "records": [
      { "solver": "s1", "step": "map", "solved": 1 },
      { "solver": "s1", "step": "map", "solved": 2 }
    ]
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(dup, dataset_format::json),
                       doctest::Contains("duplicate record"), validation_error);

  const char* range = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "total_problems": 4,
    "records": [{ "solver": "s1", "step": "map", "solved": 5 }]
  })";
  CHECK_THROWS_WITH_AS(parse_dataset(range, dataset_format::json),
                       doctest::Contains("outside [0, 4]"), validation_error);
}

TEST_CASE("per-solver aggregation reproduces the published counts") {
  // 20 solvers at search-retrieval: 9 solved 2, 6 solved 3, 5 solved 4
  std::string text = R"({"group":"g","scale":["a","b","c","d","e"],"total_problems":4,"records":[)";
  int id = 0;
  auto add = [&](int solved, int how_many) {
    for (int i = 0; i < how_many; ++i) {
      if (id > 0) text += ",";
      text += R"({"solver":"s)" + std::to_string(++id) + R"(","step":"search-retrieval","solved":)" +
              std::to_string(solved) + "}";
    }
  };
  add(2, 9);
  add(3, 6);
  add(4, 5);
  text += "]}";
  const auto d = parse_dataset(text, dataset_format::json);
  const auto steps = to_step_counts(d, default_scale());
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].cohort_size == 20);
  CHECK(steps[0].counts == std::vector<std::int64_t>{0, 0, 9, 6, 5});
}

TEST_CASE("per-solver: all-zero records concentrate at the lowest label") {
  const char* text = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "total_problems": 4,
    "records": [
      { "solver": "s1", "step": "map", "solved": 0 },
      { "solver": "s2", "step": "map", "solved": 0 },
      { "solver": "s3", "step": "map", "solved": 0 }
    ]
  })";
  const auto steps = to_step_counts(parse_dataset(text, dataset_format::json), default_scale());
  CHECK(steps[0].counts == std::vector<std::int64_t>{3, 0, 0, 0, 0});
}

TEST_CASE("per-solver: a solver missing a step is an error") {
  const char* text = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "total_problems": 4,
    "records": [
      { "solver": "s1", "step": "map", "solved": 1 },
      { "solver": "s2", "step": "map", "solved": 1 },
      { "solver": "s1", "step": "adapt", "solved": 1 }
    ]
  })";
  CHECK_THROWS_WITH_AS(to_step_counts(parse_dataset(text, dataset_format::json), default_scale()),
                       doctest::Contains("s2"), validation_error);
}

TEST_CASE("counts dataset with disagreeing step sums is rejected") {
  const char* text = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "cohort_size": 20,
    "steps": [
      { "name": "s1", "counts": { "a": 0, "b": 0, "c": 9, "d": 6, "e": 5 } },
      { "name": "s2", "counts": { "a": 0, "b": 0, "c": 9, "d": 6, "e": 4 } }
    ]
  })";
  CHECK_THROWS_WITH_AS(to_step_counts(parse_dataset(text, dataset_format::json), default_scale()),
                       doctest::Contains("\"s2\""), validation_error);
}

TEST_CASE("counts CSV round-trips through the parser") {
  const auto d = parse_dataset(fixtures::group1_json, dataset_format::json);
  const auto csv = to_csv(d);
  CHECK(csv == "step,a,b,c,d,e\n"
               "search-retrieval,0,0,9,6,5\n"
               "mapping,2,2,10,6,0\n"
               "adaptation,7,7,6,0,0\n");
  const auto back = parse_dataset(csv, dataset_format::csv);
  CHECK(back.rows == d.rows);
  CHECK(back.cohort_size == d.cohort_size);
  CHECK(back.scale_names == d.scale_names);
}

TEST_CASE("per-solver CSV parses and validates") {
  const char* csv = "solver,step,solved,total\n"
                    "s1,map,2,4\n"
                    "s2,map,3,4\n";
  const auto d = parse_dataset(csv, dataset_format::csv);
  CHECK(d.kind == dataset_kind::per_solver);
  REQUIRE(d.records.size() == 2);
  CHECK(d.records[1] == solver_record{"s2", "map", 3, 4});

  const char* bad_total = "solver,step,solved,total\n"
                          "s1,map,2,4\n"
                          "s2,map,3,5\n";
  CHECK_THROWS_WITH_AS(parse_dataset(bad_total, dataset_format::csv),
                       doctest::Contains("inconsistent totals"), validation_error);

  const char* not_a_number = "solver,step,solved,total\ns1,map,two,4\n";
  CHECK_THROWS_AS(parse_dataset(not_a_number, dataset_format::csv), parse_error);

  const char* bad_header = "who,what\nx,y\n";
  CHECK_THROWS_AS(parse_dataset(bad_header, dataset_format::csv), parse_error);
}

TEST_CASE("JSON round-trip preserves datasets exactly") {
  const auto d1 = parse_dataset(fixtures::group1_json, dataset_format::json);
  CHECK(parse_dataset(to_json(d1), dataset_format::json) == d1);

  const char* per_solver = R"({
    "group": "g", "scale": ["a","b","c","d","e"], "total_problems": 4,
    "records": [
      { "solver": "s1", "step": "map", "solved": 1 },
      { "solver": "s2", "step": "map", "solved": 4 }
    ],
    "notes": "hand-written"
  })";
  const auto d2 = parse_dataset(per_solver, dataset_format::json);
  CHECK(parse_dataset(to_json(d2), dataset_format::json) == d2);
}

TEST_CASE("per-solver CSV round-trips its records") {
  const char* csv = "solver,step,solved,total\n"
                    "s1,map,2,4\n"
                    "s1,adapt,1,4\n"
                    "s2,map,0,4\n"
                    "s2,adapt,4,4\n";
  const auto d = parse_dataset(csv, dataset_format::csv);
  CHECK(to_csv(d) == csv);
  CHECK(parse_dataset(to_csv(d), dataset_format::csv) == d);
}

TEST_CASE("to_step_counts rejects a mismatched scale") {
  const auto d = parse_dataset(fixtures::group1_json, dataset_format::json);
  const auto other = scale_from_names(std::vector<std::string>{"lo", "hi"});
  CHECK_THROWS_AS(to_step_counts(d, other), validation_error);
}
