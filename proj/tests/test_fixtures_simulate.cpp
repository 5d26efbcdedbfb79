#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "stepfuzz/fixtures.hpp"
#include "stepfuzz/simulate.hpp"

using namespace stepfuzz;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct temp_dir {
  std::filesystem::path path;
  temp_dir() {
    path = std::filesystem::temp_directory_path() /
           ("stepfuzz-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~temp_dir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("bundled fixtures parse and reproduce the published fuzzy step-sets") {
  const auto scale = default_scale();
  const auto steps1 = to_step_counts(fixtures::group1(), scale);
  REQUIRE(steps1.size() == 3);
  const auto a1 = build_fuzzy_step(steps1[0], scale);
  const auto a2 = build_fuzzy_step(steps1[1], scale);
  const auto a3 = build_fuzzy_step(steps1[2], scale);
  CHECK(a1.memberships == std::vector<rational>{{0}, {0}, {1, 2}, {1, 4}, {1, 4}});
  CHECK(a2.memberships == std::vector<rational>{{0}, {0}, {1, 2}, {1, 4}, {0}});
  CHECK(a3.memberships == std::vector<rational>{{1, 4}, {1, 4}, {1, 4}, {0}, {0}});

  const auto steps2 = to_step_counts(fixtures::group2(), scale);
  const auto b1 = build_fuzzy_step(steps2[0], scale);
  const auto b2 = build_fuzzy_step(steps2[1], scale);
  const auto b3 = build_fuzzy_step(steps2[2], scale);
  CHECK(b1.memberships == std::vector<rational>{{0}, {1, 4}, {1, 2}, {1, 4}, {0}});
  CHECK(b2.memberships == std::vector<rational>{{1, 4}, {1, 4}, {1, 2}, {0}, {0}});
  CHECK(b3.memberships == std::vector<rational>{{1, 4}, {1, 4}, {1, 4}, {0}, {0}});
}

TEST_CASE("reference tables parse with 24 rows each") {
  CHECK(fixtures::table1_group1().rows.size() == 24);
  CHECK(fixtures::table1_group2().rows.size() == 24);
  CHECK(fixtures::table1_combined().rows.size() == 24);
  CHECK(fixtures::table1_group1().columns == std::vector<std::string>{"m", "r"});
  CHECK(fixtures::table1_combined().columns == std::vector<std::string>{"f", "r"});
}

TEST_CASE("write_files is deterministic and re-parseable") {
  temp_dir dir;
  const auto written = fixtures::write_files(dir.path);
  REQUIRE(written.size() == 5);
  const auto first = slurp(dir.path / "group1.json");
  CHECK(parse_dataset(first, dataset_format::json).group_name == "group-1");
  fixtures::write_files(dir.path);  // second run must be byte-identical
  CHECK(slurp(dir.path / "group1.json") == first);
  CHECK(slurp(dir.path / "table1_g1.json") == std::string(fixtures::table1_group1_json));
}

TEST_CASE("reference tables reject duplicate profiles") {
  const char* dup = R"({
    "name": "t", "scale": ["a","b"], "columns": ["m"],
    "rows": [
      { "profile": ["a","a"], "m": "0.5" },
      { "profile": ["a","a"], "m": "0.25" }
    ]
  })";
  CHECK_THROWS_WITH_AS(parse_reference_table(dup), doctest::Contains("duplicate profile"),
                       validation_error);
}

TEST_CASE("write_files fails cleanly on an unwritable directory") {
  CHECK_THROWS_AS(fixtures::write_files("/nonexistent-stepfuzz/sub"), validation_error);
}

TEST_CASE("simulated datasets are valid and deterministic") {
  const auto text = simulate_dataset_json(20, 3, 42, skill_profile::uniform);
  const auto again = simulate_dataset_json(20, 3, 42, skill_profile::uniform);
  CHECK(text == again);
  const auto d = parse_dataset(text, dataset_format::json);
  CHECK(d.kind == dataset_kind::per_solver);
  CHECK(d.records.size() == 60);  // one record per solver per step
  const auto steps = to_step_counts(d, default_scale());
  REQUIRE(steps.size() == 3);
  for (const auto& sc : steps) CHECK(sc.cohort_size == 20);

  const auto other_seed = simulate_dataset_json(20, 3, 43, skill_profile::uniform);
  CHECK(text != other_seed);
}

TEST_CASE("simulated bounds hold for every skill profile") {
  for (auto skill : {skill_profile::uniform, skill_profile::strong, skill_profile::weak}) {
    const auto d = simulate_cohort(1, 1, 7, skill);
    REQUIRE(d.records.size() == 1);
    CHECK(d.records[0].solved >= 0);
    CHECK(d.records[0].solved <= d.records[0].total);
  }
}

TEST_CASE("skill profiles shift the mass the way they should") {
  const auto strong = simulate_cohort(400, 1, 11, skill_profile::strong);
  const auto weak = simulate_cohort(400, 1, 11, skill_profile::weak);
  auto mean = [](const cohort_dataset& d) {
    double sum = 0;
    for (const auto& r : d.records) sum += static_cast<double>(r.solved);
    return sum / static_cast<double>(d.records.size());
  };
  CHECK(mean(strong) > mean(weak));
}

TEST_CASE("simulate rejects bad parameters") {
  CHECK_THROWS_AS(simulate_cohort(0, 3, 1, skill_profile::uniform), domain_error);
  CHECK_THROWS_AS(simulate_cohort(5, 0, 1, skill_profile::uniform), domain_error);
  CHECK_THROWS_AS(simulate_cohort(5, 3, 1, skill_profile::uniform, 0), domain_error);
}

TEST_CASE("three-step simulations use the canonical step names") {
  const auto d = simulate_cohort(2, 3, 1, skill_profile::uniform);
  CHECK(step_names_of(d) ==
        std::vector<std::string>{"search-retrieval", "mapping", "adaptation"});
  const auto d2 = simulate_cohort(2, 2, 1, skill_profile::uniform);
  CHECK(step_names_of(d2) == std::vector<std::string>{"step-1", "step-2"});
}
