#pragma once

// Synthetic per-solver cohorts for property testing. Output is deterministic
// for a given seed down to the byte, so the generator avoids std::
// distributions (their sequences are implementation-defined).

#include <cstdint>
#include <string>
#include <vector>

#include "stepfuzz/error.hpp"
#include "stepfuzz/ingest.hpp"
#include "stepfuzz/label_scale.hpp"

namespace stepfuzz {

enum class skill_profile { uniform, strong, weak };

inline const char* to_string(skill_profile s) {
  switch (s) {
    case skill_profile::uniform: return "uniform";
    case skill_profile::strong: return "strong";
    case skill_profile::weak: return "weak";
  }
  return "uniform";
}

namespace detail {

class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // bound is tiny here (total_problems + 1); modulo bias is irrelevant
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

inline std::string padded_id(std::int64_t value, std::int64_t max_value) {
  std::size_t width = 1;
  for (std::int64_t v = max_value; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(value);
  return "s" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

}  // namespace detail

inline std::vector<std::string> default_step_names(int steps) {
  if (steps == 3) return {"search-retrieval", "mapping", "adaptation"};
  std::vector<std::string> names;
  for (int i = 1; i <= steps; ++i) names.push_back("step-" + std::to_string(i));
  return names;
}

/// One record per (solver, step); solved counts drawn per the skill profile
/// (strong/weak take the max/min of two uniform draws).
inline cohort_dataset simulate_cohort(std::int64_t cohort_size, int steps, std::uint64_t seed,
                                      skill_profile skill, std::int64_t total_problems = 4,
                                      std::string group_name = "") {
  if (cohort_size < 1) throw domain_error("simulate_cohort: cohort size must be >= 1");
  if (steps < 1) throw domain_error("simulate_cohort: steps must be >= 1");
  if (total_problems < 1) throw domain_error("simulate_cohort: total_problems must be >= 1");
  detail::splitmix64 rng(seed);
  cohort_dataset d;
  d.kind = dataset_kind::per_solver;
  d.group_name = group_name.empty()
                     ? "sim-" + std::to_string(cohort_size) + "x" + std::to_string(steps) +
                           "-seed" + std::to_string(seed) + "-" + to_string(skill)
                     : std::move(group_name);
  d.scale_names = default_scale().names();
  const auto step_names = default_step_names(steps);
  const auto bound = static_cast<std::uint64_t>(total_problems) + 1;
  for (std::int64_t s = 1; s <= cohort_size; ++s) {
    const auto solver = detail::padded_id(s, cohort_size);
    for (const auto& step : step_names) {
      std::int64_t solved = 0;
      switch (skill) {
        case skill_profile::uniform:
          solved = static_cast<std::int64_t>(rng.below(bound));
          break;
        case skill_profile::strong: {
          const auto x = rng.below(bound);
          const auto y = rng.below(bound);
          solved = static_cast<std::int64_t>(x > y ? x : y);
          break;
        }
        case skill_profile::weak: {
          const auto x = rng.below(bound);
          const auto y = rng.below(bound);
          solved = static_cast<std::int64_t>(x < y ? x : y);
          break;
        }
      }
      d.records.push_back({solver, step, solved, total_problems});
    }
  }
  return d;
}

inline std::string simulate_dataset_json(std::int64_t cohort_size, int steps, std::uint64_t seed,
                                         skill_profile skill, std::int64_t total_problems = 4,
                                         std::string group_name = "") {
  return to_json(simulate_cohort(cohort_size, steps, seed, skill, total_problems,
                                 std::move(group_name)));
}

}  // namespace stepfuzz
