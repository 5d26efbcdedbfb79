// Minimal walkthrough: build fuzzy step-sets from cohort counts, assess the
// profile lattice, and combine two cohorts.

#include <iostream>

#include "stepfuzz/stepfuzz.hpp"

int main() {
  using namespace stepfuzz;

  const auto scale = default_scale();

  // counts per label (a..e) for each reasoning step, 20 solvers
  std::vector<fuzzy_step_set> steps;
  steps.push_back(build_fuzzy_step({"search-retrieval", {0, 0, 9, 6, 5}, 20}, scale));
  steps.push_back(build_fuzzy_step({"mapping", {2, 2, 10, 6, 0}, 20}, scale));
  steps.push_back(build_fuzzy_step({"adaptation", {7, 7, 6, 0, 0}, 20}, scale));

  const auto cohort = assess_group("demo-cohort", scale, steps);
  std::cout << "lattice size: " << cohort.lattice_size << "\n";
  std::cout << "max membership: " << cohort.max_membership.to_string() << "\n";
  std::cout << "diversity index H: " << cohort.entropy << "\n\n";

  report_config config;
  const std::vector<group_assessment> groups{cohort};
  std::cout << render_lattice(groups, nullptr, config);

  // combining a cohort with the bundled second classroom group
  const auto other_data = fixtures::group2();
  std::vector<fuzzy_step_set> other_steps;
  for (const auto& sc : to_step_counts(other_data, scale))
    other_steps.push_back(build_fuzzy_step(sc, scale));
  const auto other = assess_group(other_data.group_name, scale, other_steps);

  const std::vector<group_assessment> pair{cohort, other};
  const auto joint = combine(pair);
  std::cout << "\nmax pseudo-frequency: " << joint.max_pseudo_frequency.to_string() << "\n";
  return 0;
}
