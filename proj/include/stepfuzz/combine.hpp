#pragma once

// Cross-group combination: per-profile pseudo-frequencies f(s) = sum of the
// groups' membership degrees, normalized into combined possibilities
// r(s) = f(s) / max f(s). Also serves one group observed across several
// processes; callers just label the inputs accordingly.

#include <span>
#include <string>
#include <vector>

#include "stepfuzz/error.hpp"
#include "stepfuzz/lattice.hpp"

namespace stepfuzz {

struct combined_assessment {
  std::vector<std::string> group_names;
  label_scale scale;
  int step_count = 0;
  std::size_t lattice_size = 0;
  std::vector<rational> pseudo_frequencies{};  // by profile rank, exact sums
  rational max_pseudo_frequency{};
  std::vector<rational> combined_possibilities{};
  bool degenerate = false;

  const rational& pseudo_frequency(const profile& p) const {
    return pseudo_frequencies.at(p.rank(scale.size()));
  }
  const rational& possibility(const profile& p) const {
    return combined_possibilities.at(p.rank(scale.size()));
  }
};

inline combined_assessment combine(std::span<const group_assessment> groups) {
  if (groups.size() < 2) throw domain_error("combine: need at least 2 groups");
  const auto& first = groups.front();
  for (const auto& g : groups) {
    if (g.scale != first.scale)
      throw domain_error("combine: group \"" + g.group_name + "\" uses a different scale");
    if (g.step_count != first.step_count)
      throw domain_error("combine: group \"" + g.group_name + "\" has a different step count");
  }
  combined_assessment c{.group_names = {}, .scale = first.scale};
  c.step_count = first.step_count;
  c.lattice_size = first.lattice_size;
  c.pseudo_frequencies.assign(c.lattice_size, rational(0));
  for (const auto& g : groups) {
    c.group_names.push_back(g.group_name);
    for (std::size_t i = 0; i < c.lattice_size; ++i)
      c.pseudo_frequencies[i] += g.memberships[i];
  }
  c.max_pseudo_frequency = rational(0);
  for (const auto& f : c.pseudo_frequencies)
    if (c.max_pseudo_frequency < f) c.max_pseudo_frequency = f;
  c.degenerate = c.max_pseudo_frequency.is_zero();
  c.combined_possibilities.assign(c.lattice_size, rational(0));
  if (!c.degenerate) {
    for (std::size_t i = 0; i < c.lattice_size; ++i)
      c.combined_possibilities[i] = c.pseudo_frequencies[i] / c.max_pseudo_frequency;
  }
  return c;
}

}  // namespace stepfuzz
