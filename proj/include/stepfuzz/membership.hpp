#pragma once

// Builds the fuzzy subset of the label universe for one reasoning step from
// per-label solver counts. Membership values come from L threshold bands over
// [0, n] with rational endpoints (n/L, 2n/L, ...), so the comparisons are done
// by integer cross-multiplication, never floating point.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stepfuzz/error.hpp"
#include "stepfuzz/label_scale.hpp"
#include "stepfuzz/rational.hpp"

namespace stepfuzz {

/// Per-label solver counts for one step; counts[i] belongs to scale label i and
/// the counts must sum to cohort_size (each solver gets exactly one label).
struct step_counts {
  std::string step_name;
  std::vector<std::int64_t> counts;
  std::int64_t cohort_size = 0;
};

/// Fuzzy subset of the universe for one step: memberships[i] is j/(L-1) for the
/// band j that label i's count falls into.
struct fuzzy_step_set {
  std::string step_name;
  std::vector<rational> memberships;

  friend bool operator==(const fuzzy_step_set& a, const fuzzy_step_set& b) = default;
};

/// Band index of `count` within the L bands over [0, cohort_size]: the unique j
/// with j*n < L*count <= (j+1)*n, except band 0 also contains count == 0.
/// Equivalently ceil(L*count/n) - 1 for count > 0.
inline int band_of(std::int64_t count, std::int64_t cohort_size, int num_bands) {
  if (cohort_size < 1) throw domain_error("band_of: cohort_size must be >= 1");
  if (num_bands < 2) throw domain_error("band_of: need at least 2 bands");
  if (count < 0 || count > cohort_size)
    throw domain_error("band_of: count " + std::to_string(count) + " outside [0, " +
                       std::to_string(cohort_size) + "]");
  if (count == 0) return 0;
  const __int128 scaled = static_cast<__int128>(num_bands) * count;
  const __int128 n = cohort_size;
  const auto ceil_div = static_cast<std::int64_t>((scaled + n - 1) / n);
  return static_cast<int>(ceil_div - 1);
}

/// A_i from counts: memberships[x] = band_of(counts[x], n, L) / (L-1).
inline fuzzy_step_set build_fuzzy_step(const step_counts& counts, const label_scale& scale) {
  const int bands = scale.size();
  if (counts.counts.size() != static_cast<std::size_t>(bands))
    throw validation_error("step \"" + counts.step_name + "\": expected " +
                           std::to_string(bands) + " counts, got " +
                           std::to_string(counts.counts.size()));
  if (counts.cohort_size < 1)
    throw validation_error("step \"" + counts.step_name + "\": cohort size must be positive");
  std::int64_t sum = 0;
  for (std::int64_t c : counts.counts) {
    if (c < 0)
      throw validation_error("step \"" + counts.step_name + "\": negative count");
    sum += c;
  }
  if (sum != counts.cohort_size)
    throw validation_error("step \"" + counts.step_name + "\": counts sum to " +
                           std::to_string(sum) + ", cohort size is " +
                           std::to_string(counts.cohort_size));
  fuzzy_step_set out;
  out.step_name = counts.step_name;
  out.memberships.reserve(counts.counts.size());
  for (std::int64_t c : counts.counts)
    out.memberships.emplace_back(band_of(c, counts.cohort_size, bands), bands - 1);
  return out;
}

}  // namespace stepfuzz
