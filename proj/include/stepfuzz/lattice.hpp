#pragma once

// Profile lattice for one cohort: enumerates every k-step label profile,
// assigns membership degrees (product rule over well-ordered profiles, zero
// elsewhere), normalizes them into possibilities, and measures the spread with
// the normalized Shannon-Wiener diversity index.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stepfuzz/error.hpp"
#include "stepfuzz/label_scale.hpp"
#include "stepfuzz/membership.hpp"
#include "stepfuzz/rational.hpp"

namespace stepfuzz {

/// One performance trajectory: a label index per step, in step order.
class profile {
 public:
  explicit profile(std::vector<int> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw domain_error("profile: empty");
    for (int i : indices_)
      if (i < 0) throw domain_error("profile: negative label index");
  }

  /// Inverse of rank(): step-major mixed-radix decoding.
  static profile from_rank(std::size_t rank, int scale_size, int steps) {
    std::vector<int> idx(static_cast<std::size_t>(steps));
    for (int i = steps - 1; i >= 0; --i) {
      idx[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::size_t>(scale_size));
      rank /= static_cast<std::size_t>(scale_size);
    }
    return profile(std::move(idx));
  }

  /// Position in step-major lexicographic scale order; doubles as the lattice index.
  std::size_t rank(int scale_size) const {
    std::size_t r = 0;
    for (int i : indices_) {
      if (i >= scale_size) throw domain_error("profile: label index outside scale");
      r = r * static_cast<std::size_t>(scale_size) + static_cast<std::size_t>(i);
    }
    return r;
  }

  int size() const noexcept { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const noexcept { return indices_; }

  std::vector<std::string> names(const label_scale& scale) const {
    std::vector<std::string> out;
    out.reserve(indices_.size());
    for (int i : indices_) out.push_back(scale[i].name);
    return out;
  }

  std::string to_string(const label_scale& scale) const {
    std::string out = "(";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (i > 0) out += ",";
      out += scale[indices_[static_cast<std::size_t>(i)]].name;
    }
    return out + ")";
  }

  friend bool operator==(const profile& a, const profile& b) noexcept {
    return a.indices_ == b.indices_;
  }
  friend bool operator!=(const profile& a, const profile& b) noexcept { return !(a == b); }

 private:
  std::vector<int> indices_;
};

/// True iff the success degree never increases from one step to the next.
inline bool is_well_ordered(const profile& p) {
  const auto& idx = p.indices();
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] > idx[i - 1]) return false;
  return true;
}

/// Product of the per-step memberships when the profile is well ordered, exact 0 otherwise.
inline rational profile_membership(const profile& p, std::span<const fuzzy_step_set> steps) {
  if (static_cast<std::size_t>(p.size()) != steps.size())
    throw domain_error("profile_membership: profile length " + std::to_string(p.size()) +
                       " does not match step count " + std::to_string(steps.size()));
  if (!is_well_ordered(p)) return rational(0);
  rational m(1);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto idx = static_cast<std::size_t>(p.indices()[i]);
    if (idx >= steps[i].memberships.size())
      throw domain_error("profile_membership: label index outside scale");
    m *= steps[i].memberships[idx];
    if (m.is_zero()) return m;
  }
  return m;
}

/// Normalized Shannon-Wiener index over a full lattice of membership values:
/// H = -(1/ln N) * sum m ln m, with N the lattice size and 0*ln 0 taken as 0.
/// Terms are summed smallest magnitude first so identical inputs give
/// bit-identical results.
inline double normalized_entropy(std::span<const rational> memberships) {
  if (memberships.size() < 2) return 0.0;
  std::vector<double> terms;
  terms.reserve(memberships.size());
  for (const auto& m : memberships) {
    if (m.is_zero()) continue;
    const double v = m.to_double();
    terms.push_back(v * std::log(v));
  }
  if (terms.empty()) return 0.0;
  std::sort(terms.begin(), terms.end(), [](double a, double b) {
    const double ma = std::fabs(a);
    const double mb = std::fabs(b);
    return ma != mb ? ma < mb : a < b;
  });
  double sum = 0.0;
  for (double t : terms) sum += t;
  if (sum == 0.0) return 0.0;
  return -sum / std::log(static_cast<double>(memberships.size()));
}

/// Number of well-ordered profiles over L labels and k steps: C(L+k-1, k),
/// i.e. the number of k-multisets of labels.
inline std::uint64_t well_ordered_count(int scale_size, int steps) {
  if (scale_size < 1 || steps < 1)
    throw domain_error("well_ordered_count: need scale_size >= 1 and steps >= 1");
  // C(n, k) with n = L+k-1, multiplying in ascending order keeps intermediates integral
  const std::uint64_t n = static_cast<std::uint64_t>(scale_size) + static_cast<std::uint64_t>(steps) - 1;
  const std::uint64_t k = std::min<std::uint64_t>(static_cast<std::uint64_t>(steps),
                                                  n - static_cast<std::uint64_t>(steps));
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("well_ordered_count: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

/// Full lattice of one cohort. Vectors are indexed by profile rank; every one
/// of the L^k profiles is present, zeros included. Immutable once built.
struct group_assessment {
  std::string group_name;
  label_scale scale;
  std::vector<fuzzy_step_set> steps;  // empty for injected lattices
  int step_count = 0;
  std::size_t lattice_size = 0;  // L^k
  std::vector<rational> memberships{};
  rational max_membership{};
  std::vector<rational> possibilities{};
  double entropy = 0.0;
  bool degenerate = false;  // true iff max_membership == 0

  const rational& membership(const profile& p) const {
    return memberships.at(p.rank(scale.size()));
  }
  const rational& possibility(const profile& p) const {
    return possibilities.at(p.rank(scale.size()));
  }
};

namespace detail {

inline std::size_t checked_lattice_size(int scale_size, int steps) {
  unsigned __int128 size = 1;
  for (int i = 0; i < steps; ++i) {
    size *= static_cast<unsigned>(scale_size);
    if (size > (1u << 26))
      throw domain_error("lattice: " + std::to_string(scale_size) + "^" + std::to_string(steps) +
                         " profiles is beyond the supported size");
  }
  return static_cast<std::size_t>(size);
}

/// Possibilities, max and entropy from an already-filled membership vector.
inline void finish_assessment(group_assessment& a) {
  a.max_membership = rational(0);
  for (const auto& m : a.memberships)
    if (a.max_membership < m) a.max_membership = m;
  a.degenerate = a.max_membership.is_zero();
  a.possibilities.assign(a.memberships.size(), rational(0));
  if (!a.degenerate) {
    for (std::size_t i = 0; i < a.memberships.size(); ++i)
      a.possibilities[i] = a.memberships[i] / a.max_membership;
  }
  a.entropy = normalized_entropy(a.memberships);
}

}  // namespace detail

/// Enumerates all L^k profiles for the given step sets and fills the lattice.
inline group_assessment assess_group(std::string name, const label_scale& scale,
                                     std::vector<fuzzy_step_set> steps) {
  if (steps.empty()) throw domain_error("assess_group: need at least one step");
  for (const auto& s : steps)
    if (s.memberships.size() != static_cast<std::size_t>(scale.size()))
      throw domain_error("assess_group: step \"" + s.step_name +
                         "\" is not over the given scale");
  group_assessment a{.group_name = std::move(name), .scale = scale, .steps = std::move(steps)};
  a.step_count = static_cast<int>(a.steps.size());
  a.lattice_size = detail::checked_lattice_size(scale.size(), a.step_count);
  a.memberships.reserve(a.lattice_size);
  // Odometer walk in rank order; well-orderedness and the product are tracked
  // incrementally but match profile_membership exactly.
  for (std::size_t r = 0; r < a.lattice_size; ++r)
    a.memberships.push_back(profile_membership(profile::from_rank(r, scale.size(), a.step_count),
                                               a.steps));
  detail::finish_assessment(a);
  return a;
}

/// Builds a lattice from externally supplied membership values (profiles not
/// listed get 0). This is the replay path for printed reference tables; the
/// possibility and entropy code is the same as assess_group's.
inline group_assessment assess_from_memberships(
    std::string name, const label_scale& scale, int step_count,
    std::span<const std::pair<profile, rational>> rows) {
  if (step_count < 1) throw domain_error("assess_from_memberships: need at least one step");
  group_assessment a{.group_name = std::move(name), .scale = scale, .steps = {}};
  a.step_count = step_count;
  a.lattice_size = detail::checked_lattice_size(scale.size(), step_count);
  a.memberships.assign(a.lattice_size, rational(0));
  for (const auto& [p, m] : rows) {
    if (p.size() != step_count)
      throw domain_error("assess_from_memberships: profile " + p.to_string(scale) +
                         " has wrong length");
    if (m < rational(0))
      throw domain_error("assess_from_memberships: negative membership for " + p.to_string(scale));
    a.memberships[p.rank(scale.size())] = m;
  }
  detail::finish_assessment(a);
  return a;
}

/// The index over an existing lattice; identical to the value stored on it.
inline double shannon_entropy(const group_assessment& a) {
  return normalized_entropy(a.memberships);
}

}  // namespace stepfuzz
