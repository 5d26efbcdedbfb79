#pragma once

// The ordered universe of linguistic performance labels, and the mapping from
// raw solved-problem counts onto it.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stepfuzz/error.hpp"

namespace stepfuzz {

struct label {
  int index = 0;  // ordinal position, 0 = weakest
  std::string name;
  std::string description;

  // descriptions are presentation metadata and do not participate in identity
  friend bool operator==(const label& a, const label& b) noexcept {
    return a.index == b.index && a.name == b.name;
  }
  friend bool operator!=(const label& a, const label& b) noexcept { return !(a == b); }
};

/// Strictly ordered label universe; indices run 0..L-1 with no gaps, L >= 2.
class label_scale {
 public:
  explicit label_scale(std::vector<label> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2) throw domain_error("label_scale: need at least 2 labels");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].index != static_cast<int>(i))
        throw domain_error("label_scale: label indices must be 0..L-1 in order");
      if (labels_[i].name.empty()) throw domain_error("label_scale: empty label name");
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[j].name == labels_[i].name)
          throw domain_error("label_scale: duplicate label name \"" + labels_[i].name + "\"");
    }
  }

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<label>& labels() const noexcept { return labels_; }
  const label& operator[](int index) const { return labels_.at(static_cast<std::size_t>(index)); }

  const label* find(std::string_view name) const noexcept {
    for (const auto& l : labels_)
      if (l.name == name) return &l;
    return nullptr;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(labels_.size());
    for (const auto& l : labels_) out.push_back(l.name);
    return out;
  }

  friend bool operator==(const label_scale& a, const label_scale& b) noexcept {
    return a.labels_ == b.labels_;
  }
  friend bool operator!=(const label_scale& a, const label_scale& b) noexcept { return !(a == b); }

 private:
  std::vector<label> labels_;
};

/// The five-label scale a(negligible) < b(low) < c(intermediate) < d(high) < e(complete).
inline label_scale default_scale() {
  return label_scale({{0, "a", "negligible"},
                      {1, "b", "low"},
                      {2, "c", "intermediate"},
                      {3, "d", "high"},
                      {4, "e", "complete"}});
}

/// Builds a scale from bare names; the default names get their usual descriptions.
inline label_scale scale_from_names(std::span<const std::string> names) {
  if (names.size() == 5 && names[0] == "a" && names[1] == "b" && names[2] == "c" &&
      names[3] == "d" && names[4] == "e")
    return default_scale();
  std::vector<label> labels;
  labels.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    labels.push_back({static_cast<int>(i), names[i], ""});
  return label_scale(std::move(labels));
}

/// Maps a solved-problem count onto the scale. With total == L-1 the label index
/// equals `solved`; otherwise the proportional rule floor(solved*(L-1)/total)
/// applies, which keeps 0 -> lowest and total -> highest.
inline label label_from_solved(std::int64_t solved, std::int64_t total, const label_scale& scale) {
  if (total < 1) throw domain_error("label_from_solved: total must be >= 1");
  if (solved < 0 || solved > total)
    throw domain_error("label_from_solved: solved count " + std::to_string(solved) +
                       " outside [0, " + std::to_string(total) + "]");
  const auto bands = static_cast<std::int64_t>(scale.size()) - 1;
  const auto index = static_cast<int>((static_cast<__int128>(solved) * bands) / total);
  return scale[index];
}

}  // namespace stepfuzz
