#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace sepenum {

using VertexId = std::uint32_t;

/// Canonical vertex set: strictly increasing, duplicate-free. Equality and
/// ordering are lexicographic over the members, which makes it usable both
/// as a map key and as the tie-breaker in enumeration queues.
class VertexSet {
 public:
  using const_iterator = std::vector<VertexId>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> members)
      : VertexSet(from_unsorted(std::vector<VertexId>(members))) {}

  static VertexSet from_unsorted(std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    VertexSet out;
    out.members_ = std::move(members);
    return out;
  }

  /// Builds a set from a membership mask; vertex ids are mask indices.
  static VertexSet from_mask(const std::vector<bool>& mask) {
    VertexSet out;
    for (std::size_t v = 0; v < mask.size(); ++v) {
      if (mask[v]) out.members_.push_back(static_cast<VertexId>(v));
    }
    return out;
  }

  bool contains(VertexId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  VertexId front() const { return members_.front(); }
  const std::vector<VertexId>& members() const noexcept { return members_; }
  std::span<const VertexId> view() const noexcept { return members_; }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }
  bool intersects(const VertexSet& other) const;

  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  VertexSet with(VertexId v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<VertexId> members_;
};

/// A separator is a canonical vertex set; in every operation contract it is
/// disjoint from the terminal pair.
using Separator = VertexSet;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& set) const noexcept {
    // FNV-1a over the member ids.
    std::uint64_t h = 1469598103934665603ULL;
    for (VertexId v : set) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Size-first ordering used for deterministic output: (|X|, members).
inline bool size_then_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace sepenum
