#include "sepenum/vertex_set.hpp"

#include <iterator>

namespace sepenum {

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  out.members_.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(members_.begin(), members_.end(),
                      other.members_.begin(), other.members_.end(),
                      std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::with(VertexId v) const {
  VertexSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
  if (it == out.members_.end() || *it != v) out.members_.insert(it, v);
  return out;
}

}  // namespace sepenum
