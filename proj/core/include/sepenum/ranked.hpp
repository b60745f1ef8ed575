#pragma once

#include <cstddef>

#include "sepenum/graph.hpp"
#include "sepenum/small_minimal.hpp"

namespace sepenum {

/// One Lawler cell: separators of the input graph that contain `include`
/// and avoid every vertex saturated along the branch. `separator` is the
/// cell's best member and is what gets emitted when the entry is popped.
struct RankedEntry {
  Graph working_graph;  // input graph saturated at `excluded`
  Separator separator;
  VertexSet include;
  VertexSet excluded;
};

/// s,t-separators in non-decreasing cardinality (Lawler partitioning, with
/// exclusion by saturation and inclusion by vertex removal). Every output
/// separates s from t, no set repeats, and every minimal s,t-separator is
/// produced. Non-minimal separators may appear but are not all listed.
/// Ties are broken lexicographically. Returns the emission count.
std::size_t ranked_separators(const Graph& g, Terminals term,
                              const SeparatorSink& sink);

/// Exactly the minimum-cardinality s,t-separators, each once, in a
/// deterministic order. A branch survives only if its cell still holds a
/// separator of size kappa; the emitted set includes the committed vertices.
std::size_t minimum_separators(const Graph& g, Terminals term,
                               const SeparatorSink& sink);

}  // namespace sepenum
