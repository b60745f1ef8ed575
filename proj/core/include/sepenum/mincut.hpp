#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sepenum/graph.hpp"

namespace sepenum {

/// Minimum s,t vertex cut with its Menger certificate.
struct CutResult {
  std::size_t kappa = 0;
  Separator separator;  // closest-to-s minimum separator
  std::vector<std::vector<VertexId>> disjoint_paths;
};

enum class CutSide { kClosest, kFurthest };

/// Raw result of one max-flow between a source set and a sink vertex.
struct VertexCut {
  std::size_t size = 0;
  Separator closest;
  Separator furthest;
  std::vector<std::vector<VertexId>> paths;
};

/// Max-flow between `sources` and `sink` in the split network. Returns
/// nullopt when a source is adjacent to the sink. A zero-size cut (sink
/// unreachable) is a valid result here; the public operations below turn it
/// into kAlreadySeparated.
std::optional<VertexCut> vertex_cut(const Graph& g, const VertexSet& sources,
                                    VertexId sink);

/// kappa_{s,t}(G) with the closest-to-s minimum separator and a set of
/// kappa internally vertex-disjoint s,t-paths.
CutResult kappa(const Graph& g, Terminals term);

/// Minimum (A, t)-vertex-separator. kClosest minimises the A-side component,
/// kFurthest maximises it.
Separator min_separator_between(const Graph& g, const VertexSet& a,
                                VertexId t, CutSide side);

/// A minimum s,t-separator containing `include`, or nullopt if none exists.
/// Decided by kappa(G - I) == kappa(G) - |I|.
std::optional<Separator> min_separator_containing(const Graph& g,
                                                  Terminals term,
                                                  const VertexSet& include);

/// A minimum-cardinality minimal s,t-separator avoiding `exclude`, computed
/// as the closest minimum separator of Sat(G, exclude). nullopt when the
/// saturated graph has s and t adjacent.
std::optional<Separator> min_separator_excluding(const Graph& g,
                                                 Terminals term,
                                                 const VertexSet& exclude);

/// Counts max-flow computations on the current thread while alive. Nested
/// counters shadow the outer one until destroyed.
class FlowCallCounter {
 public:
  FlowCallCounter();
  ~FlowCallCounter();
  FlowCallCounter(const FlowCallCounter&) = delete;
  FlowCallCounter& operator=(const FlowCallCounter&) = delete;

  std::uint64_t count() const noexcept { return count_; }

 private:
  friend void note_flow_call() noexcept;
  std::uint64_t count_ = 0;
  FlowCallCounter* previous_;
};

void note_flow_call() noexcept;

}  // namespace sepenum
