#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sepenum/graph.hpp"

namespace sepenum {

/// Vertex-split residual network for Menger-style vertex cuts.
///
/// Every vertex v becomes v_in -> v_out with capacity 1; sources and the sink
/// get capacity "infinity" (n + 1, larger than any vertex cut). Each
/// undirected edge {u, v} becomes u_out -> v_in and v_out -> u_in with
/// infinite capacity. A super-source feeds the out-node of every source.
/// Augmentation is breadth-first, one unit at a time.
class FlowNetwork {
 public:
  /// Precondition: sources nonempty, sink not a source and not adjacent to
  /// any source (otherwise no finite vertex cut exists).
  FlowNetwork(const Graph& g, const VertexSet& sources, VertexId sink);

  /// Augments until no residual path remains. Returns the flow value.
  std::size_t run();

  std::size_t value() const noexcept { return value_; }

  /// Vertex cut bounding the residual reach of the super-source: minimum
  /// cut with inclusion-minimal source side.
  Separator closest_cut() const;
  /// Vertex cut bounding the residual co-reach of the sink: minimum cut with
  /// inclusion-maximal source side.
  Separator furthest_cut() const;

  /// Decomposes the flow into value() internally vertex-disjoint paths, each
  /// a vertex list from a source to the sink.
  std::vector<std::vector<VertexId>> paths() const;

  /// Flow conservation holds at every node other than super-source and sink
  /// and every internal arc carries 0 or 1 unit.
  bool is_consistent() const;

 private:
  struct Arc {
    std::uint32_t to;
    std::int64_t capacity;
    std::int64_t flow;
  };

  static std::uint32_t in_node(VertexId v) { return 2 * v; }
  static std::uint32_t out_node(VertexId v) { return 2 * v + 1; }
  std::uint32_t super_source() const {
    return static_cast<std::uint32_t>(2 * vertex_count_);
  }

  void add_arc(std::uint32_t from, std::uint32_t to, std::int64_t capacity);
  bool augment();
  std::vector<bool> source_reach() const;
  std::vector<bool> sink_coreach() const;

  std::size_t vertex_count_;
  VertexId sink_;
  std::vector<Arc> arcs_;  // arc i and i ^ 1 are mutual reverses
  std::vector<std::vector<std::uint32_t>> out_arcs_;
  std::vector<std::uint32_t> internal_arc_;  // per vertex, or npos
  std::size_t value_ = 0;
};

}  // namespace sepenum
